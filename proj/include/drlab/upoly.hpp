#pragma once

#include <cstdint>
#include <vector>

#include "drlab/errors.hpp"
#include "drlab/fq.hpp"

namespace drlab {

template <class C>
struct default_var {
    static constexpr char value = 'u';
};
template <>
struct default_var<FqElem> {
    static constexpr char value = 'T';
};

// Dense univariate polynomial over a coefficient field C, lowest degree
// first.  The zero polynomial has an empty coefficient vector.  Used with
// C = FqElem (the ring F_q[T]) and C = RatFunc<FqElem> (the tower F_q(T)[u]).
template <class C>
class UPoly {
public:
    UPoly() = default;
    explicit UPoly(std::vector<C> coeffs, char var = default_var<C>::value)
        : coeffs_(std::move(coeffs)), var_(var) {
        trim();
    }
    static UPoly zero(char var = default_var<C>::value) { return UPoly({}, var); }
    static UPoly constant(const C& c, char var = default_var<C>::value) {
        return UPoly({c}, var);
    }
    // The indeterminate itself, given any sample coefficient for context.
    static UPoly gen(const C& sample, char var = default_var<C>::value) {
        return UPoly({C::zero_like(sample), C::one_like(sample)}, var);
    }

    const std::vector<C>& coeffs() const { return coeffs_; }
    char var() const { return var_; }
    bool is_zero() const { return coeffs_.empty(); }
    std::int64_t degree() const { return static_cast<std::int64_t>(coeffs_.size()) - 1; }
    const C& lead() const {
        if (is_zero()) throw domain_error("leading coefficient of zero polynomial");
        return coeffs_.back();
    }
    const C& coeff(std::int64_t i) const {
        if (i < 0 || i >= static_cast<std::int64_t>(coeffs_.size()))
            throw domain_error("coefficient index out of range");
        return coeffs_[static_cast<size_t>(i)];
    }
    bool is_one() const { return coeffs_.size() == 1 && coeffs_[0].is_one(); }
    bool is_monic() const { return !is_zero() && coeffs_.back().is_one(); }

    bool operator==(const UPoly& o) const { return var_ == o.var_ && coeffs_ == o.coeffs_; }
    bool operator!=(const UPoly& o) const { return !(*this == o); }

    UPoly operator+(const UPoly& o) const {
        check_var(o);
        std::vector<C> r = coeffs_;
        if (o.coeffs_.size() > r.size()) {
            r.reserve(o.coeffs_.size());
            for (size_t i = r.size(); i < o.coeffs_.size(); ++i)
                r.push_back(C::zero_like(o.coeffs_[i]));
        }
        for (size_t i = 0; i < o.coeffs_.size(); ++i) r[i] = r[i] + o.coeffs_[i];
        return UPoly(std::move(r), var_);
    }

    UPoly operator-() const {
        std::vector<C> r;
        r.reserve(coeffs_.size());
        for (const C& c : coeffs_) r.push_back(-c);
        return UPoly(std::move(r), var_);
    }

    UPoly operator-(const UPoly& o) const { return *this + (-o); }

    UPoly operator*(const UPoly& o) const {
        check_var(o);
        if (is_zero() || o.is_zero()) return zero(var_);
        return UPoly(mul_impl(coeffs_, o.coeffs_), var_);
    }

    UPoly scaled(const C& c) const {
        if (c.is_zero()) return zero(var_);
        std::vector<C> r;
        r.reserve(coeffs_.size());
        for (const C& a : coeffs_) r.push_back(a * c);
        return UPoly(std::move(r), var_);
    }

    // Multiply by var^k.
    UPoly shifted(std::int64_t k) const {
        if (is_zero() || k == 0) return *this;
        std::vector<C> r(static_cast<size_t>(k), C::zero_like(coeffs_[0]));
        r.insert(r.end(), coeffs_.begin(), coeffs_.end());
        return UPoly(std::move(r), var_);
    }

    UPoly monic() const {
        if (is_zero()) return *this;
        return scaled(lead().inv());
    }

    // Quotient and remainder; divisor must be nonzero.
    std::pair<UPoly, UPoly> divmod(const UPoly& d) const {
        check_var(d);
        if (d.is_zero()) throw division_by_zero();
        if (degree() < d.degree()) return {zero(var_), *this};
        C lead_inv = d.lead().inv();
        std::vector<C> rem = coeffs_;
        std::vector<C> quo(static_cast<size_t>(degree() - d.degree() + 1),
                           C::zero_like(d.lead()));
        for (std::int64_t i = degree(); i >= d.degree(); --i) {
            C c = rem[static_cast<size_t>(i)] * lead_inv;
            if (!c.is_zero()) {
                quo[static_cast<size_t>(i - d.degree())] = c;
                for (std::int64_t j = 0; j <= d.degree(); ++j)
                    rem[static_cast<size_t>(i - d.degree() + j)] =
                        rem[static_cast<size_t>(i - d.degree() + j)] -
                        c * d.coeffs_[static_cast<size_t>(j)];
            }
        }
        rem.resize(static_cast<size_t>(d.degree() > 0 ? d.degree() : 0));
        return {UPoly(std::move(quo), var_), UPoly(std::move(rem), var_)};
    }

    UPoly operator%(const UPoly& d) const { return divmod(d).second; }
    UPoly operator/(const UPoly& d) const { return divmod(d).first; }

    C eval(const C& x) const {
        C acc = C::zero_like(x);
        for (size_t i = coeffs_.size(); i-- > 0;) acc = acc * x + coeffs_[i];
        return acc;
    }

    UPoly derivative() const {
        if (degree() < 1) return zero(var_);
        std::vector<C> r;
        r.reserve(coeffs_.size() - 1);
        for (size_t i = 1; i < coeffs_.size(); ++i) {
            C c = C::zero_like(coeffs_[i]);
            // i * coeff in the prime field
            for (size_t k = 0; k < i; ++k) c = c + coeffs_[i];
            r.push_back(c);
        }
        return UPoly(std::move(r), var_);
    }

    UPoly pow(std::int64_t n) const {
        if (n < 0) throw domain_error("negative polynomial power");
        UPoly result = is_zero() ? *this : constant(C::one_like(coeffs_[0]), var_);
        if (n == 0) {
            if (is_zero()) throw domain_error("0^0 polynomial power");
            return result;
        }
        UPoly base = *this;
        while (n > 0) {
            if (n & 1) result = result * base;
            base = base * base;
            n >>= 1;
        }
        return result;
    }

private:
    void check_var(const UPoly& o) const {
        if (var_ != o.var_) throw config_mismatch("mixed polynomial indeterminates");
    }

    void trim() {
        while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
    }

    static std::vector<C> mul_impl(const std::vector<C>& a, const std::vector<C>& b) {
        static constexpr size_t kKaratsubaThreshold = 32;
        if (a.size() < kKaratsubaThreshold || b.size() < kKaratsubaThreshold)
            return mul_school(a, b);
        return mul_karatsuba(a, b);
    }

    static std::vector<C> mul_school(const std::vector<C>& a, const std::vector<C>& b) {
        std::vector<C> r(a.size() + b.size() - 1, C::zero_like(a[0]));
        for (size_t i = 0; i < a.size(); ++i) {
            if (a[i].is_zero()) continue;
            for (size_t j = 0; j < b.size(); ++j) {
                if (b[j].is_zero()) continue;
                r[i + j] = r[i + j] + a[i] * b[j];
            }
        }
        return r;
    }

    static std::vector<C> mul_karatsuba(const std::vector<C>& a, const std::vector<C>& b) {
        size_t m = std::max(a.size(), b.size()) / 2;
        auto split = [m](const std::vector<C>& f) {
            std::vector<C> lo(f.begin(), f.begin() + std::min(m, f.size()));
            std::vector<C> hi(f.begin() + std::min(m, f.size()), f.end());
            return std::pair(std::move(lo), std::move(hi));
        };
        auto [a0, a1] = split(a);
        auto [b0, b1] = split(b);
        const C z = C::zero_like(a[0]);
        auto vtrim = [](std::vector<C>& f) {
            while (!f.empty() && f.back().is_zero()) f.pop_back();
        };
        vtrim(a0);
        vtrim(a1);
        vtrim(b0);
        vtrim(b1);
        auto mul0 = [&](const std::vector<C>& x, const std::vector<C>& y) -> std::vector<C> {
            if (x.empty() || y.empty()) return {};
            return mul_impl(x, y);
        };
        auto vadd = [&](std::vector<C> x, const std::vector<C>& y) {
            if (y.size() > x.size()) x.resize(y.size(), z);
            for (size_t i = 0; i < y.size(); ++i) x[i] = x[i] + y[i];
            return x;
        };
        auto vsub = [&](std::vector<C> x, const std::vector<C>& y) {
            if (y.size() > x.size()) x.resize(y.size(), z);
            for (size_t i = 0; i < y.size(); ++i) x[i] = x[i] - y[i];
            return x;
        };
        std::vector<C> z0 = mul0(a0, b0);
        std::vector<C> z2 = mul0(a1, b1);
        std::vector<C> z1 = vsub(vsub(mul0(vadd(a0, a1), vadd(b0, b1)), z0), z2);
        std::vector<C> r(a.size() + b.size() - 1, z);
        for (size_t i = 0; i < z0.size(); ++i) r[i] = r[i] + z0[i];
        for (size_t i = 0; i < z1.size(); ++i) r[i + m] = r[i + m] + z1[i];
        for (size_t i = 0; i < z2.size(); ++i) r[i + 2 * m] = r[i + 2 * m] + z2[i];
        return r;
    }

    std::vector<C> coeffs_;
    char var_ = default_var<C>::value;
};

// Monic gcd; gcd(0, 0) = 0, gcd(f, 0) = monic(f).
template <class C>
UPoly<C> upoly_gcd(UPoly<C> a, UPoly<C> b) {
    while (!b.is_zero()) {
        UPoly<C> r = a % b;
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

// f -> f^{q^k}: coefficientwise q^k-power plus index stretch (char p Frobenius).
template <class C>
UPoly<C> pow_q(const UPoly<C>& f, unsigned k, std::int64_t q) {
    if (k == 0 || f.is_zero()) return f;
    std::int64_t stride = 1;
    for (unsigned i = 0; i < k; ++i) stride *= q;
    std::vector<C> r(static_cast<size_t>(f.degree() * stride + 1),
                     C::zero_like(f.coeffs()[0]));
    for (size_t i = 0; i < f.coeffs().size(); ++i)
        r[i * static_cast<size_t>(stride)] = pow_q(f.coeffs()[i], k, q);
    return UPoly<C>(std::move(r), f.var());
}

// Divisibility multiplicity: largest m with d^m | f (f, d nonzero, deg d >= 1).
template <class C>
std::int64_t multiplicity(UPoly<C> f, const UPoly<C>& d, std::int64_t cap = -1) {
    if (f.is_zero() || d.degree() < 1) throw domain_error("multiplicity of invalid pair");
    std::int64_t m = 0;
    while (cap < 0 || m < cap) {
        auto [quo, rem] = f.divmod(d);
        if (!rem.is_zero()) break;
        f = std::move(quo);
        ++m;
    }
    return m;
}

}  // namespace drlab
