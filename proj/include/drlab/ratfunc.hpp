#pragma once

#include "drlab/upoly.hpp"

namespace drlab {

// Element of the fraction field of C[var]: coprime numerator/denominator,
// denominator monic.  Canonical form is unique, so == is coefficient equality.
template <class C>
class RatFunc {
public:
    RatFunc() = default;
    RatFunc(UPoly<C> num, UPoly<C> den) : num_(std::move(num)), den_(std::move(den)) {
        canonicalize();
    }
    static RatFunc from_poly(UPoly<C> p, const C& sample) {
        RatFunc r;
        char var = p.var();
        r.num_ = std::move(p);
        r.den_ = UPoly<C>::constant(C::one_like(sample), var);
        return r;
    }
    // Adopts num/den already known to be canonical (coprime, monic den).
    static RatFunc raw(UPoly<C> num, UPoly<C> den) {
        RatFunc r;
        r.num_ = std::move(num);
        r.den_ = std::move(den);
        return r;
    }
    static RatFunc zero_like(const RatFunc& x) {
        return from_poly(UPoly<C>::zero(x.var()), x.sample());
    }
    static RatFunc one_like(const RatFunc& x) {
        return from_poly(UPoly<C>::constant(C::one_like(x.sample()), x.var()), x.sample());
    }

    const UPoly<C>& num() const { return num_; }
    const UPoly<C>& den() const { return den_; }
    char var() const { return den_.var(); }
    // Any coefficient, for field context.
    const C& sample() const {
        return num_.is_zero() ? den_.coeffs()[0] : num_.coeffs()[0];
    }

    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_.is_one() && den_.is_one(); }
    bool is_poly() const { return den_.is_one(); }

    bool operator==(const RatFunc& o) const { return num_ == o.num_ && den_ == o.den_; }
    bool operator!=(const RatFunc& o) const { return !(*this == o); }

    RatFunc operator+(const RatFunc& o) const {
        if (is_zero()) return o;
        if (o.is_zero()) return *this;
        if (den_ == o.den_) return RatFunc(num_ + o.num_, den_);
        return RatFunc(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
    }
    RatFunc operator-() const {
        RatFunc r = *this;
        r.num_ = -r.num_;
        return r;
    }
    RatFunc operator-(const RatFunc& o) const { return *this + (-o); }
    RatFunc operator*(const RatFunc& o) const {
        if (is_zero() || o.is_zero()) return zero_like(*this);
        return RatFunc(num_ * o.num_, den_ * o.den_);
    }
    RatFunc inv() const {
        if (is_zero()) throw division_by_zero();
        RatFunc r;
        C lead_inv = num_.lead().inv();
        r.num_ = den_.scaled(lead_inv);
        r.den_ = num_.scaled(lead_inv);
        return r;
    }
    RatFunc operator/(const RatFunc& o) const { return *this * o.inv(); }

    RatFunc pow(const Int& n) const {
        if (n < 0) return inv().pow(-n);
        RatFunc result = one_like(*this);
        if (n == 0) return result;
        RatFunc base = *this;
        Int m = n;
        while (m > 0) {
            if ((m & 1) != 0) result = result * base;
            base = base * base;
            m >>= 1;
        }
        return result;
    }

private:
    void canonicalize() {
        if (den_.is_zero()) throw division_by_zero();
        if (num_.is_zero()) {
            den_ = UPoly<C>::constant(C::one_like(den_.coeffs()[0]), den_.var());
            return;
        }
        UPoly<C> g = upoly_gcd(num_, den_);
        if (g.degree() > 0) {
            num_ = num_ / g;
            den_ = den_ / g;
        }
        C lead_inv = den_.lead().inv();
        num_ = num_.scaled(lead_inv);
        den_ = den_.scaled(lead_inv);
    }

    UPoly<C> num_;
    UPoly<C> den_;
};

template <class C>
RatFunc<C> pow_q(const RatFunc<C>& x, unsigned k, std::int64_t q) {
    if (k == 0 || x.is_zero()) return x;
    // num and den stay coprime, and den stays monic, under f -> f^{q^k},
    // so no re-canonicalization is needed.
    return RatFunc<C>::raw(pow_q(x.num(), k, q), pow_q(x.den(), k, q));
}

}  // namespace drlab
