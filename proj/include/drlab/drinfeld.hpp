#pragma once

#include <cstdint>
#include <vector>

#include "drlab/global_field.hpp"

namespace drlab {

// Embedding of the constant field F_q into the ground field's coefficient
// type: identity for the base instance, constant rational function for the
// tower instance F_q(T)(u).
inline FqElem embed_fq(const FqElem& /*sample*/, const FqElem& c) { return c; }
inline RF embed_fq(const RF& sample, const FqElem& c) {
    return RF::from_poly(PolyT::constant(c), sample.sample());
}

// Additive polynomial sum c_i x^{q^i} over the field of fractions of C[var].
template <class C>
class SkewPoly {
public:
    using Elem = RatFunc<C>;

    SkewPoly(std::vector<Elem> coeffs, std::int64_t q) : coeffs_(std::move(coeffs)), q_(q) {
        trim();
    }
    static SkewPoly zero(const Elem& sample, std::int64_t q) {
        (void)sample;
        return SkewPoly({}, q);
    }
    static SkewPoly identity(const Elem& sample, std::int64_t q) {
        return SkewPoly({Elem::one_like(sample)}, q);
    }

    const std::vector<Elem>& coeffs() const { return coeffs_; }
    std::int64_t q() const { return q_; }
    bool is_zero() const { return coeffs_.empty(); }
    // Skew degree n: the polynomial is sum c_i x^{q^i}, i <= n.
    std::int64_t skew_degree() const { return static_cast<std::int64_t>(coeffs_.size()) - 1; }
    Elem coeff(std::int64_t i) const {
        if (i < 0 || i > skew_degree()) throw domain_error("skew coefficient out of range");
        return coeffs_[static_cast<size_t>(i)];
    }

    bool operator==(const SkewPoly& o) const { return q_ == o.q_ && coeffs_ == o.coeffs_; }
    bool operator!=(const SkewPoly& o) const { return !(*this == o); }

    SkewPoly operator+(const SkewPoly& o) const {
        std::vector<Elem> r = coeffs_;
        for (size_t i = r.size(); i < o.coeffs_.size(); ++i)
            r.push_back(Elem::zero_like(o.coeffs_[i]));
        for (size_t i = 0; i < o.coeffs_.size(); ++i) r[i] = r[i] + o.coeffs_[i];
        return SkewPoly(std::move(r), q_);
    }

    Elem eval(const Elem& x) const {
        Elem acc = Elem::zero_like(x);
        for (size_t i = 0; i < coeffs_.size(); ++i) {
            if (coeffs_[i].is_zero()) continue;
            acc = acc + coeffs_[i] * pow_q(x, static_cast<unsigned>(i), q_);
        }
        return acc;
    }

private:
    void trim() {
        while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
    }
    std::vector<Elem> coeffs_;
    std::int64_t q_;
};

// Composition f(g(x)); twist rule c x^{q^i} after d x^{q^j} gives c d^{q^i} x^{q^{i+j}}.
template <class C>
SkewPoly<C> skew_mul(const SkewPoly<C>& f, const SkewPoly<C>& g) {
    if (f.q() != g.q()) throw config_mismatch("skew polynomials over different q");
    if (f.is_zero() || g.is_zero()) return SkewPoly<C>({}, f.q());
    using Elem = RatFunc<C>;
    std::vector<Elem> r(static_cast<size_t>(f.skew_degree() + g.skew_degree()) + 1,
                        Elem::zero_like(f.coeffs()[0]));
    for (size_t i = 0; i < f.coeffs().size(); ++i) {
        if (f.coeffs()[i].is_zero()) continue;
        for (size_t j = 0; j < g.coeffs().size(); ++j) {
            if (g.coeffs()[j].is_zero()) continue;
            r[i + j] = r[i + j] + f.coeffs()[i] * pow_q(g.coeffs()[j], static_cast<unsigned>(i), f.q());
        }
    }
    return SkewPoly<C>(std::move(r), f.q());
}

// Point of weighted projective space; equality is scaling equivalence,
// decided by cross-multiplication (no root extraction).
template <class C>
struct WeightedPointT {
    std::vector<RatFunc<C>> coords;
    std::vector<std::int64_t> weights;

    bool operator==(const WeightedPointT& o) const {
        if (weights != o.weights || coords.size() != o.coords.size()) return false;
        size_t pivot = coords.size();
        for (size_t k = 0; k < coords.size(); ++k) {
            if (coords[k].is_zero() != o.coords[k].is_zero()) return false;
            if (pivot == coords.size() && !coords[k].is_zero()) pivot = k;
        }
        if (pivot == coords.size()) throw domain_error("weighted point with all coordinates zero");
        // x_j^{w_k} y_k^{w_j} = y_j^{w_k} x_k^{w_j} against the pivot k
        for (size_t j = 0; j < coords.size(); ++j) {
            if (j == pivot || coords[j].is_zero()) continue;
            auto lhs = coords[j].pow(weights[pivot]) * o.coords[pivot].pow(weights[j]);
            auto rhs = o.coords[j].pow(weights[pivot]) * coords[pivot].pow(weights[j]);
            if (lhs != rhs) return false;
        }
        return true;
    }
    bool operator!=(const WeightedPointT& o) const { return !(*this == o); }
};

enum class ReductionType { Good, PotentiallyGood, PersistentlyBad };

inline const char* to_string(ReductionType t) {
    switch (t) {
        case ReductionType::Good: return "good";
        case ReductionType::PotentiallyGood: return "potentially-good";
        case ReductionType::PersistentlyBad: return "persistently-bad";
    }
    return "?";
}

inline Int q_power(std::int64_t q, std::int64_t k) {
    Int r = 1;
    for (std::int64_t i = 0; i < k; ++i) r *= q;
    return r;
}

// Rank-r module over A = F_q[T] given by phi_T(x) = Tx + a_1 x^q + ... + a_r x^{q^r}.
// C = FqElem: the base instance over F_q(T).  C = RF: the tower instance over
// F_q(T)(u), where T acts through the constant T.
template <class C>
class DrinfeldModuleT {
public:
    using Elem = RatFunc<C>;

    DrinfeldModuleT(FqConfigPtr cfg, Elem t_image, std::vector<Elem> coeffs)
        : cfg_(std::move(cfg)), t_image_(std::move(t_image)), coeffs_(std::move(coeffs)) {
        if (coeffs_.empty() || coeffs_.back().is_zero())
            throw domain_error("Drinfeld module requires a nonzero leading coefficient a_r");
    }

    const FqConfigPtr& config() const { return cfg_; }
    std::int64_t q() const { return cfg_->q(); }
    std::int64_t rank() const { return static_cast<std::int64_t>(coeffs_.size()); }
    const Elem& t_image() const { return t_image_; }
    // a_j for 1 <= j <= rank
    const Elem& a(std::int64_t j) const {
        if (j < 1 || j > rank()) throw domain_error("coefficient index outside 1..rank");
        return coeffs_[static_cast<size_t>(j - 1)];
    }
    const std::vector<Elem>& coeffs() const { return coeffs_; }

    SkewPoly<C> phi_T() const {
        std::vector<Elem> c;
        c.reserve(coeffs_.size() + 1);
        c.push_back(t_image_);
        for (const auto& a : coeffs_) c.push_back(a);
        return SkewPoly<C>(std::move(c), q());
    }

    // phi_a for a in A = F_q[T], by Horner over composition.
    SkewPoly<C> phi(const PolyT& a) const {
        const Elem sample = Elem::one_like(coeffs_.back());
        SkewPoly<C> pt = phi_T();
        SkewPoly<C> acc = SkewPoly<C>::zero(sample, q());
        for (std::int64_t i = a.degree(); i >= 0; --i) {
            acc = skew_mul(acc, pt);
            const FqElem& ci = a.coeff(i);
            if (!ci.is_zero()) {
                Elem c = Elem::from_poly(
                    UPoly<C>::constant(embed_fq(sample.sample(), ci), sample.var()),
                    sample.sample());
                acc = acc + SkewPoly<C>({c}, q());
            }
        }
        return acc;
    }

    // One application of phi_T to a point; the canonical-height iteration step.
    Elem step(const Elem& x) const {
        Elem acc = t_image_ * x;
        Elem xq = x;
        for (std::int64_t j = 1; j <= rank(); ++j) {
            xq = pow_q(xq, 1, q());
            if (!coeffs_[static_cast<size_t>(j - 1)].is_zero())
                acc = acc + coeffs_[static_cast<size_t>(j - 1)] * xq;
        }
        return acc;
    }

    bool operator==(const DrinfeldModuleT& o) const {
        return cfg_->same_as(*o.cfg_) && t_image_ == o.t_image_ && coeffs_ == o.coeffs_;
    }
    bool operator!=(const DrinfeldModuleT& o) const { return !(*this == o); }

private:
    FqConfigPtr cfg_;
    Elem t_image_;
    std::vector<Elem> coeffs_;
};

using DrinfeldModule = DrinfeldModuleT<FqElem>;

// The isomorphic model psi with alpha psi_T(x) = phi_T(alpha x): b_j = alpha^{q^j - 1} a_j.
template <class C>
DrinfeldModuleT<C> conjugate(const DrinfeldModuleT<C>& m, const RatFunc<C>& alpha) {
    if (alpha.is_zero()) throw domain_error("conjugation by zero");
    std::vector<RatFunc<C>> b;
    b.reserve(static_cast<size_t>(m.rank()));
    for (std::int64_t j = 1; j <= m.rank(); ++j)
        b.push_back(alpha.pow(q_power(m.q(), j) - 1) * m.a(j));
    return DrinfeldModuleT<C>(m.config(), m.t_image(), std::move(b));
}

template <class C>
WeightedPointT<C> j_invariant(const DrinfeldModuleT<C>& m) {
    WeightedPointT<C> p;
    for (std::int64_t j = 1; j <= m.rank(); ++j) {
        p.coords.push_back(m.a(j));
        p.weights.push_back((q_power(m.q(), j) - 1).template convert_to<std::int64_t>());
    }
    return p;
}

// c_v(phi) = (1/(q^r - 1)) log|a_r^{-1}|_v = v(a_r) deg(v) / (q^r - 1).
template <class C>
Rat c_v(const DrinfeldModuleT<C>& m, const PlaceT<C>& v) {
    return Rat(Int(valuation(m.a(m.rank()), v)) * v.degree()) /
           Rat(q_power(m.q(), m.rank()) - 1);
}

// Local contribution to h(j_phi): max_j log|a_j|_v/(q^j - 1) + c_v(phi) >= 0.
template <class C>
Rat j_phi_v(const DrinfeldModuleT<C>& m, const PlaceT<C>& v) {
    Rat best;
    bool first = true;
    for (std::int64_t j = 1; j <= m.rank(); ++j) {
        if (m.a(j).is_zero()) continue;
        Rat t = log_abs(m.a(j), v) / (q_power(m.q(), j) - 1);
        if (first || t > best) best = t;
        first = false;
    }
    return best + c_v(m, v);
}

// log B_T at v: largest root magnitude of phi_T(x)/x (rightmost Newton-polygon
// slope, max_{k < top} (log|c_k| - log|c_top|)/(e_top - e_k) over x-exponents
// e_j = q^j - 1), plus (1/(q^r - 1)) log+|T^{-1}|_v.
template <class C>
Rat B_T_v(const DrinfeldModuleT<C>& m, const PlaceT<C>& v) {
    std::vector<std::pair<Int, Rat>> pts;  // (exponent of x, log|coeff|_v)
    if (!m.t_image().is_zero()) pts.emplace_back(0, log_abs(m.t_image(), v));
    for (std::int64_t j = 1; j <= m.rank(); ++j)
        if (!m.a(j).is_zero()) pts.emplace_back(q_power(m.q(), j) - 1, log_abs(m.a(j), v));
    Rat slope = 0;
    bool first = true;
    const auto& top = pts.back();
    for (size_t k = 0; k + 1 < pts.size(); ++k) {
        Rat s = (pts[k].second - top.second) / Rat(top.first - pts[k].first);
        if (first || s > slope) slope = s;
        first = false;
    }
    if (first) slope = 0;  // phi_T(x)/x has a single term: only the root 0
    Rat tail = rat_pos(log_abs(m.t_image().inv(), v)) / (q_power(m.q(), m.rank()) - 1);
    return slope + tail;
}

// Declared here, implemented with module-minimality machinery.
ReductionType reduction_type(const DrinfeldModule& m, const Place& v);

}  // namespace drlab
