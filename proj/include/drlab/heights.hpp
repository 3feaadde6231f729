#pragma once

#include <optional>
#include <set>
#include <vector>

#include "drlab/drinfeld.hpp"

namespace drlab {

template <class C>
struct instance_traits;
template <>
struct instance_traits<FqElem> {  // L = F_q(T)
    static constexpr bool tower = false;
};
template <>
struct instance_traits<RF> {  // L' = F(u), F = F_q(T); every place is finite
    static constexpr bool tower = true;
};

// Exact rational bracket [lo, hi]; exact means lo == hi by construction.
struct HeightInterval {
    Rat lo, hi;
    bool exact = false;

    static HeightInterval exactly(Rat v) { return {v, v, true}; }
    static HeightInterval range(Rat lo, Rat hi) {
        if (lo > hi) throw domain_error("inverted height interval");
        bool ex = lo == hi;
        return {std::move(lo), std::move(hi), ex};
    }

    Rat mid() const { return (lo + hi) / 2; }
    Rat width() const { return hi - lo; }
    bool contains(const Rat& v) const { return lo <= v && v <= hi; }
    bool intersects(const HeightInterval& o) const { return lo <= o.hi && o.lo <= hi; }

    HeightInterval operator+(const HeightInterval& o) const {
        return {lo + o.lo, hi + o.hi, exact && o.exact};
    }
    HeightInterval operator+(const Rat& c) const { return {lo + c, hi + c, exact}; }
    HeightInterval scaled(const Rat& c) const {  // c >= 0
        return {lo * c, hi * c, exact};
    }
};

struct GreenResult {
    HeightInterval value;
    std::optional<std::int64_t> escaped_at;
    bool closed_form = false;
};

struct ZimmerBounds {
    Rat C1, C2, h_phi;
    Rat B_lower;  // C1 + h_phi / (1 - q^{-r});  hhat - h >= -B_lower
    Rat B_upper;  // h_phi + C2;                 hhat - h <= B_upper
    Rat B;        // max(B_lower, B_upper)
};

inline ZimmerBounds make_zimmer(Rat c1, Rat c2, Rat hphi, std::int64_t q, std::int64_t r) {
    ZimmerBounds z;
    z.C1 = std::move(c1);
    z.C2 = std::move(c2);
    z.h_phi = std::move(hphi);
    Rat qr(q_power(q, r));
    z.B_lower = z.C1 + z.h_phi / (1 - 1 / qr);
    z.B_upper = z.h_phi + z.C2;
    z.B = rat_max(z.B_lower, z.B_upper);
    return z;
}

// h(phi) = h(j_phi) + h(a_r)/(q^r - 1), with the weighted height of j taken
// over an explicit covering place set (tower-safe).
template <class C>
Rat h_phi_over(const std::set<PlaceT<C>>& places, const DrinfeldModuleT<C>& m) {
    std::vector<RatFunc<C>> coords;
    std::vector<std::int64_t> weights;
    for (std::int64_t j = 1; j <= m.rank(); ++j) {
        coords.push_back(m.a(j));
        weights.push_back((q_power(m.q(), j) - 1).template convert_to<std::int64_t>());
    }
    Rat hj = weighted_height_over(places, coords, weights);
    return hj + naive_height(m.a(m.rank())) / Rat(q_power(m.q(), m.rank()) - 1);
}

Rat h_phi(const DrinfeldModule& m);  // base instance; gathers support itself

template <class C>
ZimmerBounds zimmer_bounds_over(const std::set<PlaceT<C>>& places, const DrinfeldModuleT<C>& m) {
    const std::int64_t q = m.q(), r = m.rank();
    Rat c1 = 0, c2 = 0;
    if (!instance_traits<C>::tower) {
        Rat qr(q_power(q, r));
        c1 = qr / ((qr - 1) * (qr - 1));
        c2 = 1 / (qr - 1);
    }
    return make_zimmer(c1, c2, h_phi_over(places, m), q, r);
}

ZimmerBounds zimmer_bounds(const DrinfeldModule& m);

// Covering place set for the base instance: infinity, the support of every
// coefficient, and (if given) the support of a point.
std::set<Place> bad_places(const DrinfeldModule& m, const RF* x = nullptr);

// Green's function G_{phi,v}(x) by exact orbit iteration with escape
// detection.  Exact when the orbit escapes past B_T (closed form), dies at 0,
// or the good-reduction certificate applies; otherwise a sound interval.
template <class C>
GreenResult green_local(const DrinfeldModuleT<C>& m, const PlaceT<C>& v, const RatFunc<C>& x,
                        std::int64_t n_max = 8) {
    if (n_max < 1) throw domain_error("green_local requires n_max >= 1");
    GreenResult res;
    if (x.is_zero()) {
        res.value = HeightInterval::exactly(Rat(0));
        res.closed_form = true;
        return res;
    }
    const std::int64_t q = m.q(), r = m.rank();
    // good reduction + integral point: the orbit never leaves the valuation ring
    bool integral = valuation(m.t_image(), v) >= 0 && valuation(x, v) >= 0;
    for (std::int64_t j = 1; integral && j <= r; ++j)
        if (!m.a(j).is_zero() && valuation(m.a(j), v) < 0) integral = false;
    if (integral && valuation(m.a(r), v) == 0) {
        res.value = HeightInterval::exactly(Rat(0));
        res.closed_form = true;
        return res;
    }
    const Rat logB = B_T_v(m, v);
    const Rat c = c_v(m, v);
    RatFunc<C> y = x;
    Rat scale = 1;  // q^{-rn}
    const Rat qr_inv = 1 / Rat(q_power(q, r));
    for (std::int64_t n = 0; n <= n_max; ++n) {
        if (y.is_zero()) {  // hit a torsion point of phi_T^n
            res.value = HeightInterval::exactly(Rat(0));
            res.closed_form = true;
            return res;
        }
        if (log_abs(y, v) > logB) {  // escape: G(y) = log|y| - c exactly
            res.value = HeightInterval::exactly(scale * (log_abs(y, v) - c));
            res.escaped_at = n;
            res.closed_form = true;
            return res;
        }
        // iterate degrees grow like q^{rn}; give up (soundly) past the budget
        if (n == n_max || naive_height(y) > Rat(512)) break;
        y = m.step(y);
        scale *= qr_inv;
    }
    // No escape within n_max steps.  If the orbit escapes at some later step
    // k > n_max, the first escaping iterate came from the bounded region, so
    // log|y_k| <= max_j (log|c_j| + q^j max(0, log B_T)), and the escape value
    // carries a factor q^{-rk} <= q^{-r(n_max+1)}.  Otherwise G = 0.
    Rat m_up = 0;
    Rat logB_plus = rat_pos(logB);
    if (!m.t_image().is_zero()) m_up = rat_max(m_up, log_abs(m.t_image(), v) + logB_plus);
    for (std::int64_t j = 1; j <= r; ++j) {
        if (m.a(j).is_zero()) continue;
        m_up = rat_max(m_up, log_abs(m.a(j), v) + Rat(q_power(q, j)) * logB_plus);
    }
    Rat up = scale * qr_inv * rat_pos(m_up - c);
    res.value = HeightInterval::range(Rat(0), up);
    return res;
}

// Local height lambda_{phi,v}(x) = log|x^{-1}|_v + G_{phi,v}(x) + c_v(phi).
template <class C>
HeightInterval lambda_local(const DrinfeldModuleT<C>& m, const PlaceT<C>& v, const RatFunc<C>& x,
                            std::int64_t n_max = 8) {
    if (x.is_zero()) throw domain_error("local height has a pole at the origin");
    GreenResult g = green_local(m, v, x, n_max);
    return g.value + (log_abs(x.inv(), v) + c_v(m, v));
}

// Canonical height, method A (global): hhat(x) = q^{-rN} h(phi_{T^N}(x)) up to
// the Zimmer-bound window.  Works in both instances given the bounds.
template <class C>
HeightInterval canonical_height_with(const DrinfeldModuleT<C>& m, const RatFunc<C>& x,
                                     const Rat& tol, const ZimmerBounds& zb) {
    if (tol <= 0) throw domain_error("tolerance must be positive");
    if (x.is_zero()) return HeightInterval::exactly(Rat(0));
    const Rat qr(q_power(m.q(), m.rank()));
    std::int64_t n = 1;
    Rat scale = 1 / qr;
    while (scale * zb.B > tol / 2 && n < 64) {
        ++n;
        scale /= qr;
    }
    RatFunc<C> y = x;
    for (std::int64_t i = 0; i < n; ++i) y = m.step(y);
    Rat hy = naive_height(y);
    Rat lo = rat_max(Rat(0), scale * (hy - zb.B_lower));
    Rat hi = rat_max(Rat(0), scale * (hy + zb.B_upper));
    return HeightInterval::range(lo, hi);
}

inline constexpr std::int64_t kDefaultNMax = 8;

HeightInterval canonical_height(const DrinfeldModule& m, const RF& x, const Rat& tol);

// Cheap certified positive lower bound for hhat on non-torsion points: the
// first iterate whose height clears B_lower.  Returns 0 for torsion.
Rat canonical_height_lower(const DrinfeldModule& m, const RF& x);
Rat canonical_height_lower(const DrinfeldModule& m, const RF& x, const ZimmerBounds& zb);

// Canonical height, method B (local): sum of Green's functions over
// S = {infinity} + support(x) + supports of the coefficients.
HeightInterval canonical_height_local(const DrinfeldModule& m, const RF& x,
                                      std::int64_t n_max = kDefaultNMax);

// Tower-safe variant with an explicit covering place set.
template <class C>
HeightInterval canonical_height_local_over(const std::set<PlaceT<C>>& places,
                                           const DrinfeldModuleT<C>& m, const RatFunc<C>& x,
                                           std::int64_t n_max = kDefaultNMax) {
    if (x.is_zero()) return HeightInterval::exactly(Rat(0));
    HeightInterval total = HeightInterval::exactly(Rat(0));
    for (const auto& v : places) total = total + green_local(m, v, x, n_max).value;
    return total;
}

bool is_torsion(const DrinfeldModule& m, const RF& x);

// All torsion points of phi over L, by bounded-height enumeration.
std::vector<RF> torsion_submodule(const DrinfeldModule& m, std::int64_t guard = 200'000);

// No ultrametric cancellation in phi_T(x) at v.
template <class C>
bool is_T_generic(const DrinfeldModuleT<C>& m, const PlaceT<C>& v, const RatFunc<C>& x) {
    if (x.is_zero()) throw domain_error("T-generic test at zero");
    Rat best;
    bool first = true;
    auto consider = [&](const RatFunc<C>& coeff, std::int64_t j) {
        if (coeff.is_zero()) return;
        Rat t = log_abs(coeff, v) + Rat(q_power(m.q(), j)) * log_abs(x, v);
        if (first || t > best) best = t;
        first = false;
    };
    consider(m.t_image(), 0);
    for (std::int64_t j = 1; j <= m.rank(); ++j) consider(m.a(j), j);
    RatFunc<C> fx = m.step(x);
    if (fx.is_zero()) return false;
    return log_abs(fx, v) == best;
}

}  // namespace drlab
