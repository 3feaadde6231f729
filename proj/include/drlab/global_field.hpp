#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <vector>

#include "drlab/factor.hpp"
#include "drlab/ratfunc.hpp"

namespace drlab {

// --- deterministic total orders, used for place sets and report ordering ---

inline int compare(const FqElem& a, const FqElem& b) {
    std::int64_t ai = a.index(), bi = b.index();
    return ai < bi ? -1 : ai > bi ? 1 : 0;
}

template <class C>
int compare(const UPoly<C>& a, const UPoly<C>& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree() ? -1 : 1;
    for (std::int64_t i = a.degree(); i >= 0; --i)
        if (int c = compare(a.coeff(i), b.coeff(i)); c != 0) return c;
    return 0;
}

template <class C>
int compare(const RatFunc<C>& a, const RatFunc<C>& b) {
    if (int c = compare(a.den(), b.den()); c != 0) return c;
    return compare(a.num(), b.num());
}

// A normalized place of the fraction field of C[var]: a monic irreducible
// polynomial, or the place at infinity (where the indeterminate has a pole).
template <class C>
class PlaceT {
public:
    static PlaceT infinity() { return PlaceT(); }
    static PlaceT finite(UPoly<C> p) {
        if (p.degree() < 1 || !p.is_monic())
            throw domain_error("finite place must be a monic polynomial of positive degree");
        PlaceT v;
        v.poly_ = std::move(p);
        return v;
    }

    bool is_infinity() const { return !poly_.has_value(); }
    const UPoly<C>& poly() const {
        if (is_infinity()) throw domain_error("infinite place has no polynomial");
        return *poly_;
    }
    std::int64_t degree() const { return is_infinity() ? 1 : poly_->degree(); }

    bool operator==(const PlaceT& o) const {
        if (is_infinity() || o.is_infinity()) return is_infinity() == o.is_infinity();
        return *poly_ == *o.poly_;
    }
    bool operator!=(const PlaceT& o) const { return !(*this == o); }
    bool operator<(const PlaceT& o) const {
        if (is_infinity() != o.is_infinity()) return is_infinity();
        if (is_infinity()) return false;
        return compare(*poly_, *o.poly_) < 0;
    }

private:
    PlaceT() = default;
    std::optional<UPoly<C>> poly_;
};

using Place = PlaceT<FqElem>;

inline constexpr std::int64_t kValInfinity = INT64_MAX;  // valuation of 0

// Order of vanishing at v; +infinity sentinel for x = 0.
template <class C>
std::int64_t valuation(const RatFunc<C>& x, const PlaceT<C>& v) {
    if (x.is_zero()) return kValInfinity;
    if (v.is_infinity()) return x.den().degree() - x.num().degree();
    return multiplicity(x.num(), v.poly()) - multiplicity(x.den(), v.poly());
}

// log|x|_v = -v(x) deg(v), with log q = 1.
template <class C>
Rat log_abs(const RatFunc<C>& x, const PlaceT<C>& v) {
    if (x.is_zero()) throw domain_error("log_abs of zero");
    return Rat(-valuation(x, v) * v.degree());
}

template <class C>
Rat log_abs_plus(const RatFunc<C>& x, const PlaceT<C>& v) {
    if (x.is_zero()) throw domain_error("log_abs of zero");
    return rat_pos(log_abs(x, v));
}

// Places where x has a zero or pole.  BaseRational instance only (requires
// factorization over F_q[T]).
std::set<Place> support(const RF& x);

// h(x) = max(deg num, deg den) in canonical form; h(0) = 0.  Needs only gcd,
// so it is valid in both the base and the tower instance.
template <class C>
Rat naive_height(const RatFunc<C>& x) {
    if (x.is_zero()) return Rat(0);
    return Rat(std::max(x.num().degree(), x.den().degree()));
}

// Weighted-projective height over an explicit place set, which must cover the
// support of every coordinate.  Zero coordinates are skipped inside the max.
template <class C>
Rat weighted_height_over(const std::set<PlaceT<C>>& places, const std::vector<RatFunc<C>>& coords,
                         const std::vector<std::int64_t>& weights) {
    if (coords.size() != weights.size())
        throw domain_error("weighted height: coordinate/weight length mismatch");
    bool any = false;
    Rat total = 0;
    for (const auto& v : places) {
        std::optional<Rat> best;
        for (size_t i = 0; i < coords.size(); ++i) {
            if (coords[i].is_zero()) continue;
            any = true;
            Rat term = log_abs(coords[i], v) / weights[i];
            if (!best || term > *best) best = term;
        }
        if (best) total += *best;
    }
    if (!any) throw domain_error("weighted height of the zero point");
    return total;
}

// Base-instance weighted height; gathers the support by factorization.
Rat weighted_height(const std::vector<RF>& coords, const std::vector<std::int64_t>& weights);

// All elements of F_q(T) with naive height <= bound (unique canonical
// coprime/monic-denominator representations), zero included.
std::vector<RF> enumerate_bounded_height(const FqConfigPtr& cfg, std::int64_t bound,
                                         std::int64_t guard = 2'000'000);

// All polynomials in F_q[T] of degree <= d, in deterministic order.
std::vector<PolyT> enumerate_polys(const FqConfigPtr& cfg, std::int64_t max_degree);

}  // namespace drlab
