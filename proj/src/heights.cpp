#include "drlab/heights.hpp"

namespace drlab {

std::set<Place> bad_places(const DrinfeldModule& m, const RF* x) {
    std::set<Place> s{Place::infinity()};
    for (std::int64_t j = 1; j <= m.rank(); ++j) {
        if (m.a(j).is_zero()) continue;
        for (const auto& v : support(m.a(j))) s.insert(v);
    }
    if (x != nullptr && !x->is_zero())
        for (const auto& v : support(*x)) s.insert(v);
    return s;
}

Rat h_phi(const DrinfeldModule& m) {
    std::vector<RF> coords;
    std::vector<std::int64_t> weights;
    for (std::int64_t j = 1; j <= m.rank(); ++j) {
        coords.push_back(m.a(j));
        weights.push_back((q_power(m.q(), j) - 1).convert_to<std::int64_t>());
    }
    Rat hj = weighted_height(coords, weights);
    return hj + naive_height(m.a(m.rank())) / Rat(q_power(m.q(), m.rank()) - 1);
}

ZimmerBounds zimmer_bounds(const DrinfeldModule& m) {
    Rat qr(q_power(m.q(), m.rank()));
    Rat c1 = qr / ((qr - 1) * (qr - 1));
    Rat c2 = 1 / (qr - 1);
    return make_zimmer(c1, c2, h_phi(m), m.q(), m.rank());
}

HeightInterval canonical_height(const DrinfeldModule& m, const RF& x, const Rat& tol) {
    return canonical_height_with(m, x, tol, zimmer_bounds(m));
}

HeightInterval canonical_height_local(const DrinfeldModule& m, const RF& x, std::int64_t n_max) {
    if (x.is_zero()) return HeightInterval::exactly(Rat(0));
    return canonical_height_local_over(bad_places(m, &x), m, x, n_max);
}

namespace {

// Shared orbit walk: returns the certified positive lower bound q^{-rn}(h(y_n)
// - B_lower) at the first escaping step, or 0 when the orbit cycles (torsion).
Rat orbit_lower_bound(const DrinfeldModule& m, const RF& x, const ZimmerBounds& zb) {
    const Rat qr_inv = 1 / Rat(q_power(m.q(), m.rank()));
    auto less = [](const RF& a, const RF& b) { return compare(a, b) < 0; };
    std::set<RF, decltype(less)> seen(less);
    RF y = x;
    Rat scale = 1;
    for (;;) {
        Rat hy = naive_height(y);
        if (hy > zb.B_lower) return scale * (hy - zb.B_lower);
        if (!seen.insert(y).second) return Rat(0);
        y = m.step(y);
        scale *= qr_inv;
    }
}

}  // namespace

Rat canonical_height_lower(const DrinfeldModule& m, const RF& x) {
    return canonical_height_lower(m, x, zimmer_bounds(m));
}

Rat canonical_height_lower(const DrinfeldModule& m, const RF& x, const ZimmerBounds& zb) {
    if (x.is_zero()) return Rat(0);
    return orbit_lower_bound(m, x, zb);
}

bool is_torsion(const DrinfeldModule& m, const RF& x) {
    if (x.is_zero()) return true;
    return orbit_lower_bound(m, x, zimmer_bounds(m)) == 0;
}

std::vector<RF> torsion_submodule(const DrinfeldModule& m, std::int64_t guard) {
    const ZimmerBounds zb = zimmer_bounds(m);
    // torsion implies hhat = 0, so h(x) <= B_lower
    std::int64_t bound = rat_floor(zb.B_lower).convert_to<std::int64_t>();
    std::vector<RF> out;
    for (const auto& x : enumerate_bounded_height(m.config(), bound, guard))
        if (is_torsion(m, x)) out.push_back(x);
    return out;
}

}  // namespace drlab
