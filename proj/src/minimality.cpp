#include "drlab/minimality.hpp"

#include "drlab/heights.hpp"

namespace drlab {

LocalMinDisc local_min_disc(const DrinfeldModule& m, const Place& v) {
    if (v.is_infinity()) throw domain_error("minimal discriminant is a finite-place notion");
    const std::int64_t q = m.q(), r = m.rank();
    // smallest integer k with v(a_j) + k (q^j - 1) >= 0 for every nonzero a_j
    Rat need;
    bool first = true;
    for (std::int64_t j = 1; j <= r; ++j) {
        if (m.a(j).is_zero()) continue;
        Rat t = Rat(-valuation(m.a(j), v)) / Rat(q_power(q, j) - 1);
        if (first || t > need) need = t;
        first = false;
    }
    LocalMinDisc out;
    out.kstar = rat_ceil(need).convert_to<std::int64_t>();
    Int w = q_power(q, r) - 1;
    out.value = Rat(Int(valuation(m.a(r), v)) + out.kstar * w) * v.degree() / Rat(w);
    return out;
}

ReductionType reduction_type(const DrinfeldModule& m, const Place& v) {
    if (v.is_infinity()) throw domain_error("reduction type is defined at finite places only");
    if (j_phi_v(m, v) > 0) return ReductionType::PersistentlyBad;
    return local_min_disc(m, v).value == 0 ? ReductionType::Good : ReductionType::PotentiallyGood;
}

Int d_constant(std::int64_t q, std::int64_t r) {
    if (r < 1) throw domain_error("rank must be positive");
    Int l = 1;
    for (std::int64_t j = 1; j <= r; ++j) {
        Int w = q_power(q, j) - 1;
        l = l / gcd(l, w) * w;
    }
    return l;
}

namespace {

// Finite places appearing in any coefficient (numerator or denominator).
std::set<Place> coefficient_places(const DrinfeldModule& m) {
    std::set<Place> s;
    for (std::int64_t j = 1; j <= m.rank(); ++j) {
        if (m.a(j).is_zero()) continue;
        for (const auto& v : support(m.a(j)))
            if (!v.is_infinity()) s.insert(v);
    }
    return s;
}

}  // namespace

GlobalDivisors global_divisors(const DrinfeldModule& m) {
    for (std::int64_t j = 1; j <= m.rank(); ++j) {
        if (m.a(j).is_zero() || m.a(j).is_poly()) continue;
        auto fac = upoly_factor(m.a(j).den());
        std::string pole = "degree-" + std::to_string(fac.front().poly.degree());
        throw precondition_error("model is not integral: a_" + std::to_string(j) +
                                 " has a pole at a finite place (" + pole +
                                 " irreducible); normalize with minimal_global_model first");
    }
    GlobalDivisors g;
    for (const auto& v : coefficient_places(m)) {
        g.disc.set(v, c_v(m, v));
        LocalMinDisc lm = local_min_disc(m, v);
        g.min_disc.set(v, lm.value);
        g.weierstrass.set(v, Rat(-lm.kstar * v.degree()));
    }
    return g;
}

std::pair<DrinfeldModule, MinimalityCertificate> minimal_global_model(const DrinfeldModule& m) {
    MinimalityCertificate cert{
        {}, RF::one_like(m.a(m.rank())), m};
    PolyT num = PolyT::constant(FqElem::one(m.config()));
    PolyT den = num;
    for (const auto& v : coefficient_places(m)) {
        LocalMinDisc lm = local_min_disc(m, v);
        if (lm.kstar == 0) continue;
        cert.kstar[v] = lm.kstar;
        if (lm.kstar > 0)
            num = num * v.poly().pow(lm.kstar);
        else
            den = den * v.poly().pow(-lm.kstar);
    }
    cert.beta = RF(num, den);
    cert.model = conjugate(m, cert.beta);
    return {cert.model, cert};
}

LowerNorthcottReport check_lowernorthcott(const DrinfeldModule& m, std::int64_t beta_height_bound) {
    auto [minimal, cert] = minimal_global_model(m);
    GlobalDivisors g = global_divisors(minimal);
    std::vector<RF> coords;
    std::vector<std::int64_t> weights;
    for (std::int64_t j = 1; j <= m.rank(); ++j) {
        coords.push_back(m.a(j));
        weights.push_back((q_power(m.q(), j) - 1).convert_to<std::int64_t>());
    }
    Rat hj = weighted_height(coords, weights);  // conjugation-invariant
    LowerNorthcottReport rep{false, Rat(0), 2 * rat_max(hj, g.min_disc.degree()), Rat(0), minimal};
    bool first = true;
    for (const auto& beta : enumerate_polys(m.config(), beta_height_bound)) {
        if (beta.is_zero()) continue;
        DrinfeldModule cand = conjugate(minimal, RF::raw(beta, PolyT::constant(FqElem::one(m.config()))));
        Rat h = h_phi(cand);
        if (first || h < rep.h_phi_best) {
            rep.h_phi_best = h;
            rep.best = cand;
        }
        first = false;
    }
    rep.slack = rep.bound - rep.h_phi_best;
    rep.conclusive = rep.slack >= 0;
    return rep;
}

}  // namespace drlab
