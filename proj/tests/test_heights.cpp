#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "drlab/heights.hpp"
#include "drlab/minimality.hpp"
#include "drlab/rng.hpp"

using namespace drlab;

namespace {

FqConfigPtr f2() { return FqConfig::make(2, 1); }
FqConfigPtr f3() { return FqConfig::make(3, 1); }

PolyT poly(const FqConfigPtr& cfg, std::initializer_list<int> cs) {
    std::vector<FqElem> v;
    for (int c : cs) v.push_back(FqElem::from_int(cfg, c));
    return PolyT(std::move(v));
}

RF rf_poly(const FqConfigPtr& cfg, std::initializer_list<int> num) {
    return RF::from_poly(poly(cfg, num), FqElem::one(cfg));
}

DrinfeldModule carlitz(const FqConfigPtr& cfg) {
    return DrinfeldModule(cfg, rf_poly(cfg, {0, 1}), {rf_poly(cfg, {1})});
}

}  // namespace

TEST_CASE("Green's function examples") {
    auto cfg = f2();
    auto m = carlitz(cfg);
    RF t2 = rf_poly(cfg, {0, 0, 1});
    RF t = rf_poly(cfg, {0, 1});
    Place vinf = Place::infinity();

    GreenResult g = green_local(m, vinf, t2);
    CHECK(g.value.exact);
    CHECK(g.value.lo == Rat(2));
    CHECK(g.escaped_at == 0);
    CHECK(g.closed_form);

    // phi_T(T) = T^2 + T^2 = 0: torsion, G = 0
    g = green_local(m, vinf, t);
    CHECK(g.value.exact);
    CHECK(g.value.lo == Rat(0));

    g = green_local(m, vinf, RF::zero_like(t));
    CHECK(g.value.exact);
    CHECK(g.value.lo == Rat(0));

    // good-reduction certificate at (T), integral point: exact 0 without iterating
    g = green_local(m, Place::finite(poly(cfg, {0, 1})), t);
    CHECK(g.value.exact);
    CHECK(g.value.lo == Rat(0));
    CHECK(g.closed_form);
}

TEST_CASE("GreenResult invariants on random instances") {
    Sampler s(f2(), 101);
    for (int i = 0; i < 60; ++i) {
        auto m = s.module(1 + s.index(2), 2);
        Place v = s.index(2) ? Place::infinity() : Place::finite(poly(s.config(), {0, 1}));
        GreenResult g = green_local(m, v, s.ratfunc(2), 4);
        CHECK(g.value.lo >= Rat(0));
        CHECK(g.value.lo <= g.value.hi);
        if (g.escaped_at) CHECK(g.closed_form);
        if (g.closed_form) CHECK(g.value.exact);
    }
}

TEST_CASE("Green functional equation and ultrametric property (closed-form cases)") {
    std::vector<FqConfigPtr> cfgs = {f2(), f3()};
    for (auto& cfg : cfgs) {
        Sampler s(cfg, 103);
        Place vinf = Place::infinity();
        int tested = 0;
        for (int i = 0; i < 200 && tested < 100; ++i) {
            auto m = s.module(1 + s.index(2), 1);
            RF x = s.ratfunc(2), y = s.ratfunc(2);
            GreenResult gx = green_local(m, vinf, x, 3);
            GreenResult gy = green_local(m, vinf, y, 3);
            if (!gx.value.exact || !gy.value.exact) continue;
            ++tested;
            // G(phi_T(x)) = q^r G(x)
            GreenResult gfx = green_local(m, vinf, m.step(x), 3);
            if (gfx.value.exact)
                CHECK(gfx.value.lo == Rat(q_power(m.q(), m.rank())) * gx.value.lo);
            // ultrametric, with equality unless G(x) = G(y)
            GreenResult gsum = green_local(m, vinf, x + y, 3);
            CHECK(gsum.value.lo <= rat_max(gx.value.lo, gy.value.lo));
            if (gsum.value.exact && gx.value.lo != gy.value.lo)
                CHECK(gsum.value.lo == rat_max(gx.value.lo, gy.value.lo));
        }
        CHECK(tested >= 50);
    }
}

TEST_CASE("local height examples") {
    auto cfg = f2();
    auto m = carlitz(cfg);
    RF t = rf_poly(cfg, {0, 1});
    RF t2 = rf_poly(cfg, {0, 0, 1});

    HeightInterval l = lambda_local(m, Place::finite(poly(cfg, {0, 1})), t);
    CHECK(l.exact);
    CHECK(l.lo == Rat(1));

    l = lambda_local(m, Place::infinity(), t2);
    CHECK(l.exact);
    CHECK(l.lo == Rat(0));  // -2 + 2 + 0: escape case

    CHECK_THROWS_AS(lambda_local(m, Place::infinity(), RF::zero_like(t)), domain_error);
}

TEST_CASE("local height conjugation invariance: lambda_psi(x) = lambda_phi(alpha x)") {
    Sampler s(f2(), 107);
    int tested = 0;
    for (int i = 0; i < 150 && tested < 50; ++i) {
        auto m = s.module(1 + s.index(2), 1);
        RF alpha = s.nonzero_ratfunc(1);
        RF x = s.nonzero_ratfunc(2);
        auto psi = conjugate(m, alpha);
        Place v = s.index(2) ? Place::infinity() : Place::finite(poly(s.config(), {0, 1}));
        RF ax = alpha * x;
        if (ax.is_zero()) continue;
        HeightInterval a = lambda_local(psi, v, x, 4);
        HeightInterval b = lambda_local(m, v, ax, 4);
        CHECK(a.intersects(b));
        if (a.exact && b.exact) {
            CHECK(a.lo == b.lo);
            ++tested;
        }
    }
    CHECK(tested >= 30);
}

TEST_CASE("lambda good reduction: lambda = log+|x^{-1}|") {
    Sampler s(f3(), 109);
    auto m = carlitz(s.config());
    for (int i = 0; i < 40; ++i) {
        RF x = s.nonzero_ratfunc(2);
        Place v = s.index(2) ? Place::finite(poly(s.config(), {0, 1}))
                             : Place::finite(poly(s.config(), {1, 1}));
        HeightInterval l = lambda_local(m, v, x, 6);
        if (l.exact) CHECK(l.lo == rat_pos(log_abs(x.inv(), v)));
    }
}

TEST_CASE("lambda functional equation (part 6) on closed-form cases") {
    auto cfg = f2();
    Sampler s(cfg, 113);
    std::vector<PolyT> as = {poly(cfg, {0, 1}), poly(cfg, {1, 1}), poly(cfg, {0, 0, 1})};
    int tested = 0;
    for (int i = 0; i < 200 && tested < 60; ++i) {
        auto m = s.module(1 + s.index(2), 1);
        RF x = s.nonzero_ratfunc(2);
        const PolyT& a = as[static_cast<size_t>(s.index(3))];
        auto pa = m.phi(a);
        RF fax = pa.eval(x);
        if (fax.is_zero()) continue;
        Place v = s.index(2) ? Place::infinity() : Place::finite(poly(cfg, {0, 1}));
        HeightInterval lx = lambda_local(m, v, x, 4);
        HeightInterval lfx = lambda_local(m, v, fax, 4);
        if (!lx.exact || !lfx.exact) continue;
        ++tested;
        Int ar = q_power(m.q(), m.rank() * a.degree());  // |a|_infinity^r
        RF delta = pa.coeff(pa.skew_degree());
        RF corr = fax / (delta * x.pow(ar));
        CHECK(lfx.lo == Rat(ar) * lx.lo - log_abs(corr, v));
    }
    CHECK(tested >= 40);
}

TEST_CASE("Zimmer constants and h(phi)") {
    auto c2 = f2();
    auto m2 = carlitz(c2);
    ZimmerBounds z = zimmer_bounds(m2);
    CHECK(z.C1 == Rat(2));
    CHECK(z.C2 == Rat(1));
    CHECK(z.h_phi == Rat(0));
    CHECK(z.B_lower == Rat(2));
    CHECK(z.B_upper == Rat(1));

    auto c3 = f3();
    z = zimmer_bounds(carlitz(c3));
    CHECK(z.C1 == Rat(3, 4));
    CHECK(z.C2 == Rat(1, 2));

    RF t = rf_poly(c2, {0, 1});
    DrinfeldModule r2(c2, t, {rf_poly(c2, {1}), t});
    CHECK(h_phi(r2) == Rat(2, 3));

    // h_phi is not conjugation-invariant: Carlitz conjugated by 1/T
    CHECK(h_phi(conjugate(m2, t.inv())) == Rat(1));
}

TEST_CASE("canonical height: Carlitz exact values") {
    auto cfg = f2();
    auto m = carlitz(cfg);
    RF t2 = rf_poly(cfg, {0, 0, 1});
    Rat tol(1, 64);

    HeightInterval a = canonical_height(m, t2, tol);
    CHECK(a.contains(Rat(2)));
    CHECK(a.width() <= tol);

    HeightInterval b = canonical_height_local(m, t2);
    CHECK(b.exact);
    CHECK(b.lo == Rat(2));

    // functional equation: hhat(phi_T(x)) = q^r hhat(x)
    RF fx = m.step(t2);
    HeightInterval c = canonical_height_local(m, fx);
    CHECK(c.exact);
    CHECK(c.lo == Rat(4));
    CHECK(canonical_height(m, fx, tol).contains(Rat(4)));

    CHECK(canonical_height(m, RF::zero_like(t2), tol).exact);
    CHECK(canonical_height(m, RF::zero_like(t2), tol).lo == Rat(0));

    // torsion point: interval converging to 0
    RF one = rf_poly(cfg, {1});
    HeightInterval d = canonical_height(m, one, Rat(1, 256));
    CHECK(d.lo == Rat(0));
    CHECK(d.hi <= Rat(1, 256));
    CHECK_THROWS_AS(canonical_height(m, one, Rat(0)), domain_error);
}

TEST_CASE("Zimmer sandwich on random instances (interval-aware)") {
    for (auto cfg : {f2(), f3()}) {
        for (std::int64_t r : {1, 2}) {
            Sampler s(cfg, 127 + static_cast<std::uint64_t>(r));
            for (int i = 0; i < 60; ++i) {
                auto m = s.module(r, 2);
                RF x = s.ratfunc(2);
                ZimmerBounds z = zimmer_bounds(m);
                HeightInterval h = canonical_height_with(m, x, Rat(1), z);
                Rat hx = naive_height(x);
                // hhat - h(x) in [-B_lower, B_upper], as intervals
                CHECK(h.hi >= hx - z.B_lower);
                CHECK(h.lo <= hx + z.B_upper);
            }
        }
    }
}

TEST_CASE("dual-algorithm agreement on random instances") {
    Sampler s(f2(), 131);
    for (int i = 0; i < 60; ++i) {
        auto m = s.module(1 + s.index(2), 1);
        RF x = s.ratfunc(2);
        HeightInterval a = canonical_height(m, x, Rat(1, 4));
        HeightInterval b = canonical_height_local(m, x, 5);
        CHECK(a.intersects(b));
        if (a.exact && b.exact) CHECK(a.lo == b.lo);
    }
}

TEST_CASE("torsion decisions") {
    auto c2 = f2();
    auto m2 = carlitz(c2);
    RF one2 = rf_poly(c2, {1});
    CHECK(is_torsion(m2, one2));
    CHECK(is_torsion(m2, RF::zero_like(one2)));

    auto c3 = f3();
    auto m3 = carlitz(c3);
    RF one3 = rf_poly(c3, {1});
    CHECK_FALSE(is_torsion(m3, one3));

    // positive lower bound on non-torsion points
    CHECK(canonical_height_lower(m3, one3) > Rat(0));
    CHECK(canonical_height_lower(m2, one2) == Rat(0));
    CHECK(canonical_height_lower(m2, rf_poly(c2, {0, 0, 1})) > Rat(0));
}

TEST_CASE("torsion submodule: Carlitz") {
    auto c2 = f2();
    auto m2 = carlitz(c2);
    auto tors = torsion_submodule(m2);
    std::vector<RF> expect = {RF::zero_like(rf_poly(c2, {1})), rf_poly(c2, {1}),
                              rf_poly(c2, {0, 1}), rf_poly(c2, {1, 1})};
    REQUIRE(tors.size() == 4);
    for (const auto& e : expect)
        CHECK(std::find(tors.begin(), tors.end(), e) != tors.end());
    // closure under phi_T and addition
    for (const auto& x : tors) {
        CHECK(std::find(tors.begin(), tors.end(), m2.step(x)) != tors.end());
        for (const auto& y : tors)
            CHECK(std::find(tors.begin(), tors.end(), x + y) != tors.end());
    }

    auto tors3 = torsion_submodule(carlitz(f3()));
    REQUIRE(tors3.size() == 1);
    CHECK(tors3[0].is_zero());

    CHECK_THROWS_AS(torsion_submodule(m2, 2), resource_limit);
}

TEST_CASE("T-generic points") {
    auto cfg = f2();
    auto m = carlitz(cfg);
    Place vinf = Place::infinity();
    CHECK(is_T_generic(m, vinf, rf_poly(cfg, {0, 0, 1})));
    CHECK_FALSE(is_T_generic(m, vinf, rf_poly(cfg, {0, 1})));  // phi_T(T) = 0
    CHECK_THROWS_AS(is_T_generic(m, vinf, RF::zero_like(rf_poly(cfg, {1}))), domain_error);
}

TEST_CASE("lemma genericbound and phiTsmall as checkable properties") {
    for (auto cfg : {f2(), f3()}) {
        Sampler s(cfg, 137);
        std::vector<Place> places = {Place::infinity(), Place::finite(poly(cfg, {0, 1})),
                                     Place::finite(poly(cfg, {1, 1}))};
        for (int i = 0; i < 300; ++i) {
            auto m = s.module(1 + s.index(2), 1);
            const Place& v = places[static_cast<size_t>(s.index(3))];
            RF x = s.nonzero_ratfunc(2);
            if (!is_T_generic(m, v, x)) continue;
            RF fx = m.step(x);
            if (fx.is_zero()) continue;
            Rat c = c_v(m, v);
            Int w = q_power(m.q(), m.rank()) - 1;
            Rat tinv_plus = rat_pos(log_abs(m.t_image().inv(), v));
            if (log_abs(fx, v) <= B_T_v(m, v))
                CHECK(log_abs(x, v) <= c + tinv_plus / Rat(w * w));
            if (log_abs(fx, v) <= c + tinv_plus / Rat(w * w)) {
                Rat rhs = (1 - Rat(1, m.q())) * j_phi_v(m, v) -
                          tinv_plus / (Rat(m.q()) * Rat(w * w));
                CHECK(-log_abs(x, v) + c >= rhs);
            }
        }
    }
}

TEST_CASE("lemma localheightdiff: per-place sandwich on closed-form cases") {
    for (auto cfg : {f2(), f3()}) {
        Sampler s(cfg, 139);
        std::vector<Place> places = {Place::infinity(), Place::finite(poly(cfg, {0, 1})),
                                     Place::finite(poly(cfg, {1, 1}))};
        int tested = 0;
        for (int i = 0; i < 300 && tested < 80; ++i) {
            auto m = s.module(1 + s.index(2), 1);
            const Place& v = places[static_cast<size_t>(s.index(3))];
            RF x = s.nonzero_ratfunc(2);
            HeightInterval l = lambda_local(m, v, x, 4);
            if (!l.exact) continue;
            ++tested;
            Rat qr(q_power(m.q(), m.rank()));
            Rat j = j_phi_v(m, v);
            Rat c = c_v(m, v);
            Rat t_plus = rat_pos(log_abs(m.t_image(), v));
            Rat diff = l.lo - rat_pos(log_abs(x.inv(), v));
            CHECK(diff >= -qr / ((qr - 1) * (qr - 1)) * t_plus - qr / (qr - 1) * j - rat_pos(-c));
            CHECK(diff <= j + t_plus / (qr - 1) + rat_pos(c));
        }
        CHECK(tested >= 60);
    }
}

TEST_CASE("lemma potgoodred: lambda + G >= D/(d-1) at potentially good places") {
    auto cfg = f2();
    RF t = rf_poly(cfg, {0, 1});
    // phi_T = Tx + T x^4: potentially good at (T) with D = 1/3
    DrinfeldModule m(cfg, t, {RF::zero_like(t), t});
    Place vt = Place::finite(poly(cfg, {0, 1}));
    REQUIRE(reduction_type(m, vt) == ReductionType::PotentiallyGood);
    Rat d_val = local_min_disc(m, vt).value;
    REQUIRE(d_val == Rat(1, 3));
    Rat d(d_constant(2, 2));
    Sampler s(cfg, 149);
    int tested = 0;
    for (int i = 0; i < 200 && tested < 40; ++i) {
        RF x = s.nonzero_ratfunc(3);
        HeightInterval l = lambda_local(m, vt, x, 4);
        GreenResult g = green_local(m, vt, x, 4);
        if (!l.exact || !g.value.exact) continue;
        ++tested;
        CHECK(l.lo + g.value.lo >= d_val / (d - 1));
    }
    CHECK(tested >= 20);
}

TEST_CASE("lemma greenslower: escape values dominate the bad-reduction measure") {
    for (auto cfg : {f2(), f3()}) {
        Sampler s(cfg, 151);
        std::vector<Place> places = {Place::infinity(), Place::finite(poly(cfg, {0, 1}))};
        for (int i = 0; i < 200; ++i) {
            auto m = s.module(1 + s.index(2), 2);
            const Place& v = places[static_cast<size_t>(s.index(2))];
            RF x = s.nonzero_ratfunc(3);
            if (log_abs(x, v) <= B_T_v(m, v)) continue;
            GreenResult g = green_local(m, v, x, 2);
            REQUIRE(g.escaped_at == 0);
            Rat bound = Rat(m.q() - 1) / Rat(q_power(m.q(), m.rank()) - 1) * j_phi_v(m, v);
            CHECK(g.value.lo >= bound);
        }
    }
}
