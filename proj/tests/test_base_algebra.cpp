#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "drlab/factor.hpp"
#include "drlab/global_field.hpp"

using namespace drlab;

namespace {

FqConfigPtr f2() { return FqConfig::make(2, 1); }
FqConfigPtr f3() { return FqConfig::make(3, 1); }
FqConfigPtr f4() { return FqConfig::make(2, 2, {1, 1, 1}); }  // x^2 + x + 1

PolyT poly(const FqConfigPtr& cfg, std::initializer_list<int> cs) {
    std::vector<FqElem> v;
    for (int c : cs) v.push_back(FqElem::from_int(cfg, c));
    return PolyT(std::move(v));
}

PolyT random_poly(const FqConfigPtr& cfg, std::int64_t max_deg, std::mt19937_64& rng) {
    std::uniform_int_distribution<std::int64_t> dd(0, max_deg);
    std::uniform_int_distribution<std::int64_t> dc(0, cfg->q() - 1);
    std::int64_t d = dd(rng);
    std::vector<FqElem> v;
    for (std::int64_t i = 0; i <= d; ++i) v.push_back(FqElem::from_index(cfg, dc(rng)));
    return PolyT(std::move(v));
}

}  // namespace

TEST_CASE("F_q field arithmetic basics") {
    auto c2 = f2();
    CHECK((FqElem::one(c2) + FqElem::one(c2)).is_zero());  // 1 + 1 = 0 in char 2

    auto c3 = f3();
    CHECK(FqElem::from_int(c3, 2).inv() == FqElem::from_int(c3, 2));  // 2*2 = 4 = 1

    auto c4 = f4();
    FqElem g(c4, {0, 1});         // generator x
    FqElem g_plus_1(c4, {1, 1});  // x + 1
    CHECK(g * g == g_plus_1);     // x^2 = x + 1 mod x^2+x+1

    CHECK_THROWS_AS(FqElem::zero(c4).inv(), division_by_zero);
    CHECK_THROWS_AS((void)(FqElem::one(c2) + FqElem::one(c3)), config_mismatch);
}

TEST_CASE("Frobenius fixes F_q: x^q = x") {
    std::mt19937_64 rng(7);
    for (auto cfg : {f2(), f3(), f4()}) {
        std::uniform_int_distribution<std::int64_t> dist(0, cfg->q() - 1);
        for (int i = 0; i < 100; ++i) {
            FqElem x = FqElem::from_index(cfg, dist(rng));
            CHECK(x.pow(Int(cfg->q())) == x);
            if (!x.is_zero()) CHECK(x.pth_root().pow(Int(cfg->p())) == x);
        }
    }
}

TEST_CASE("polynomial gcd examples") {
    auto c2 = f2();
    PolyT t = poly(c2, {0, 1});
    PolyT t2_plus_t = poly(c2, {0, 1, 1});
    CHECK(upoly_gcd(t2_plus_t, t) == t);
    CHECK(upoly_gcd(t2_plus_t, PolyT::zero()) == t2_plus_t);  // monic already
    PolyT t3_plus_1 = poly(c2, {1, 0, 0, 1});
    PolyT t_plus_1 = poly(c2, {1, 1});
    CHECK(upoly_gcd(t3_plus_1, t_plus_1) == t_plus_1);
    CHECK(upoly_gcd(PolyT::zero(), PolyT::zero()).is_zero());
}

TEST_CASE("gcd divides both inputs (500 random pairs)") {
    std::mt19937_64 rng(11);
    for (auto cfg : {f2(), f3(), f4()}) {
        for (int i = 0; i < 170; ++i) {
            PolyT f = random_poly(cfg, 9, rng), g = random_poly(cfg, 9, rng);
            PolyT d = upoly_gcd(f, g);
            if (d.is_zero()) {
                CHECK(f.is_zero());
                CHECK(g.is_zero());
                continue;
            }
            CHECK((f % d).is_zero());
            CHECK((g % d).is_zero());
        }
    }
}

TEST_CASE("factorization examples") {
    auto c2 = f2();
    auto fac = upoly_factor(poly(c2, {0, 1, 1}));  // T^2 + T
    REQUIRE(fac.size() == 2);
    CHECK(fac[0].poly == poly(c2, {0, 1}));
    CHECK(fac[0].mult == 1);
    CHECK(fac[1].poly == poly(c2, {1, 1}));
    CHECK(fac[1].mult == 1);

    fac = upoly_factor(poly(c2, {1, 0, 1}));  // T^2 + 1 = (T+1)^2
    REQUIRE(fac.size() == 1);
    CHECK(fac[0].poly == poly(c2, {1, 1}));
    CHECK(fac[0].mult == 2);

    auto c3 = f3();
    PolyT f = poly(c3, {1, 0, 1});  // T^2 + 1 irreducible mod 3
    fac = upoly_factor(f);
    REQUIRE(fac.size() == 1);
    CHECK(fac[0].poly == f);
    CHECK(fac[0].mult == 1);
    CHECK(upoly_is_irreducible(f));

    CHECK_THROWS_AS(upoly_factor(PolyT::zero()), domain_error);
}

TEST_CASE("factor product reconstructs input; factors irreducible (200 random)") {
    std::mt19937_64 rng(23);
    for (auto cfg : {f2(), f3(), f4()}) {
        for (int i = 0; i < 67; ++i) {
            PolyT f = random_poly(cfg, 12, rng);
            if (f.degree() < 1) continue;
            auto fac = upoly_factor(f);
            PolyT prod = PolyT::constant(f.lead());
            for (const auto& t : fac) {
                CHECK(upoly_is_irreducible(t.poly));
                CHECK(t.poly.is_monic());
                for (std::int64_t m = 0; m < t.mult; ++m) prod = prod * t.poly;
            }
            CHECK(prod == f);
        }
    }
}

TEST_CASE("rational function canonical form") {
    auto c2 = f2();
    PolyT t2_plus_t = poly(c2, {0, 1, 1});
    PolyT t_plus_1 = poly(c2, {1, 1});
    RF x(t2_plus_t, t_plus_1);  // T(T+1)/(T+1) = T
    CHECK(x.num() == poly(c2, {0, 1}));
    CHECK(x.den().is_one());

    // canonicalization is idempotent
    RF y(x.num(), x.den());
    CHECK(y == x);

    // (a/b)*(b/a) = 1
    std::mt19937_64 rng(31);
    for (auto cfg : {f2(), f3()}) {
        for (int i = 0; i < 50; ++i) {
            PolyT a = random_poly(cfg, 6, rng), b = random_poly(cfg, 6, rng);
            if (a.is_zero() || b.is_zero()) continue;
            RF u(a, b);
            CHECK((u * u.inv()).is_one());
            CHECK(u * RF(b, a) == RF::one_like(u) * RF(a * b, b * a));
        }
    }
    CHECK_THROWS_AS(RF(poly(c2, {1}), PolyT::zero()), division_by_zero);
}

TEST_CASE("pow_q on polynomials and rational functions is the Frobenius power") {
    std::mt19937_64 rng(41);
    for (auto cfg : {f2(), f3(), f4()}) {
        for (int i = 0; i < 25; ++i) {
            PolyT f = random_poly(cfg, 5, rng);
            if (!f.is_zero()) CHECK(pow_q(f, 1, cfg->q()) == f.pow(cfg->q()));
            PolyT g = random_poly(cfg, 4, rng);
            if (g.is_zero()) continue;
            RF x(f, g);
            CHECK(pow_q(x, 2, cfg->q()) == x.pow(Int(cfg->q()) * cfg->q()));
        }
    }
}

TEST_CASE("multiplicity") {
    auto c2 = f2();
    PolyT t_plus_1 = poly(c2, {1, 1});
    PolyT f = t_plus_1.pow(3) * poly(c2, {0, 1});
    CHECK(multiplicity(f, t_plus_1) == 3);
    CHECK(multiplicity(f, poly(c2, {0, 1})) == 1);
    CHECK(multiplicity(f, poly(c2, {1, 1, 1})) == 0);
}
