#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <set>

#include "drlab/global_field.hpp"

using namespace drlab;

namespace {

FqConfigPtr f2() { return FqConfig::make(2, 1); }
FqConfigPtr f3() { return FqConfig::make(3, 1); }
FqConfigPtr f4() { return FqConfig::make(2, 2, {1, 1, 1}); }

PolyT poly(const FqConfigPtr& cfg, std::initializer_list<int> cs) {
    std::vector<FqElem> v;
    for (int c : cs) v.push_back(FqElem::from_int(cfg, c));
    return PolyT(std::move(v));
}

RF rf(const FqConfigPtr& cfg, std::initializer_list<int> num, std::initializer_list<int> den) {
    return RF(poly(cfg, num), poly(cfg, den));
}

PolyT random_poly(const FqConfigPtr& cfg, std::int64_t max_deg, std::mt19937_64& rng) {
    std::uniform_int_distribution<std::int64_t> dd(0, max_deg);
    std::uniform_int_distribution<std::int64_t> dc(0, cfg->q() - 1);
    std::int64_t d = dd(rng);
    std::vector<FqElem> v;
    for (std::int64_t i = 0; i <= d; ++i) v.push_back(FqElem::from_index(cfg, dc(rng)));
    return PolyT(std::move(v));
}

RF random_rf_nonzero(const FqConfigPtr& cfg, std::int64_t max_deg, std::mt19937_64& rng) {
    for (;;) {
        PolyT n = random_poly(cfg, max_deg, rng), d = random_poly(cfg, max_deg, rng);
        if (n.is_zero() || d.is_zero()) continue;
        return RF(n, d);
    }
}

}  // namespace

TEST_CASE("valuation examples") {
    auto c2 = f2();
    RF t = rf(c2, {0, 1}, {1});
    Place vt = Place::finite(poly(c2, {0, 1}));
    Place vinf = Place::infinity();
    CHECK(valuation(t, vt) == 1);
    CHECK(valuation(t.inv(), vinf) == 1);
    Place vt1 = Place::finite(poly(c2, {1, 1}));
    CHECK(valuation(rf(c2, {0, 1, 1}, {1, 1}), vt1) == 0);  // T(T+1)/(T+1)
    CHECK(valuation(RF::zero_like(t), vt) == kValInfinity);
}

TEST_CASE("log_abs examples and errors") {
    auto c2 = f2();
    RF t = rf(c2, {0, 1}, {1});
    CHECK(log_abs(t, Place::infinity()) == Rat(1));
    CHECK(log_abs(t, Place::finite(poly(c2, {0, 1}))) == Rat(-1));
    CHECK(log_abs(rf(c2, {1, 0, 1}, {1}), Place::finite(poly(c2, {1, 1}))) == Rat(-2));
    CHECK_THROWS_AS(log_abs(RF::zero_like(t), Place::infinity()), domain_error);
}

TEST_CASE("support examples") {
    auto c2 = f2();
    RF t = rf(c2, {0, 1}, {1});
    Place vt = Place::finite(poly(c2, {0, 1}));
    Place vt1 = Place::finite(poly(c2, {1, 1}));
    CHECK(support(t) == std::set<Place>{vt, Place::infinity()});
    CHECK(support(RF::one_like(t)).empty());
    CHECK(support(rf(c2, {1, 0, 1}, {0, 1})) == std::set<Place>{vt1, vt, Place::infinity()});
    CHECK_THROWS_AS(support(RF::zero_like(t)), domain_error);
}

TEST_CASE("naive height") {
    auto c2 = f2();
    CHECK(naive_height(rf(c2, {0, 0, 0, 1}, {1})) == Rat(3));
    CHECK(naive_height(rf(c2, {1}, {1})) == Rat(0));
    CHECK(naive_height(rf(c2, {1, 1}, {0, 0, 1})) == Rat(2));
    CHECK(naive_height(RF::zero_like(rf(c2, {1}, {1}))) == Rat(0));
    // h(x) = h(1/x)
    std::mt19937_64 rng(5);
    for (int i = 0; i < 50; ++i) {
        RF x = random_rf_nonzero(c2, 6, rng);
        CHECK(naive_height(x) == naive_height(x.inv()));
    }
}

TEST_CASE("product formula: 1000 random nonzero x, sum over places = 0") {
    std::mt19937_64 rng(99);
    std::vector<FqConfigPtr> cfgs = {f2(), f3(), f4()};
    for (int i = 0; i < 1000; ++i) {
        auto cfg = cfgs[static_cast<size_t>(i % 3)];
        RF x = random_rf_nonzero(cfg, 7, rng);
        std::set<Place> s = support(x);
        s.insert(Place::infinity());
        Rat total = 0;
        for (const auto& v : s) total += log_abs(x, v);
        CHECK(total == Rat(0));
    }
}

TEST_CASE("naive height subadditivity") {
    std::mt19937_64 rng(13);
    for (auto cfg : {f2(), f3()}) {
        for (int i = 0; i < 100; ++i) {
            RF x = random_rf_nonzero(cfg, 5, rng), y = random_rf_nonzero(cfg, 5, rng);
            CHECK(naive_height(x * y) <= naive_height(x) + naive_height(y));
            CHECK(naive_height(x + y) <= naive_height(x) + naive_height(y));
        }
    }
}

TEST_CASE("weighted height examples") {
    auto c2 = f2();
    RF one = rf(c2, {1}, {1});
    RF t = rf(c2, {0, 1}, {1});
    CHECK(weighted_height({one}, {1}) == Rat(0));
    CHECK(weighted_height({one, t}, {1, 3}) == Rat(1, 3));
    // scaling by alpha = T+1: (alpha^1 * 1, alpha^3 * T)
    RF a = rf(c2, {1, 1}, {1});
    CHECK(weighted_height({a, a.pow(3) * t}, {1, 3}) == Rat(1, 3));
    CHECK_THROWS_AS(weighted_height({RF::zero_like(one)}, {1}), domain_error);
}

TEST_CASE("weighted height scaling invariance (200 random)") {
    std::mt19937_64 rng(17);
    for (auto cfg : {f2(), f3()}) {
        std::vector<std::int64_t> w = {cfg->q() - 1, cfg->q() * cfg->q() - 1};
        for (int i = 0; i < 100; ++i) {
            RF x0 = random_rf_nonzero(cfg, 3, rng);
            RF x1 = random_rf_nonzero(cfg, 3, rng);
            RF a = random_rf_nonzero(cfg, 2, rng);
            Rat h0 = weighted_height({x0, x1}, w);
            CHECK(weighted_height({a.pow(w[0]) * x0, a.pow(w[1]) * x1}, w) == h0);
            CHECK(h0 >= Rat(0));
        }
    }
}

TEST_CASE("bounded-height sets are finite: two enumerators agree") {
    for (auto cfg : {f2(), f3()}) {
        for (std::int64_t bound : {0, 1, 2}) {
            std::vector<RF> fast = enumerate_bounded_height(cfg, bound);
            // brute force: canonicalize every pair and dedupe
            auto less = [](const RF& a, const RF& b) { return compare(a, b) < 0; };
            std::set<RF, decltype(less)> brute(less);
            for (const auto& den : enumerate_polys(cfg, bound)) {
                if (den.is_zero()) continue;
                for (const auto& num : enumerate_polys(cfg, bound))
                    brute.insert(RF(num, den));
            }
            std::set<RF, decltype(less)> fast_set(fast.begin(), fast.end(), less);
            CHECK(fast.size() == fast_set.size());  // no duplicates
            CHECK(fast_set.size() == brute.size());
            CHECK(std::equal(fast_set.begin(), fast_set.end(), brute.begin(),
                             [](const RF& a, const RF& b) { return a == b; }));
            for (const auto& x : fast) CHECK(naive_height(x) <= Rat(bound));
        }
    }
}

TEST_CASE("enumeration resource guard") {
    CHECK_THROWS_AS(enumerate_bounded_height(f3(), 4, 100), resource_limit);
}
