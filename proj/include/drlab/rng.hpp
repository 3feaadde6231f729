#pragma once

#include <random>

#include "drlab/drinfeld.hpp"

namespace drlab {

// Seeded sampler for scan drivers and property tests.  Everything downstream
// of a fixed seed is deterministic.
class Sampler {
public:
    Sampler(FqConfigPtr cfg, std::uint64_t seed) : cfg_(std::move(cfg)), rng_(seed) {}

    std::mt19937_64& engine() { return rng_; }
    const FqConfigPtr& config() const { return cfg_; }

    FqElem elem() {
        std::uniform_int_distribution<std::int64_t> d(0, cfg_->q() - 1);
        return FqElem::from_index(cfg_, d(rng_));
    }

    PolyT poly(std::int64_t max_deg) {
        std::uniform_int_distribution<std::int64_t> dd(0, max_deg);
        std::int64_t deg = dd(rng_);
        std::vector<FqElem> c;
        for (std::int64_t i = 0; i <= deg; ++i) c.push_back(elem());
        return PolyT(std::move(c));
    }

    PolyT nonzero_poly(std::int64_t max_deg) {
        for (;;) {
            PolyT f = poly(max_deg);
            if (!f.is_zero()) return f;
        }
    }

    RF ratfunc(std::int64_t max_h) { return RF(poly(max_h), nonzero_poly(max_h)); }

    RF nonzero_ratfunc(std::int64_t max_h) {
        return RF(nonzero_poly(max_h), nonzero_poly(max_h));
    }

    // Random rank-r module with coefficient heights <= bound.
    DrinfeldModule module(std::int64_t rank, std::int64_t bound) {
        std::vector<RF> a;
        for (std::int64_t j = 1; j < rank; ++j) a.push_back(ratfunc(bound));
        a.push_back(nonzero_ratfunc(bound));
        PolyT t = PolyT::gen(FqElem::one(cfg_));
        return DrinfeldModule(cfg_, RF::from_poly(t, FqElem::one(cfg_)), std::move(a));
    }

    std::int64_t index(std::int64_t n) {  // uniform in [0, n)
        std::uniform_int_distribution<std::int64_t> d(0, n - 1);
        return d(rng_);
    }

private:
    FqConfigPtr cfg_;
    std::mt19937_64 rng_;
};

}  // namespace drlab
