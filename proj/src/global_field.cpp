#include "drlab/global_field.hpp"

namespace drlab {

std::set<Place> support(const RF& x) {
    if (x.is_zero()) throw domain_error("support of zero");
    std::set<Place> s;
    for (const auto& t : upoly_factor(x.num())) s.insert(Place::finite(t.poly));
    for (const auto& t : upoly_factor(x.den())) s.insert(Place::finite(t.poly));
    if (x.num().degree() != x.den().degree()) s.insert(Place::infinity());
    return s;
}

Rat weighted_height(const std::vector<RF>& coords, const std::vector<std::int64_t>& weights) {
    std::set<Place> places{Place::infinity()};
    for (const auto& c : coords) {
        if (c.is_zero()) continue;
        for (const auto& v : support(c)) places.insert(v);
    }
    return weighted_height_over(places, coords, weights);
}

std::vector<PolyT> enumerate_polys(const FqConfigPtr& cfg, std::int64_t max_degree) {
    std::vector<PolyT> out{PolyT::zero()};
    const std::int64_t q = cfg->q();
    // lexicographic counter over coefficient vectors of each exact degree
    for (std::int64_t d = 0; d <= max_degree; ++d) {
        std::vector<std::int64_t> idx(static_cast<size_t>(d + 1), 0);
        idx.back() = 1;  // leading coefficient nonzero
        while (true) {
            std::vector<FqElem> c;
            c.reserve(idx.size());
            for (std::int64_t i : idx) c.push_back(FqElem::from_index(cfg, i));
            out.emplace_back(std::move(c));
            std::int64_t pos = 0;
            while (pos <= d) {
                if (++idx[static_cast<size_t>(pos)] < q) break;
                idx[static_cast<size_t>(pos)] = pos == d ? 1 : 0;
                if (pos == d) {  // wrapped the lead: done with this degree
                    pos = d + 1;
                    break;
                }
                ++pos;
            }
            if (pos > d) break;
        }
    }
    return out;
}

std::vector<RF> enumerate_bounded_height(const FqConfigPtr& cfg, std::int64_t bound,
                                         std::int64_t guard) {
    if (bound < 0) throw domain_error("negative height bound");
    std::vector<RF> out;
    std::vector<PolyT> polys = enumerate_polys(cfg, bound);
    // Canonical forms (num, den) with den monic and gcd(num, den) = 1 are in
    // bijection with field elements, so no further deduplication is needed.
    for (const auto& den : polys) {
        if (!den.is_monic()) continue;
        for (const auto& num : polys) {
            if (!num.is_zero() && upoly_gcd(num, den).degree() > 0) continue;
            if (num.is_zero() && !den.is_one()) continue;
            out.push_back(RF::raw(num, den));
            if (static_cast<std::int64_t>(out.size()) > guard)
                throw resource_limit("bounded-height enumeration", guard);
        }
    }
    return out;
}

}  // namespace drlab
