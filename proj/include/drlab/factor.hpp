#pragma once

#include <cstdint>
#include <vector>

#include "drlab/ratfunc.hpp"
#include "drlab/upoly.hpp"

namespace drlab {

using PolyT = UPoly<FqElem>;
using RF = RatFunc<FqElem>;  // the base rational function field F_q(T)

struct FactorTerm {
    PolyT poly;  // monic irreducible
    std::int64_t mult;
};

// Complete factorization over F_q[T]: squarefree split, then distinct-degree,
// then seeded Cantor-Zassenhaus equal-degree splitting.  The product of the
// factors times lead(f) reproduces f exactly.  Deterministic for a fixed seed.
std::vector<FactorTerm> upoly_factor(const PolyT& f, std::uint64_t seed = 0x5eedULL);

// Distinct-degree irreducibility certificate.
bool upoly_is_irreducible(const PolyT& f);

}  // namespace drlab
