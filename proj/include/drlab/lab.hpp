#pragma once

#include <optional>
#include <string>
#include <vector>

#include "drlab/heights.hpp"
#include "drlab/minimality.hpp"
#include "drlab/rng.hpp"
#include "drlab/serialize.hpp"

namespace drlab {

// Tower instance: the rational function field F(u) with F = F_q(T).
using TPoly = UPoly<RF>;
using TRF = RatFunc<RF>;
using TPlace = PlaceT<RF>;
using TModule = DrinfeldModuleT<RF>;

inline constexpr int kExitOk = 0;
inline constexpr int kExitViolation = 2;
inline constexpr int kExitResource = 3;
inline constexpr int kExitSchema = 4;

// A parsed instance document.  Self-describing: the field config is always
// required, everything else only when the command at hand needs it.
struct Instance {
    FqConfigPtr cfg;
    std::optional<DrinfeldModule> module;
    std::vector<RF> points;
    json params = json::object();  // seed, count, rank, bound, s, tol, ...

    // Typed parameter access; missing required parameters are schema errors
    // so that reports are always replayable from the document alone.
    std::int64_t param_int(const std::string& key) const;
    std::int64_t param_int(const std::string& key, std::int64_t fallback) const;
    std::uint64_t param_seed() const;
    Rat param_rat(const std::string& key, const Rat& fallback) const;
};

Instance instance_from_json(const json& j);

// phi_T = Tx + a_1 x^q + ... over F(u), coefficients given in factored form
// so the covering place set is part of the input (no factorization in F(u)).
struct FamilyInstance {
    FqConfigPtr cfg;
    TModule module;
    TRF x;
    std::set<TPlace> places;  // declared support of coefficients and x, plus infinity
    std::vector<RF> specializations;
    Rat tol;
};

FamilyInstance family_from_json(const json& j);

// Experiment drivers.  Each returns a JSON report with an "ok" flag; a false
// flag means a verified inequality violation (process exit code 2).
json cmd_height(const Instance& in);
json cmd_scan_zimmer(const FqConfigPtr& cfg, std::uint64_t seed, std::int64_t count,
                     std::int64_t rank, std::int64_t bound, const Rat& tol);
json cmd_scan_jplaces(const FqConfigPtr& cfg, std::uint64_t seed, std::int64_t rank,
                      std::int64_t s, std::int64_t enum_bound, std::int64_t point_bound);
json cmd_torsion(const Instance& in);
json cmd_family(const FamilyInstance& fam);
json cmd_enumerate_modules(const FqConfigPtr& cfg, std::int64_t rank, std::int64_t bound,
                           std::int64_t guard = 500'000);

// Dispatch on the report's verdict.
inline int report_exit_code(const json& report) {
    return report.value("ok", true) ? kExitOk : kExitViolation;
}

}  // namespace drlab
