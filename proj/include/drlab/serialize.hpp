#pragma once

#include <nlohmann/json.hpp>

#include "drlab/heights.hpp"
#include "drlab/minimality.hpp"

namespace drlab {

using json = nlohmann::json;

// Malformed input documents; carries the path of the offending field.
struct schema_error : error {
    schema_error(const std::string& path, const std::string& what)
        : error(path + ": " + what), path(path) {}
    std::string path;
};

json to_json(const FqElem& x);
FqElem fq_from_json(const json& j, const FqConfigPtr& cfg, const std::string& path);

json to_json(const PolyT& f);
PolyT poly_from_json(const json& j, const FqConfigPtr& cfg, const std::string& path);

json to_json(const RF& x);
RF rf_from_json(const json& j, const FqConfigPtr& cfg, const std::string& path);

json to_json(const Place& v);
Place place_from_json(const json& j, const FqConfigPtr& cfg, const std::string& path);

json to_json(const Rat& r);  // "num/den" string
Rat rat_from_json(const json& j, const std::string& path);

json to_json(const HeightInterval& h);

json to_json(const DrinfeldModule& m);
DrinfeldModule module_from_json(const json& j, const FqConfigPtr& cfg, const std::string& path);

json to_json(const DiscDivisor& d);

// Field config: {"p": 2, "e": 1} or {"p": 2, "e": 2, "modulus": [1, 1, 1]}
json to_json(const FqConfig& cfg);
FqConfigPtr config_from_json(const json& j, const std::string& path);

}  // namespace drlab
