#include "drlab/serialize.hpp"

namespace drlab {

namespace {

const json& need(const json& j, const char* key, const std::string& path) {
    if (!j.is_object()) throw schema_error(path, "expected an object");
    auto it = j.find(key);
    if (it == j.end()) throw schema_error(path + "." + key, "missing field");
    return *it;
}

std::int64_t need_int(const json& j, const std::string& path) {
    if (!j.is_number_integer()) throw schema_error(path, "expected an integer");
    return j.get<std::int64_t>();
}

}  // namespace

json to_json(const FqElem& x) {
    json a = json::array();
    for (std::uint32_t c : x.coeffs()) a.push_back(c);
    return a;
}

FqElem fq_from_json(const json& j, const FqConfigPtr& cfg, const std::string& path) {
    if (!j.is_array()) throw schema_error(path, "expected an integer vector mod p");
    std::vector<std::uint32_t> c;
    for (size_t i = 0; i < j.size(); ++i) {
        std::int64_t v = need_int(j[i], path + "[" + std::to_string(i) + "]");
        if (v < 0 || v >= cfg->p())
            throw schema_error(path + "[" + std::to_string(i) + "]", "coefficient not reduced mod p");
        c.push_back(static_cast<std::uint32_t>(v));
    }
    if (c.size() != cfg->e()) throw schema_error(path, "expected e coefficients");
    return FqElem(cfg, std::move(c));
}

json to_json(const PolyT& f) {
    json a = json::array();
    for (const auto& c : f.coeffs()) a.push_back(to_json(c));
    return a;
}

PolyT poly_from_json(const json& j, const FqConfigPtr& cfg, const std::string& path) {
    if (!j.is_array()) throw schema_error(path, "expected a coefficient array, lowest degree first");
    std::vector<FqElem> c;
    for (size_t i = 0; i < j.size(); ++i)
        c.push_back(fq_from_json(j[i], cfg, path + "[" + std::to_string(i) + "]"));
    return PolyT(std::move(c));
}

json to_json(const RF& x) {
    return json{{"num", to_json(x.num())}, {"den", to_json(x.den())}};
}

RF rf_from_json(const json& j, const FqConfigPtr& cfg, const std::string& path) {
    PolyT num = poly_from_json(need(j, "num", path), cfg, path + ".num");
    PolyT den = poly_from_json(need(j, "den", path), cfg, path + ".den");
    if (den.is_zero()) throw schema_error(path + ".den", "zero denominator");
    return RF(std::move(num), std::move(den));
}

json to_json(const Place& v) {
    if (v.is_infinity()) return json{{"kind", "infinity"}};
    return json{{"kind", "finite"}, {"poly", to_json(v.poly())}};
}

Place place_from_json(const json& j, const FqConfigPtr& cfg, const std::string& path) {
    const json& kind = need(j, "kind", path);
    if (kind == "infinity") return Place::infinity();
    if (kind != "finite") throw schema_error(path + ".kind", "expected \"finite\" or \"infinity\"");
    PolyT p = poly_from_json(need(j, "poly", path), cfg, path + ".poly");
    if (p.degree() < 1 || !p.is_monic() || !upoly_is_irreducible(p))
        throw schema_error(path + ".poly", "finite place must be monic irreducible");
    return Place::finite(std::move(p));
}

json to_json(const Rat& r) { return rat_to_string(r); }

Rat rat_from_json(const json& j, const std::string& path) {
    if (!j.is_string()) throw schema_error(path, "expected a rational \"num/den\" string");
    try {
        return rat_from_string(j.get<std::string>());
    } catch (const domain_error& e) {
        throw schema_error(path, e.what());
    }
}

json to_json(const HeightInterval& h) {
    return json{{"lo", to_json(h.lo)}, {"hi", to_json(h.hi)}, {"exact", h.exact}};
}

json to_json(const DrinfeldModule& m) {
    json coeffs = json::array();
    for (std::int64_t j = 1; j <= m.rank(); ++j) coeffs.push_back(to_json(m.a(j)));
    return json{{"q", m.q()}, {"rank", m.rank()}, {"phi_T", coeffs}};
}

DrinfeldModule module_from_json(const json& j, const FqConfigPtr& cfg, const std::string& path) {
    std::int64_t q = need_int(need(j, "q", path), path + ".q");
    if (q != cfg->q()) throw schema_error(path + ".q", "q does not match the field config");
    std::int64_t rank = need_int(need(j, "rank", path), path + ".rank");
    if (rank < 1) throw schema_error(path + ".rank", "rank must be positive");
    const json& coeffs = need(j, "phi_T", path);
    if (!coeffs.is_array() || static_cast<std::int64_t>(coeffs.size()) != rank)
        throw schema_error(path + ".phi_T", "expected rank coefficients a_1..a_r");
    std::vector<RF> a;
    for (size_t i = 0; i < coeffs.size(); ++i)
        a.push_back(rf_from_json(coeffs[i], cfg, path + ".phi_T[" + std::to_string(i) + "]"));
    if (a.back().is_zero()) throw schema_error(path + ".phi_T", "leading coefficient a_r is zero");
    PolyT t = PolyT::gen(FqElem::one(cfg));
    return DrinfeldModule(cfg, RF::from_poly(t, FqElem::one(cfg)), std::move(a));
}

json to_json(const DiscDivisor& d) {
    json a = json::array();
    for (const auto& [v, c] : d.terms())
        a.push_back(json{{"place", to_json(v)}, {"coeff", to_json(c)}});
    return a;
}

json to_json(const FqConfig& cfg) {
    json j{{"p", cfg.p()}, {"e", cfg.e()}};
    if (cfg.e() > 1) {
        json m = json::array();
        for (std::uint32_t c : cfg.modulus()) m.push_back(c);
        j["modulus"] = m;
    }
    return j;
}

FqConfigPtr config_from_json(const json& j, const std::string& path) {
    std::int64_t p = need_int(need(j, "p", path), path + ".p");
    std::int64_t e = need_int(need(j, "e", path), path + ".e");
    if (p < 2 || p > 1000) throw schema_error(path + ".p", "expected a small prime");
    if (e < 1 || e > 16) throw schema_error(path + ".e", "expected 1 <= e <= 16");
    std::vector<std::uint32_t> modulus;
    if (auto it = j.find("modulus"); it != j.end()) {
        for (size_t i = 0; i < it->size(); ++i) {
            std::int64_t c = need_int((*it)[i], path + ".modulus[" + std::to_string(i) + "]");
            if (c < 0 || c >= p)
                throw schema_error(path + ".modulus[" + std::to_string(i) + "]", "not reduced mod p");
            modulus.push_back(static_cast<std::uint32_t>(c));
        }
    } else if (e > 1) {
        throw schema_error(path + ".modulus", "missing field (required for e > 1)");
    }
    try {
        return FqConfig::make(static_cast<std::uint32_t>(p), static_cast<std::uint32_t>(e),
                              std::move(modulus));
    } catch (const error& err) {
        throw schema_error(path, err.what());
    }
}

}  // namespace drlab
