#include "drlab/lab.hpp"

#include <algorithm>

namespace drlab {

namespace {

const json& need(const json& j, const char* key, const std::string& path) {
    if (!j.is_object()) throw schema_error(path, "expected an object");
    auto it = j.find(key);
    if (it == j.end()) throw schema_error(path + "." + key, "missing field");
    return *it;
}

RF t_elem(const FqConfigPtr& cfg) {
    FqElem one = FqElem::one(cfg);
    return RF::from_poly(PolyT::gen(one), one);
}

RF rf_one(const FqConfigPtr& cfg) {
    FqElem one = FqElem::one(cfg);
    return RF::from_poly(PolyT::constant(one), one);
}

// T as a constant of F(u): the tower action of T.
TRF t_const(const FqConfigPtr& cfg) {
    RF t = t_elem(cfg);
    return TRF::from_poly(TPoly::constant(t), t);
}

json interval_json(const HeightInterval& h) { return to_json(h); }

// Exact least-squares slope of y against x; 0 when underdetermined.
Rat least_squares_slope(const std::vector<std::pair<Rat, Rat>>& pts) {
    Rat n(static_cast<std::int64_t>(pts.size()));
    if (pts.size() < 2) return Rat(0);
    Rat sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (const auto& [x, y] : pts) {
        sx += x;
        sy += y;
        sxx += x * x;
        sxy += x * y;
    }
    Rat den = n * sxx - sx * sx;
    if (den == 0) return Rat(0);
    return (n * sxy - sx * sy) / den;
}

}  // namespace

std::int64_t Instance::param_int(const std::string& key) const {
    auto it = params.find(key);
    if (it == params.end()) throw schema_error("$.params." + key, "missing field");
    if (!it->is_number_integer()) throw schema_error("$.params." + key, "expected an integer");
    return it->get<std::int64_t>();
}

std::int64_t Instance::param_int(const std::string& key, std::int64_t fallback) const {
    if (params.find(key) == params.end()) return fallback;
    return param_int(key);
}

std::uint64_t Instance::param_seed() const {
    auto it = params.find("seed");
    if (it == params.end()) throw schema_error("$.params.seed", "missing field");
    if (!it->is_number_integer() || (it->is_number_integer() && it->get<std::int64_t>() < 0 &&
                                     !it->is_number_unsigned()))
        throw schema_error("$.params.seed", "expected a nonnegative integer");
    return it->get<std::uint64_t>();
}

Rat Instance::param_rat(const std::string& key, const Rat& fallback) const {
    auto it = params.find(key);
    if (it == params.end()) return fallback;
    return rat_from_json(*it, "$.params." + key);
}

Instance instance_from_json(const json& j) {
    Instance in;
    in.cfg = config_from_json(need(j, "field", "$"), "$.field");
    if (auto it = j.find("module"); it != j.end())
        in.module = module_from_json(*it, in.cfg, "$.module");
    if (auto it = j.find("points"); it != j.end()) {
        if (!it->is_array()) throw schema_error("$.points", "expected an array");
        for (size_t i = 0; i < it->size(); ++i)
            in.points.push_back(rf_from_json((*it)[i], in.cfg, "$.points[" + std::to_string(i) + "]"));
    }
    if (auto it = j.find("params"); it != j.end()) {
        if (!it->is_object()) throw schema_error("$.params", "expected an object");
        in.params = *it;
    }
    return in;
}

json cmd_height(const Instance& in) {
    if (!in.module) throw schema_error("$.module", "missing field");
    const DrinfeldModule& m = *in.module;
    const Rat tol = in.param_rat("tol", Rat(1, 64));
    const ZimmerBounds zb = zimmer_bounds(m);
    json rep;
    rep["field"] = to_json(*in.cfg);
    rep["module"] = to_json(m);
    rep["h_phi"] = to_json(zb.h_phi);
    rep["zimmer"] = json{{"C1", to_json(zb.C1)},
                         {"C2", to_json(zb.C2)},
                         {"B_lower", to_json(zb.B_lower)},
                         {"B_upper", to_json(zb.B_upper)}};
    bool ok = true;
    json pts = json::array();
    for (const RF& x : in.points) {
        json p;
        p["x"] = to_json(x);
        p["h"] = to_json(naive_height(x));
        HeightInterval global = canonical_height_with(m, x, tol, zb);
        HeightInterval local = canonical_height_local(m, x);
        p["hhat_global"] = interval_json(global);
        p["hhat_local"] = interval_json(local);
        bool agree = global.intersects(local);
        ok = ok && agree;
        p["agree"] = agree;
        p["torsion"] = is_torsion(m, x);
        json dec = json::array();
        for (const Place& v : bad_places(m, &x)) {
            json d;
            d["place"] = to_json(v);
            d["green"] = interval_json(green_local(m, v, x).value);
            d["lambda"] = x.is_zero() ? json(nullptr) : json(interval_json(lambda_local(m, v, x)));
            dec.push_back(d);
        }
        p["decomposition"] = dec;
        pts.push_back(p);
    }
    rep["points"] = pts;
    rep["ok"] = ok;
    return rep;
}

json cmd_scan_zimmer(const FqConfigPtr& cfg, std::uint64_t seed, std::int64_t count,
                     std::int64_t rank, std::int64_t bound, const Rat& tol) {
    if (count < 1) throw domain_error("scan requires count >= 1");
    Sampler s(cfg, seed);
    json violations = json::array();
    Rat worst = 0;
    for (std::int64_t i = 0; i < count; ++i) {
        DrinfeldModule m = s.module(rank, bound);
        RF x = s.ratfunc(bound);
        ZimmerBounds zb = zimmer_bounds(m);
        Rat hx = naive_height(x);
        HeightInterval hh = canonical_height_with(m, x, tol, zb);
        // certified one-sided gaps; each must stay <= 1 by the sandwich
        Rat low_gap = rat_pos((hx - hh.hi) / zb.B_lower);
        Rat up_gap = rat_pos((hh.lo - hx) / zb.B_upper);
        worst = rat_max(worst, rat_max(low_gap, up_gap));
        bool bad = low_gap > 1 || up_gap > 1;
        // local discriminant sandwich, piggybacked on the same sample stream
        for (const Place& v : bad_places(m)) {
            if (v.is_infinity()) continue;
            Rat jv = j_phi_v(m, v);
            Rat dv = local_min_disc(m, v).value;
            if (!(jv <= dv && dv < jv + Rat(v.degree()))) bad = true;
        }
        if (bad)
            violations.push_back(json{{"module", to_json(m)},
                                      {"x", to_json(x)},
                                      {"h", to_json(hx)},
                                      {"hhat", interval_json(hh)}});
    }
    json rep;
    rep["seed"] = seed;
    rep["count"] = count;
    rep["rank"] = rank;
    rep["bound"] = bound;
    rep["tol"] = to_json(tol);
    rep["max_normalized_gap"] = to_json(worst);
    rep["violations"] = violations;
    rep["ok"] = violations.empty();
    return rep;
}

json cmd_scan_jplaces(const FqConfigPtr& cfg, std::uint64_t seed, std::int64_t rank,
                      std::int64_t s, std::int64_t enum_bound, std::int64_t point_bound) {
    if (s < 0) throw domain_error("jplaces scan requires s >= 0");
    if (rank < 1) throw domain_error("jplaces scan requires rank >= 1");
    const std::vector<RF> pool = enumerate_bounded_height(cfg, enum_bound);
    std::vector<RF> nonzero;
    for (const RF& a : pool)
        if (!a.is_zero()) nonzero.push_back(a);
    const std::vector<RF> points = enumerate_bounded_height(cfg, point_bound);

    double total = static_cast<double>(nonzero.size());
    for (std::int64_t j = 1; j < rank; ++j) total *= static_cast<double>(pool.size());
    if (total > 200'000)
        throw resource_limit("jplaces module enumeration", static_cast<long long>(total));

    json violations = json::array();
    std::optional<Rat> eps;
    std::int64_t scanned = 0, ratios = 0, skipped_zero = 0, skipped_bad_count = 0;
    std::int64_t max_torsion = 0;
    const RF t = t_elem(cfg);

    std::vector<size_t> idx(static_cast<size_t>(rank), 0);
    for (bool more = true; more;) {
        std::vector<RF> a;
        for (std::int64_t j = 0; j < rank - 1; ++j) a.push_back(pool[idx[static_cast<size_t>(j)]]);
        a.push_back(nonzero[idx[static_cast<size_t>(rank - 1)]]);
        DrinfeldModule m(cfg, t, std::move(a));

        std::set<Place> places = bad_places(m);
        std::int64_t nbad = 0;
        Rat hj = 0, degD = 0;
        bool sandwich_ok = true;
        for (const Place& v : places) {
            Rat jv = j_phi_v(m, v);
            hj += jv;  // h(j_phi) = sum of the local measures over a covering set
            if (jv > 0) ++nbad;
            if (!v.is_infinity()) {
                Rat dv = local_min_disc(m, v).value;
                degD += dv;
                if (!(jv <= dv && dv < jv + Rat(v.degree()))) sandwich_ok = false;
            }
        }
        if (!sandwich_ok)
            violations.push_back(json{{"module", to_json(m)}, {"check", "disc-sandwich"}});

        Rat denom = rat_max(hj, degD);
        if (nbad > s) {
            ++skipped_bad_count;
        } else if (denom == 0) {
            ++skipped_zero;
        } else {
            ++scanned;
            ZimmerBounds zb = zimmer_bounds(m);
            std::int64_t torsion_here = 0;
            for (const RF& x : points) {
                Rat lo = canonical_height_lower(m, x, zb);
                if (lo == 0) {
                    ++torsion_here;
                    continue;
                }
                Rat ratio = lo / denom;
                ++ratios;
                if (!eps || ratio < *eps) eps = ratio;
                if (ratio <= 0)
                    violations.push_back(json{{"module", to_json(m)},
                                              {"x", to_json(x)},
                                              {"check", "positive-lower-bound"}});
            }
            max_torsion = std::max(max_torsion, torsion_here);
        }

        more = false;
        for (std::int64_t j = rank - 1; j >= 0; --j) {
            size_t limit = (j == rank - 1) ? nonzero.size() : pool.size();
            if (++idx[static_cast<size_t>(j)] < limit) {
                more = true;
                break;
            }
            idx[static_cast<size_t>(j)] = 0;
        }
    }

    json rep;
    rep["seed"] = seed;
    rep["rank"] = rank;
    rep["s"] = s;
    rep["enumeration_bound"] = enum_bound;
    rep["point_height_bound"] = point_bound;
    rep["modules_scanned"] = scanned;
    rep["skipped_bad_place_count"] = skipped_bad_count;
    rep["skipped_zero_denominator"] = skipped_zero;
    rep["ratios"] = ratios;
    rep["epsilon_hat"] = eps ? json(to_json(*eps)) : json(nullptr);
    rep["epsilon_hat_label"] = "empirical lower-bound estimate";
    rep["max_torsion_count"] = max_torsion;
    rep["violations"] = violations;
    rep["ok"] = violations.empty();
    return rep;
}

json cmd_torsion(const Instance& in) {
    if (!in.module) throw schema_error("$.module", "missing field");
    const DrinfeldModule& m = *in.module;
    const std::int64_t guard = in.param_int("guard", 200'000);
    std::vector<RF> tors = torsion_submodule(m, guard);

    auto contains = [&](const RF& y) {
        for (const RF& t : tors)
            if (t == y) return true;
        return false;
    };
    bool closed_phi = true, closed_add = true;
    for (const RF& x : tors) {
        if (!contains(m.step(x))) closed_phi = false;
        for (const RF& y : tors)
            if (!contains(x + y)) closed_add = false;
    }

    // least monic annihilator, by degree then enumeration order
    const std::int64_t deg_cap = in.param_int("annihilator_degree_cap", 10);
    json elems = json::array();
    for (const RF& x : tors) {
        json e;
        e["x"] = to_json(x);
        std::optional<PolyT> ann;
        for (std::int64_t d = 0; d <= deg_cap && !ann; ++d) {
            for (const PolyT& a : enumerate_polys(in.cfg, d)) {
                if (a.degree() != d || !a.is_monic()) continue;
                if (m.phi(a).eval(x).is_zero()) {
                    ann = a;
                    break;
                }
            }
        }
        e["annihilator"] = ann ? json(to_json(*ann)) : json(nullptr);
        elems.push_back(e);
    }

    json rep;
    rep["module"] = to_json(m);
    rep["count"] = tors.size();
    rep["torsion"] = elems;
    rep["closed_under_phi_T"] = closed_phi;
    rep["closed_under_addition"] = closed_add;
    rep["ok"] = closed_phi && closed_add;
    return rep;
}

namespace {

TPoly tpoly_from_json(const json& j, const FqConfigPtr& cfg, const std::string& path) {
    if (!j.is_array()) throw schema_error(path, "expected a coefficient array, lowest degree first");
    std::vector<RF> c;
    for (size_t i = 0; i < j.size(); ++i)
        c.push_back(rf_from_json(j[i], cfg, path + "[" + std::to_string(i) + "]"));
    return TPoly(std::move(c));
}

// {"unit": RF, "factors": [{"base": u-poly, "exp": int}, ...]}: the element
// unit * prod base^exp of F(u), with its u-support declared up front.
TRF factored_from_json(const json& j, const FqConfigPtr& cfg, const std::string& path,
                       std::set<TPlace>& places) {
    RF unit = rf_from_json(need(j, "unit", path), cfg, path + ".unit");
    TRF acc = TRF::from_poly(TPoly::constant(unit.is_zero() ? rf_one(cfg) : unit), rf_one(cfg));
    if (unit.is_zero()) acc = TRF::zero_like(acc);
    auto it = j.find("factors");
    if (it == j.end()) return acc;
    if (!it->is_array()) throw schema_error(path + ".factors", "expected an array");
    for (size_t i = 0; i < it->size(); ++i) {
        std::string fp = path + ".factors[" + std::to_string(i) + "]";
        TPoly base = tpoly_from_json(need((*it)[i], "base", fp), cfg, fp + ".base");
        if (base.degree() < 1 || !base.is_monic())
            throw schema_error(fp + ".base", "factor must be monic of positive degree in u");
        const json& ej = need((*it)[i], "exp", fp);
        if (!ej.is_number_integer()) throw schema_error(fp + ".exp", "expected an integer");
        std::int64_t exp = ej.get<std::int64_t>();
        if (exp == 0) throw schema_error(fp + ".exp", "exponent must be nonzero");
        if (unit.is_zero()) throw schema_error(path, "zero element cannot carry factors");
        places.insert(TPlace::finite(base));
        acc = acc * TRF::from_poly(base, rf_one(cfg)).pow(Int(exp));
    }
    return acc;
}

}  // namespace

FamilyInstance family_from_json(const json& j) {
    FqConfigPtr cfg = config_from_json(need(j, "field", "$"), "$.field");
    const json& rj = need(j, "rank", "$");
    if (!rj.is_number_integer() || rj.get<std::int64_t>() < 1)
        throw schema_error("$.rank", "expected a positive integer");
    std::int64_t rank = rj.get<std::int64_t>();

    std::set<TPlace> places{TPlace::infinity()};
    const json& cj = need(j, "phi_T", "$");
    if (!cj.is_array() || static_cast<std::int64_t>(cj.size()) != rank)
        throw schema_error("$.phi_T", "expected rank coefficients a_1..a_r");
    std::vector<TRF> coeffs;
    for (size_t i = 0; i < cj.size(); ++i)
        coeffs.push_back(factored_from_json(cj[i], cfg, "$.phi_T[" + std::to_string(i) + "]", places));
    if (coeffs.back().is_zero()) throw schema_error("$.phi_T", "leading coefficient a_r is zero");

    TRF x = factored_from_json(need(j, "x", "$"), cfg, "$.x", places);

    std::vector<RF> betas;
    const json& sj = need(j, "specializations", "$");
    if (!sj.is_array()) throw schema_error("$.specializations", "expected an array");
    for (size_t i = 0; i < sj.size(); ++i)
        betas.push_back(rf_from_json(sj[i], cfg, "$.specializations[" + std::to_string(i) + "]"));

    Rat tol(1, 64);
    if (auto it = j.find("tol"); it != j.end()) tol = rat_from_json(*it, "$.tol");
    if (tol <= 0) throw schema_error("$.tol", "tolerance must be positive");

    return FamilyInstance{cfg, TModule(cfg, t_const(cfg), std::move(coeffs)), std::move(x),
                          std::move(places), std::move(betas), std::move(tol)};
}

json cmd_family(const FamilyInstance& fam) {
    const TModule& m = fam.module;
    const FqConfigPtr& cfg = fam.cfg;
    json warnings = json::array();

    bool isotrivial = true;
    for (const TRF& a : m.coeffs())
        if (a.num().degree() > 0 || a.den().degree() > 0) isotrivial = false;
    if (isotrivial) warnings.push_back("degenerate family: coefficients are u-free (isotrivial)");

    ZimmerBounds zb = zimmer_bounds_over(fam.places, m);
    HeightInterval generic = canonical_height_with(m, fam.x, fam.tol, zb);

    auto specialize = [&](const TRF& f, const RF& beta) {
        return f.num().eval(beta) / f.den().eval(beta);
    };

    json pairs = json::array();
    std::vector<std::pair<Rat, Rat>> fit;
    Rat max_width = 0;
    std::optional<Rat> torsion_max_h;
    for (const RF& beta : fam.specializations) {
        json entry;
        entry["beta"] = to_json(beta);
        bool degenerate = fam.x.den().eval(beta).is_zero();
        for (const TRF& a : m.coeffs())
            if (a.den().eval(beta).is_zero()) degenerate = true;
        if (!degenerate) degenerate = specialize(m.coeffs().back(), beta).is_zero();
        if (degenerate) {
            warnings.push_back("degenerate fiber skipped at beta = " +
                               to_json(beta).dump());
            entry["skipped"] = true;
            pairs.push_back(entry);
            continue;
        }
        std::vector<RF> a;
        for (const TRF& c : m.coeffs()) a.push_back(specialize(c, beta));
        DrinfeldModule mb(cfg, t_elem(cfg), std::move(a));
        RF xb = specialize(fam.x, beta);
        Rat hb = naive_height(beta);
        bool torsion = is_torsion(mb, xb);
        HeightInterval hh =
            torsion ? HeightInterval::exactly(Rat(0)) : canonical_height_local(mb, xb);
        entry["h_beta"] = to_json(hb);
        entry["hhat"] = interval_json(hh);
        entry["torsion"] = torsion;
        pairs.push_back(entry);
        if (torsion) {
            if (!torsion_max_h || hb > *torsion_max_h) torsion_max_h = hb;
        } else {
            fit.emplace_back(hb, hh.mid());
            max_width = rat_max(max_width, hh.width());
        }
    }

    json rep;
    rep["field"] = to_json(*cfg);
    rep["generic_hhat"] = interval_json(generic);
    rep["pairs"] = pairs;
    rep["slope"] = to_json(least_squares_slope(fit));
    rep["fiber_width_max"] = to_json(max_width);
    rep["torsion_flagged_max_h"] =
        torsion_max_h ? json(to_json(*torsion_max_h)) : json(nullptr);
    rep["warnings"] = warnings;
    rep["ok"] = true;
    return rep;
}

json cmd_enumerate_modules(const FqConfigPtr& cfg, std::int64_t rank, std::int64_t bound,
                           std::int64_t guard) {
    if (rank < 1) throw domain_error("enumeration requires rank >= 1");
    if (bound < 0) throw domain_error("enumeration requires bound >= 0");
    const std::int64_t q = cfg->q();
    const RF t = t_elem(cfg);
    const FqElem one = FqElem::one(cfg);

    // Degree caps: h(phi) <= B forces deg a_r <= B(q^r - 1) and, for j < r,
    // deg a_j <= 2B(q^j - 1) (via h(j) >= deg a_j/w_j - deg a_r/w_r >= 0).
    std::vector<std::vector<PolyT>> pools;
    double total = 1;
    for (std::int64_t j = 1; j <= rank; ++j) {
        std::int64_t wj = (q_power(q, j) - 1).convert_to<std::int64_t>();
        std::int64_t cap = (j == rank) ? bound * wj : 2 * bound * wj;
        std::vector<PolyT> pool = enumerate_polys(cfg, cap);
        if (j == rank)
            pool.erase(std::remove_if(pool.begin(), pool.end(),
                                      [](const PolyT& f) { return f.is_zero(); }),
                       pool.end());
        total *= static_cast<double>(pool.size());
        pools.push_back(std::move(pool));
    }
    if (total > static_cast<double>(guard))
        throw resource_limit("module enumeration", static_cast<long long>(total));

    // Minimal integral models in one isomorphism class differ exactly by a
    // constant conjugation, so the class key is the least conjugate tuple.
    auto tuple_less = [](const std::vector<RF>& a, const std::vector<RF>& b) {
        for (size_t i = 0; i < a.size(); ++i)
            if (int c = compare(a[i], b[i]); c != 0) return c < 0;
        return false;
    };
    auto canonical_key = [&](const DrinfeldModule& m) {
        std::vector<RF> best = m.coeffs();
        for (std::int64_t i = 1; i < q; ++i) {
            RF alpha = RF::from_poly(PolyT::constant(FqElem::from_index(cfg, i)), one);
            std::vector<RF> cand = conjugate(m, alpha).coeffs();
            if (tuple_less(cand, best)) best = cand;
        }
        return best;
    };

    auto scan = [&](bool reversed) {
        std::set<std::vector<RF>, decltype(tuple_less)> classes(tuple_less);
        std::vector<size_t> idx(static_cast<size_t>(rank), 0);
        for (bool more = true; more;) {
            std::vector<RF> a;
            for (std::int64_t j = 0; j < rank; ++j) {
                const auto& pool = pools[static_cast<size_t>(j)];
                size_t i = idx[static_cast<size_t>(j)];
                if (reversed) i = pool.size() - 1 - i;
                a.push_back(RF::from_poly(pool[i], one));
            }
            DrinfeldModule m(cfg, t, std::move(a));
            bool keep = h_phi(m) <= Rat(bound);
            if (keep)  // only already-minimal models represent their class
                for (const Place& v : bad_places(m)) {
                    if (v.is_infinity()) continue;
                    if (local_min_disc(m, v).kstar != 0) {
                        keep = false;
                        break;
                    }
                }
            if (keep) classes.insert(canonical_key(m));
            more = false;
            for (std::int64_t j = rank - 1; j >= 0; --j) {
                if (++idx[static_cast<size_t>(j)] < pools[static_cast<size_t>(j)].size()) {
                    more = true;
                    break;
                }
                idx[static_cast<size_t>(j)] = 0;
            }
        }
        return classes;
    };

    auto classes = scan(false);
    bool stable = classes == scan(true);

    bool ok = stable;
    json list = json::array();
    for (const auto& tuple : classes) {
        DrinfeldModule m(cfg, t, tuple);
        json entry;
        entry["module"] = to_json(m);
        entry["h_phi"] = to_json(h_phi(m));
        LowerNorthcottReport rep = check_lowernorthcott(m);
        entry["lowernorthcott_slack"] = rep.conclusive ? json(to_json(rep.slack)) : json(nullptr);
        if (rep.conclusive && rep.slack < 0) ok = false;
        list.push_back(entry);
    }

    json rep;
    rep["rank"] = rank;
    rep["bound"] = bound;
    rep["count"] = classes.size();
    rep["classes"] = list;
    rep["stable_under_reorder"] = stable;
    rep["ok"] = ok;
    return rep;
}

}  // namespace drlab
