#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <optional>

#include "drlab/lab.hpp"

using namespace drlab;

namespace {

json load_document(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw schema_error("$", "cannot open instance file: " + path);
    json j = json::parse(in, nullptr, false);
    if (j.is_discarded()) throw schema_error("$", "instance file is not valid JSON");
    return j;
}

void emit(const json& report, const std::optional<std::string>& out_path) {
    std::string text = report.dump(2);
    if (out_path) {
        std::ofstream out(*out_path);
        if (!out) throw error("cannot open output file: " + *out_path);
        out << text << "\n";
    }
    std::cout << text << "\n";
}

struct CommonFlags {
    std::string instance_path;
    std::optional<std::string> out_path;
    std::optional<std::uint64_t> seed;
    std::optional<std::string> tol;
    std::optional<std::int64_t> bound;
    std::optional<std::int64_t> count;

    void attach(CLI::App* cmd, bool need_instance = true) {
        auto* opt = cmd->add_option("--instance", instance_path, "instance JSON document");
        if (need_instance) opt->required();
        cmd->add_option("--out", out_path, "write the JSON report to this path");
        cmd->add_option("--seed", seed, "RNG seed (overrides the instance)");
        cmd->add_option("--tol", tol, "tolerance as an exact rational, e.g. 1/64");
        cmd->add_option("--bound", bound, "height bound (overrides the instance)");
        cmd->add_option("--count", count, "sample count (overrides the instance)");
    }

    // Flags override the instance's params block.
    Instance load() const {
        Instance in = instance_from_json(load_document(instance_path));
        if (seed) in.params["seed"] = *seed;
        if (tol) in.params["tol"] = *tol;
        if (bound) in.params["bound"] = *bound;
        if (count) in.params["count"] = *count;
        return in;
    }
};

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact heights, Green's functions, and minimal models for Drinfeld modules over F_q(T)"};
    app.require_subcommand(1);

    CommonFlags height_f, zimmer_f, jplaces_f, torsion_f, family_f, enum_f;
    auto* c_height = app.add_subcommand("height", "canonical height with local decomposition");
    height_f.attach(c_height);
    auto* c_zimmer = app.add_subcommand("scan-zimmer", "sampled height-difference sandwich scan");
    zimmer_f.attach(c_zimmer);
    auto* c_jplaces =
        app.add_subcommand("scan-jplaces", "enumerated lower-bound ratio scan");
    jplaces_f.attach(c_jplaces);
    auto* c_torsion = app.add_subcommand("torsion", "torsion submodule with annihilators");
    torsion_f.attach(c_torsion);
    auto* c_family = app.add_subcommand("family", "specialization of a one-parameter family");
    family_f.attach(c_family);
    auto* c_enum = app.add_subcommand("enumerate", "isomorphism classes of bounded height");
    enum_f.attach(c_enum);

    CLI11_PARSE(app, argc, argv);

    try {
        json report;
        std::optional<std::string> out_path;
        if (c_height->parsed()) {
            out_path = height_f.out_path;
            report = cmd_height(height_f.load());
        } else if (c_zimmer->parsed()) {
            out_path = zimmer_f.out_path;
            Instance in = zimmer_f.load();
            report = cmd_scan_zimmer(in.cfg, in.param_seed(), in.param_int("count"),
                                     in.param_int("rank"), in.param_int("bound"),
                                     in.param_rat("tol", Rat(1)));
        } else if (c_jplaces->parsed()) {
            out_path = jplaces_f.out_path;
            Instance in = jplaces_f.load();
            report = cmd_scan_jplaces(in.cfg, in.param_seed(), in.param_int("rank"),
                                      in.param_int("s"), in.param_int("bound"),
                                      in.param_int("point_bound"));
        } else if (c_torsion->parsed()) {
            out_path = torsion_f.out_path;
            report = cmd_torsion(torsion_f.load());
        } else if (c_family->parsed()) {
            out_path = family_f.out_path;
            json doc = load_document(family_f.instance_path);
            if (family_f.tol) doc["tol"] = *family_f.tol;
            report = cmd_family(family_from_json(doc));
        } else if (c_enum->parsed()) {
            out_path = enum_f.out_path;
            Instance in = enum_f.load();
            report = cmd_enumerate_modules(in.cfg, in.param_int("rank"), in.param_int("bound"));
        }
        emit(report, out_path);
        return report_exit_code(report);
    } catch (const schema_error& e) {
        std::cerr << "schema error: " << e.what() << "\n";
        return kExitSchema;
    } catch (const resource_limit& e) {
        std::cerr << "resource guard: " << e.what() << "\n";
        return kExitResource;
    } catch (const error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
