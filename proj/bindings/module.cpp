#include <pybind11/pybind11.h>

#include "drlab/lab.hpp"

namespace py = pybind11;
using namespace drlab;

// Thin JSON-string API: every entry point takes and returns serialized
// documents, so the Python side needs no binding for the algebraic types.
namespace {

std::string run_height(const std::string& instance) {
    return cmd_height(instance_from_json(json::parse(instance))).dump();
}

std::string run_scan_zimmer(const std::string& field, std::uint64_t seed, std::int64_t count,
                            std::int64_t rank, std::int64_t bound, const std::string& tol) {
    FqConfigPtr cfg = config_from_json(json::parse(field), "$");
    return cmd_scan_zimmer(cfg, seed, count, rank, bound, rat_from_string(tol)).dump();
}

std::string run_scan_jplaces(const std::string& field, std::uint64_t seed, std::int64_t rank,
                             std::int64_t s, std::int64_t bound, std::int64_t point_bound) {
    FqConfigPtr cfg = config_from_json(json::parse(field), "$");
    return cmd_scan_jplaces(cfg, seed, rank, s, bound, point_bound).dump();
}

std::string run_torsion(const std::string& instance) {
    return cmd_torsion(instance_from_json(json::parse(instance))).dump();
}

std::string run_family(const std::string& family) {
    return cmd_family(family_from_json(json::parse(family))).dump();
}

std::string run_enumerate(const std::string& field, std::int64_t rank, std::int64_t bound) {
    FqConfigPtr cfg = config_from_json(json::parse(field), "$");
    return cmd_enumerate_modules(cfg, rank, bound).dump();
}

}  // namespace

PYBIND11_MODULE(drlab_py, m) {
    m.doc() = "Exact canonical heights and minimal models for Drinfeld modules over F_q(T)";

    // translators run newest-first, so register the base class first
    py::register_exception<error>(m, "DrlabError", PyExc_RuntimeError);
    py::register_exception<resource_limit>(m, "ResourceLimit", PyExc_RuntimeError);
    py::register_exception<schema_error>(m, "SchemaError", PyExc_ValueError);

    m.def("height", &run_height, py::arg("instance_json"),
          "canonical height report for an instance document (JSON in, JSON out)");
    m.def("scan_zimmer", &run_scan_zimmer, py::arg("field_json"), py::arg("seed"),
          py::arg("count"), py::arg("rank"), py::arg("bound"), py::arg("tol") = "1",
          "sampled height-difference sandwich scan");
    m.def("scan_jplaces", &run_scan_jplaces, py::arg("field_json"), py::arg("seed"),
          py::arg("rank"), py::arg("s"), py::arg("bound"), py::arg("point_bound"),
          "enumerated lower-bound ratio scan");
    m.def("torsion", &run_torsion, py::arg("instance_json"),
          "torsion submodule with annihilators");
    m.def("family", &run_family, py::arg("family_json"),
          "specialization experiment for a one-parameter family");
    m.def("enumerate_modules", &run_enumerate, py::arg("field_json"), py::arg("rank"),
          py::arg("bound"), "isomorphism classes of bounded height");
}
