#include "kinstab/errors.hpp"
#include "kinstab/linalg.hpp"
#include "kinstab/scenario.hpp"
#include "kinstab/surface.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>
#include <vector>

namespace py = pybind11;

namespace {

kinstab::SurfaceSpec spec_from(const std::vector<long long>& weights, long long degree) {
    if (weights.size() != 4) throw kinstab::BadParameters("expected 4 weights");
    return {{weights[0], weights[1], weights[2], weights[3]}, degree};
}

kinstab::SymMatrix matrix_from(const std::vector<std::vector<std::string>>& rows) {
    std::vector<std::vector<kinstab::Rational>> parsed;
    for (const auto& row : rows) {
        std::vector<kinstab::Rational> r;
        for (const auto& entry : row) r.push_back(kinstab::Rational::parse(entry));
        parsed.push_back(std::move(r));
    }
    return kinstab::SymMatrix::from_rows(parsed);
}

} // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Exact K-instability certificates for del Pezzo hypersurfaces in weighted P^3";
    m.attr("__version__") = "0.1.0";

    py::register_exception<kinstab::Error>(m, "EngineError", PyExc_ValueError);

    m.def("validate_surface",
          [](const std::vector<long long>& weights, long long degree) {
              return kinstab::validate(spec_from(weights, degree));
          },
          py::arg("weights"), py::arg("degree"),
          "Validate a surface spec and return its index.");

    m.def("hyperplane_square",
          [](const std::vector<long long>& weights, long long degree) {
              return kinstab::hyperplane_square(spec_from(weights, degree)).str();
          },
          py::arg("weights"), py::arg("degree"));

    m.def("antican_square",
          [](const std::vector<long long>& weights, long long degree) {
              return kinstab::antican_square(spec_from(weights, degree)).str();
          },
          py::arg("weights"), py::arg("degree"));

    m.def("h0_count",
          [](const std::vector<long long>& weights, long long degree, long long k) {
              return kinstab::h0_count(spec_from(weights, degree), k);
          },
          py::arg("weights"), py::arg("degree"), py::arg("k"),
          "Section count of O(k) by lattice-point enumeration.");

    m.def("normalize_quotient",
          [](long long m_order, std::pair<long long, long long> raw) {
              auto p = kinstab::normalize_quotient(m_order, {raw.first, raw.second});
              return std::make_pair(p.order,
                                    std::make_pair(p.local_weights[0], p.local_weights[1]));
          },
          py::arg("m"), py::arg("raw"),
          "Canonical 1/m(1, q) form of a cyclic quotient singularity.");

    m.def("solve",
          [](const std::vector<std::vector<std::string>>& gram,
             const std::vector<std::string>& rhs) {
              std::vector<kinstab::Rational> v;
              for (const auto& entry : rhs) v.push_back(kinstab::Rational::parse(entry));
              std::vector<std::string> out;
              for (const auto& x : kinstab::solve(matrix_from(gram), v)) out.push_back(x.str());
              return out;
          },
          py::arg("gram"), py::arg("rhs"), "Exact solution of a symmetric rational system.");

    m.def("is_negative_definite",
          [](const std::vector<std::vector<std::string>>& gram) {
              return kinstab::is_negative_definite(matrix_from(gram));
          },
          py::arg("gram"));

    m.def("run_preset_json",
          [](const std::string& name, long long n, long long m, bool allow_boundary) {
              return kinstab::report_to_json(kinstab::run_preset(name, n, m, allow_boundary));
          },
          py::arg("name"), py::arg("n") = -1, py::arg("m") = -1,
          py::arg("allow_boundary") = false);

    m.def("run_scenario_json",
          [](const std::string& text, const std::string& source) {
              return kinstab::report_to_json(
                  kinstab::run_scenario(kinstab::parse_scenario(text, source)));
          },
          py::arg("text"), py::arg("source") = "scenario");

    m.def("preset_scenario_json",
          [](const std::string& name, long long n, long long m, bool allow_boundary) {
              return kinstab::scenario_to_json(
                  kinstab::make_preset(name, n, m, allow_boundary));
          },
          py::arg("name"), py::arg("n") = -1, py::arg("m") = -1,
          py::arg("allow_boundary") = false);

    m.def("sweep_csv",
          [](const std::string& family, long long n_lo, long long n_hi, long long m_lo,
             long long m_hi, bool allow_boundary) {
              return kinstab::sweep_to_csv(
                  kinstab::sweep(family, n_lo, n_hi, m_lo, m_hi, allow_boundary));
          },
          py::arg("family"), py::arg("n_lo"), py::arg("n_hi"), py::arg("m_lo") = 0,
          py::arg("m_hi") = 0, py::arg("allow_boundary") = false);

    m.def("sweep_json",
          [](const std::string& family, long long n_lo, long long n_hi, long long m_lo,
             long long m_hi, bool allow_boundary) {
              return kinstab::sweep_to_json(
                  kinstab::sweep(family, n_lo, n_hi, m_lo, m_hi, allow_boundary));
          },
          py::arg("family"), py::arg("n_lo"), py::arg("n_hi"), py::arg("m_lo") = 0,
          py::arg("m_hi") = 0, py::arg("allow_boundary") = false);
}
