#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "pqhopf/report.hpp"

namespace py = pybind11;
using namespace pqhopf;

namespace {

// JSON crosses the boundary as text; the Python side decodes it with json.loads
py::object to_python(const Json& j) { return py::module_::import("json").attr("loads")(j.dump()); }

Presentation presentation_of(const std::string& family, std::uint32_t p, std::uint32_t q, int delta) {
  const Family f = parse_family(family);
  if (f == Family::PrimAlg) return make_presentation(f, p, 1, delta);
  return make_presentation(f, p, q, delta);
}

struct Algebra {
  HopfData data;
  std::optional<AlgebraInfo> info;
};

AlgebraInfo info_of(const Algebra& a, std::uint32_t p, std::uint32_t q) {
  if (a.info) return *a.info;
  AlgebraInfo info;
  info.family = "custom";
  info.p = p;
  info.q = q;
  info.commutative = is_commutative(a.data);
  info.cocommutative = is_cocommutative(a.data);
  return info;
}

std::vector<std::uint32_t> coeffs(const FieldElement& e) { return e.coeffs(); }

}  // namespace

PYBIND11_MODULE(_pqhopf, m) {
  m.doc() = "Frobenius-Schur indicators of pq-dimensional pointed Hopf algebras";

  py::register_exception<CatalogError>(m, "CatalogError", PyExc_ValueError);
  py::register_exception<AnalysisError>(m, "AnalysisError", PyExc_ValueError);
  py::register_exception<FieldError>(m, "FieldError", PyExc_ValueError);
  py::register_exception<HopfError>(m, "HopfError", PyExc_ValueError);
  py::register_exception<IntegralError>(m, "IntegralError", PyExc_ValueError);

  m.def("required_degree", &required_degree, py::arg("p"), py::arg("q"));
  m.def(
      "primitive_qth_root",
      [](std::uint32_t p, std::uint32_t k, std::uint32_t q) { return coeffs(primitive_qth_root(make_field(p, k), q)); },
      py::arg("p"), py::arg("k"), py::arg("q"), "Coefficient list of the first element of exact order q in GF(p^k).");
  m.def(
      "field_modulus", [](std::uint32_t p, std::uint32_t k) { return make_field(p, k)->spec().modulus; },
      py::arg("p"), py::arg("k"));
  m.def("chi", &chi, py::arg("r"), py::arg("n"));

  py::class_<Algebra>(m, "HopfAlgebra")
      .def_property_readonly("dim", [](const Algebra& a) { return a.data.dim; })
      .def_property_readonly("basis", [](const Algebra& a) { return a.data.basis_labels; })
      .def_property_readonly("field", [](const Algebra& a) { return to_python(field_to_json(a.data.F().spec())); })
      .def("is_commutative", [](const Algebra& a) { return is_commutative(a.data); })
      .def("is_cocommutative", [](const Algebra& a) { return is_cocommutative(a.data); })
      .def(
          "validate",
          [](const Algebra& a) {
            std::vector<std::string> out;
            for (const auto& f : validate(a.data).failures) out.push_back(f.axiom);
            return out;
          },
          "Names of the failing axioms; empty when valid.")
      .def("to_json", [](const Algebra& a) { return hopf_to_json(a.data).dump(); })
      .def("indicator_trace", [](const Algebra& a, unsigned n) { return coeffs(indicator_trace(a.data, n)); },
           py::arg("n"))
      .def("indicator_integral", [](const Algebra& a, unsigned n) { return coeffs(indicator_integral(a.data, n)); },
           py::arg("n"))
      .def("integrals", [](const Algebra& a) { return to_python(integrals_to_json(a.data, integral_pair(a.data))); })
      .def("__repr__", [](const Algebra& a) {
        return "<HopfAlgebra dim=" + std::to_string(a.data.dim) + " over GF(" + std::to_string(a.data.F().size()) +
               ")>";
      });

  m.def(
      "build",
      [](const std::string& family, std::uint32_t p, std::uint32_t q, int delta) {
        const Presentation pres = presentation_of(family, p, q, delta);
        HopfData h = build(pres);
        AlgebraInfo info = describe(pres, h);
        return Algebra{std::move(h), std::move(info)};
      },
      py::arg("family"), py::arg("p"), py::arg("q") = 1, py::arg("delta") = 0,
      "Validated algebra for a family id (f1 f2 f3 f4 grA grB grC groupalg primalg).");
  m.def(
      "construct",
      [](const std::string& family, std::uint32_t p, std::uint32_t q, int delta) {
        const Construction c = construct(presentation_of(family, p, q, delta));
        std::vector<std::string> problems;
        for (const auto& f : c.report.failures) problems.push_back(f.axiom);
        problems.insert(problems.end(), c.solver_errors.begin(), c.solver_errors.end());
        return py::make_tuple(Algebra{c.algebra, std::nullopt}, problems);
      },
      py::arg("family"), py::arg("p"), py::arg("q") = 1, py::arg("delta") = 0,
      "Structure constants without insisting on the axioms, plus the list of problems.");
  m.def("from_json", [](const std::string& text) { return Algebra{hopf_from_json(Json::parse(text)), std::nullopt}; });
  m.def("dual", [](const Algebra& a) { return Algebra{dual(a.data), std::nullopt}; });
  m.def("tensor", [](const Algebra& a, const Algebra& b) { return Algebra{tensor(a.data, b.data), std::nullopt}; });

  m.def(
      "indicators",
      [](const Algebra& a, unsigned n_max, const std::string& method, std::uint32_t p, std::uint32_t q) {
        return to_python(report_to_json(indicator_sequence(a.data, info_of(a, p, q), n_max, parse_method(method))));
      },
      py::arg("algebra"), py::arg("n_max"), py::arg("method") = "both", py::arg("p") = 0, py::arg("q") = 0,
      "Indicator report as a dict; p and q are only needed for algebras not built from a family.");

  m.def(
      "verify_main_theorem",
      [](std::uint32_t p, std::uint32_t q, unsigned n_max) {
        return to_python(theorem_to_json(verify_main_theorem(p, q, n_max ? n_max : 4 * p * q)));
      },
      py::arg("p"), py::arg("q"), py::arg("n_max") = 0);
  m.def(
      "verify_properties",
      [](std::uint32_t p, std::uint32_t q, unsigned n_max) {
        return to_python(properties_to_json(verify_properties(p, q, n_max ? n_max : 4 * p * q)));
      },
      py::arg("p"), py::arg("q"), py::arg("n_max") = 0);
  m.def("verify_lemma_part1", &verify_lemma_part1, py::arg("p"), py::arg("q"), py::arg("i"), py::arg("n"));
  m.def("verify_lemma_part2", &verify_lemma_part2, py::arg("p"), py::arg("q"), py::arg("i"), py::arg("n"));
  m.def("corollary_sum", &corollary_sum, py::arg("p"), py::arg("q"), py::arg("n"));
  m.def(
      "verify_xi_independence",
      [](const std::string& family, std::uint32_t p, std::uint32_t q, unsigned n_max) {
        return verify_xi_independence(parse_family(family), p, q, n_max);
      },
      py::arg("family"), py::arg("p"), py::arg("q"), py::arg("n_max") = 0);
}
