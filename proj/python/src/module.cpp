#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <limits>

#include "bockstein/dimension.hpp"
#include "bockstein/error.hpp"
#include "bockstein/expr.hpp"
#include "bockstein/homology.hpp"
#include "bockstein/oracle.hpp"

namespace py = pybind11;
using namespace bockstein;

namespace {

py::object number(const ExtInt& v) {
  if (v.is_pos_inf()) return py::float_(std::numeric_limits<double>::infinity());
  if (v.is_neg_inf()) return py::float_(-std::numeric_limits<double>::infinity());
  return py::int_(v.value());
}

ExtInt ext(const py::object& v) {
  if (py::isinstance<py::str>(v)) return ExtInt::parse(v.cast<std::string>());
  if (py::isinstance<py::float_>(v)) {
    double d = v.cast<double>();
    if (d == std::numeric_limits<double>::infinity()) return ExtInt::inf();
    if (d == -std::numeric_limits<double>::infinity()) return ExtInt::neg_inf();
  }
  return ExtInt(v.cast<std::int64_t>());
}

py::object loads(const Json& j) { return py::module_::import("json").attr("loads")(j.dump()); }

BasisKind basis(const std::string& text) { return expr::parse("Phi(" + text + ",2)").basis; }

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Cohomological dimension types and Bockstein functions";

  py::register_exception<Error>(m, "BocksteinError", PyExc_ValueError);

  py::class_<CdType>(m, "CdType")
      .def(py::init([](const std::string& text) { return expr::evaluate_cdtype(text); }), py::arg("text"))
      .def_static("zero", &CdType::zero)
      .def_property_readonly("is_zero", &CdType::is_zero)
      .def_property_readonly("S", [](const CdType& f) { return f.S().to_string(); })
      .def_property_readonly("D", [](const CdType& f) { return f.D().to_string(); })
      .def("norm", [](const CdType& f) { return number(norm(f)); })
      .def("inorm", [](const CdType& f) { return number(inferior_norm(f)); })
      .def("dim", [](const CdType& f, const std::string& g) { return number(dim(f, expr::parse_group(g))); },
           py::arg("group"))
      .def("phi", [](const CdType& f) { return loads(to_json(to_phi(f))); })
      .def("to_json", [](const CdType& f) { return loads(to_json(f)); })
      .def("conj", &conjugate)
      .def("decompose", [](const CdType& f) { return decompose(f).to_string(); })
      .def("deficiency", [](const CdType& f, std::uint64_t p) { return deficiency(f, Prime(p)); })
      .def("is_full_valued", &is_full_valued)
      .def("__add__", [](const CdType& a, const CdType& b) { return sum(a, b); })
      .def("__mul__", [](const CdType& a, const CdType& b) { return times(a, b); })
      .def("__or__", [](const CdType& a, const CdType& b) { return wedge(a, b); })
      .def("__le__", [](const CdType& a, const CdType& b) { return leq(a, b); })
      .def("__eq__", [](const CdType& a, const CdType& b) { return a == b; })
      .def("__hash__", [](const CdType& f) { return py::hash(py::str(f.to_string())); })
      .def("__str__", &CdType::to_string)
      .def("__repr__", [](const CdType& f) { return "CdType('" + f.to_string() + "')"; });

  m.def("nat", [](const py::object& n) { return nat(ext(n)); }, py::arg("n"));
  m.def("phi_basis", [](const std::string& g, const py::object& n) { return phi_basis(basis(g), ext(n)); },
        py::arg("basis"), py::arg("n"));
  m.def("from_json", [](const std::string& text) { return cdtype_from_json(Json::parse(text)); }, py::arg("text"));
  m.def("evaluate", [](const std::string& text) { return expr::render_text(expr::evaluate(text)); }, py::arg("text"));
  m.def("evaluate_json", [](const std::string& text) { return loads(expr::render_json(expr::evaluate(text))); },
        py::arg("text"));
  m.def("sigma", [](const std::string& g) { return sigma(expr::parse_group(g)).to_string(); }, py::arg("group"));
  m.def(
      "check_laws",
      [](const std::vector<std::uint64_t>& primes, std::int64_t bound, const std::vector<std::string>& laws,
         std::uint64_t samples) {
        Universe u;
        for (auto p : primes) u.primes.emplace_back(p);
        u.value_bound = bound;
        LawOptions opt;
        opt.laws = laws;
        opt.samples = samples;
        return loads(to_json(check_laws(u, opt)));
      },
      py::arg("primes"), py::arg("bound"), py::arg("laws") = std::vector<std::string>{},
      py::arg("samples") = 20000);
  m.def("law_names", &law_names);

  m.def(
      "homology",
      [](const std::string& complex, const std::string& coeff, bool cohomology, bool reduced) {
        auto c = homology::SimplicialComplex::parse(complex).chain_complex();
        auto co = homology::Coefficients::parse(coeff);
        auto h = cohomology ? homology::cohomology(c, co, reduced) : homology::homology(c, co, reduced);
        std::vector<std::string> out;
        for (const auto& g : h.groups) out.push_back(g.to_string());
        return out;
      },
      py::arg("complex"), py::arg("coeff") = "Z", py::arg("cohomology") = false, py::arg("reduced") = false);
}
