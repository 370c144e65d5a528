#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "tamex/error.hpp"
#include "tamex/linearize.hpp"
#include "tamex/link.hpp"
#include "tamex/random.hpp"

namespace py = pybind11;
using namespace tamex;

namespace {

Field field_of(const std::string& name) { return Field::parse(name); }

Weight to_weight(const std::vector<std::string>& w) {
  Weight a;
  for (const auto& s : w) a.push_back(parse_rational(s));
  return a;
}

std::vector<std::string> from_weight(const Weight& w) {
  std::vector<std::string> out;
  for (const auto& x : w) out.push_back(rational_str(x));
  return out;
}

std::vector<std::string> components(const TameWord& w) {
  std::vector<std::string> out;
  for (const auto& c : w.components()) out.push_back(c.str());
  return out;
}

}  // namespace

PYBIND11_MODULE(_tamex, m) {
  m.doc() = "Exact tame automorphisms, monomial valuations and their links";

  py::register_exception<PreconditionError>(m, "PreconditionError", PyExc_ValueError);
  py::register_exception<BudgetExceeded>(m, "BudgetExceeded", PyExc_RuntimeError);

  py::class_<TameWord>(m, "Word")
      .def(py::init([](const std::string& text, std::size_t n, const std::string& field) {
             return parse_word(text, n, field_of(field));
           }),
           py::arg("text"), py::arg("n"), py::arg("field") = "Q")
      .def_property_readonly("dim", &TameWord::dim)
      .def_property_readonly("components", &components)
      .def_property_readonly("degree", &TameWord::degree)
      .def("inverse", [](const TameWord& w) { return invert(w); })
      .def("__matmul__", [](const TameWord& a, const TameWord& b) { return compose(a, b); })
      .def("__eq__", [](const TameWord& a, const TameWord& b) { return a == b; })
      .def("__hash__", &TameWord::hash)
      .def("__str__", &TameWord::str)
      .def("__repr__", [](const TameWord& w) { return "Word" + w.str(); });

  m.def("identity", [](std::size_t n, const std::string& field) { return TameWord::identity(n, field_of(field)); },
        py::arg("n"), py::arg("field") = "Q");

  m.def("nu_eval",
        [](const std::vector<std::string>& w, const std::string& poly, const std::string& field) {
          Weight a = to_weight(w);
          return val_str(nu_eval(a, parse_polynomial(poly, a.size(), field_of(field))));
        },
        py::arg("weight"), py::arg("poly"), py::arg("field") = "Q");
  m.def("point_eval",
        [](const TameWord& f, const std::vector<std::string>& w, const std::string& poly) {
          return val_str(point_eval(f, to_weight(w), parse_polynomial(poly, f.dim(), f.field())));
        });
  m.def("points_equal",
        [](const TameWord& f, const std::vector<std::string>& a, const TameWord& g, const std::vector<std::string>& b) {
          return points_equal(ValuationPoint(f, to_weight(a)), ValuationPoint(g, to_weight(b)));
        });
  m.def("fixes", [](const TameWord& f, const std::vector<std::string>& w) { return fixes(f, to_weight(w)); });
  m.def("fixed_region", [](const TameWord& f) { return fixed_inequalities(f).str(); });
  m.def("rho", [](const TameWord& f, const std::vector<std::string>& w) {
    return from_weight(rho(ValuationPoint(f, to_weight(w))).values());
  });
  m.def("multiplicity", [](const std::vector<std::string>& w) { return multiplicity(to_weight(w)); });
  m.def("hyperplanes_through", [](const std::vector<std::string>& w) {
    std::vector<std::string> out;
    for (const auto& q : hyperplanes_through(to_weight(w))) out.push_back(q.str(true));
    return out;
  });
  m.def("distance_lower",
        [](const TameWord& f, const std::vector<std::string>& a, const TameWord& g, const std::vector<std::string>& b) {
          return distance_lower(ValuationPoint(f, to_weight(a)), ValuationPoint(g, to_weight(b)));
        });
  m.def("distance_upper",
        [](const TameWord& f, const std::vector<std::string>& a, const TameWord& g, const std::vector<std::string>& b,
           const std::vector<TameWord>& catalog) {
          ChainResult r = chain_distance_upper(ValuationPoint(f, to_weight(a)), ValuationPoint(g, to_weight(b)), catalog);
          return py::make_tuple(r.lower, r.upper, r.connected);
        },
        py::arg("f"), py::arg("a"), py::arg("g"), py::arg("b"), py::arg("catalog") = std::vector<TameWord>{});

  m.def("fano_link", [] {
    LinkGraph g = fano_link();
    py::dict d;
    d["vertices"] = g.vertices.size();
    d["edges"] = g.edges.size();
    d["girth"] = combinatorial_girth(g);
    d["metric_girth"] = metric_girth(g);
    d["diameter"] = link_diameter(g);
    return d;
  });
  m.def("octangle", [](unsigned p, unsigned q) {
    AnglesCycle a = example_angles_cycle(p, q);
    py::dict d;
    d["log_total"] = a.log_total;
    d["simplex_total"] = a.simplex_total;
    d["glued"] = a.glued;
    d["commute"] = a.commute;
    return d;
  });
  m.def("linearize", [](const std::vector<TameWord>& elements) {
    Linearization l = linearize(group_from_elements(elements));
    return py::make_tuple(l.h, l.conjugates);
  });
  m.def("check_valuation_axioms", [](std::size_t n, const std::string& field, std::size_t trials, std::uint64_t seed) {
    AxiomReport r = check_valuation_axioms(n, field_of(field), trials, seed);
    return r.multiplicativity_failures + r.ultrametric_failures;
  });
}
