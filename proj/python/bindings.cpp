#include <sstream>

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "fibrekit/cli.hpp"
#include "fibrekit/criteria.hpp"
#include "fibrekit/ideal.hpp"
#include "fibrekit/input.hpp"
#include "fibrekit/report.hpp"

namespace py = pybind11;
using namespace fibrekit;

namespace {

// A bare int is a semigroup valuation, a sequence is an exponent vector.
Monomial to_monomial(py::handle h) {
  if (py::isinstance<py::int_>(h)) return Monomial{{h.cast<Int>()}};
  return Monomial{h.cast<std::vector<Int>>()};
}

Ideal make_ideal(const Ring& ring, const py::iterable& gens) {
  std::vector<Monomial> ms;
  for (auto g : gens) ms.push_back(to_monomial(g));
  return minimalize(ms, ring);
}

py::object exponents(const Ring& ring, const Monomial& m) {
  if (ring.is_semigroup()) return py::int_(m.exponents[0]);
  return py::cast(m.exponents);
}

std::string analyze_document(const std::string& text, std::optional<int> n_max,
                             std::optional<int> n_check) {
  InputDocument doc = parse_input(text);
  if (n_max) doc.n_max = n_max;
  if (n_check) doc.n_check = n_check;
  auto report = analyze(to_spec(doc), AnalysisOptions{doc.n_max, doc.n_check});
  return render_tree(report, doc);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  py::exception<Error> error(m, "Error");
  py::exception<ParseError> parse_error(m, "ParseError", error.ptr());
  // Raise an instance so the kind and position travel as attributes.
  py::register_exception_translator([](std::exception_ptr p) {
    auto raise = [](const char* name, const Error& e) {
      py::object cls = py::module_::import("fibrekit._core").attr(name);
      py::object inst = cls(e.what());
      inst.attr("kind") = to_string(e.kind());
      if (auto* pe = dynamic_cast<const ParseError*>(&e)) {
        inst.attr("line") = pe->line();
        inst.attr("column") = pe->column();
      }
      PyErr_SetObject(cls.ptr(), inst.ptr());
    };
    try {
      if (p) std::rethrow_exception(p);
    } catch (const ParseError& e) {
      raise("ParseError", e);
    } catch (const Error& e) {
      raise("Error", e);
    }
  });

  py::class_<Ring>(m, "Ring")
      .def_static("power_series", py::overload_cast<int>(&Ring::power_series), py::arg("dim"))
      .def_static("power_series_in", py::overload_cast<std::vector<std::string>>(&Ring::power_series),
                  py::arg("variables"))
      .def_static("semigroup", &Ring::numerical_semigroup, py::arg("generators"))
      .def_property_readonly("dim", &Ring::dim)
      .def_property_readonly("is_semigroup", &Ring::is_semigroup)
      .def_property_readonly("variables", &Ring::variables)
      .def_property_readonly("semigroup_generators", &Ring::semigroup_generators)
      .def_property_readonly("frobenius", &Ring::frobenius)
      .def("in_semigroup", &Ring::in_semigroup)
      .def("__eq__", [](const Ring& a, const Ring& b) { return a == b; })
      .def("__repr__", &Ring::describe);

  py::class_<Ideal>(m, "Ideal")
      .def(py::init(&make_ideal), py::arg("ring"), py::arg("generators"))
      .def_static("maximal", &Ideal::maximal)
      .def_static("unit", &Ideal::unit)
      .def_property_readonly("ring", &Ideal::ring)
      .def_property_readonly("generators",
                             [](const Ideal& I) {
                               py::list out;
                               for (const auto& g : I.generators()) out.append(exponents(I.ring(), g));
                               return out;
                             })
      .def_property_readonly("mu", &Ideal::mu)
      .def("colength", [](const Ideal& I) { return colength(I); })
      .def("__contains__",
           [](const Ideal& I, py::handle h) { return I.contains(to_monomial(h)); })
      .def("__mul__", &multiply)
      .def("__add__", &sum)
      .def("__and__", &intersect)
      .def("__pow__", &power)
      .def("__eq__", [](const Ideal& a, const Ideal& b) { return a == b; })
      .def("__le__", [](const Ideal& a, const Ideal& b) { return contains(b, a); })
      .def("__str__", &Ideal::format)
      .def("__repr__", [](const Ideal& I) { return "Ideal" + I.format(); });

  m.def("analyze_document", &analyze_document, py::arg("text"), py::arg("n_max") = py::none(),
        py::arg("n_check") = py::none(),
        "Analyze an input document; returns the structured report as JSON text.");
  m.def("canonical_text", [](const std::string& text) { return to_text(parse_input(text)); });
  m.def(
      "run",
      [](const std::vector<std::string>& args) {
        std::ostringstream out, err;
        int code = cli::run(args, out, err);
        return py::make_tuple(code, out.str(), err.str());
      },
      py::arg("args"), "Run the command-line tool in-process; returns (exit_code, stdout, stderr).");
}
