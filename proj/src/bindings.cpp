#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "cdiff/charsum.hpp"
#include "cdiff/cli.hpp"
#include "cdiff/closed_spectrum.hpp"
#include "cdiff/curve.hpp"
#include "cdiff/errors.hpp"
#include "cdiff/json_io.hpp"
#include "cdiff/oracle.hpp"
#include "cdiff/verifier.hpp"

namespace py = pybind11;
using namespace cdiff;

namespace {

std::map<std::uint64_t, std::uint64_t> entries(const Spectrum& s) { return s.entries(); }

FormulaVariant parse_variant(const std::string& v) {
  if (v == "cprim") return FormulaVariant::kCPrimitive;
  if (v == "printed") return FormulaVariant::kAsPrinted;
  throw InvalidInput("variant must be 'cprim' or 'printed'");
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "c-differential spectra of x^((q+1)/2) over F_{p^n}";

  py::register_exception<InvalidInput>(m, "InvalidInput", PyExc_ValueError);
  py::register_exception<InternalInconsistency>(m, "InternalInconsistency", PyExc_RuntimeError);

  py::class_<Field>(m, "Field")
      .def(py::init([](std::uint32_t p, std::uint32_t n) { return make_field(p, n); }), py::arg("p"),
           py::arg("n") = 1)
      .def_property_readonly("p", &Field::p)
      .def_property_readonly("n", &Field::n)
      .def_property_readonly("q", &Field::q)
      .def_property_readonly("modulus", [](const Field& f) { return f.spec().modulus; })
      .def("add", [](const Field& f, std::uint64_t a, std::uint64_t b) { return f.add(f.element(a), f.element(b)).index(); })
      .def("sub", [](const Field& f, std::uint64_t a, std::uint64_t b) { return f.sub(f.element(a), f.element(b)).index(); })
      .def("mul", [](const Field& f, std::uint64_t a, std::uint64_t b) { return f.mul(f.element(a), f.element(b)).index(); })
      .def("inv", [](const Field& f, std::uint64_t a) {
        if (a == 0) throw py::value_error("inverse of zero");
        return f.inv(f.element(a)).index();
      })
      .def("pow", [](const Field& f, std::uint64_t a, std::uint64_t e) { return f.pow(f.element(a), e).index(); })
      .def("eta", [](const Field& f, std::uint64_t a) { return f.eta(f.element(a)); })
      .def("coeffs", [](const Field& f, std::uint64_t a) { return f.coeffs(f.element(a)); })
      .def("subfield_degree", [](const Field& f, std::uint64_t a) { return f.subfield_degree(f.element(a)); });

  m.def("spectrum_brute",
        [](const Field& f, std::uint64_t c, std::optional<std::uint64_t> d) {
          return entries(spectrum_brute(f, d.value_or(default_exponent(f)), f.element(c)));
        },
        py::arg("field"), py::arg("c"), py::arg("d") = py::none());
  m.def("closed_spectrum_json",
        [](const Field& f, std::uint64_t c, const std::string& variant) {
          return to_json(closed_spectrum(f, f.element(c), parse_variant(variant))).dump();
        },
        py::arg("field"), py::arg("c"), py::arg("variant") = "cprim");
  m.def("classify", [](const Field& f, std::uint64_t c) { return classify(f, f.element(c)).label(); });
  m.def("abc_sums", [](const Field& f, std::uint64_t c) {
    const ABCSums s = abc_sums(f, f.element(c));
    return py::make_tuple(s.A, s.B, s.C);
  });
  m.def("curve_trace_json", [](const Field& f, std::uint64_t c, bool via_subfield) {
    const Element e = f.element(c);
    return to_json(via_subfield ? trace_via_subfield(f, e) : count_points(f, e)).dump();
  }, py::arg("field"), py::arg("c"), py::arg("via_subfield") = false);
  m.def("cornacchia", [](std::uint64_t p) {
    const TwoSquares t = cornacchia(p);
    return py::make_tuple(t.a, t.b);
  });
  m.def("trace_lift", &trace_lift, py::arg("t_base"), py::arg("q_base"), py::arg("m"));
  m.def("trace_x3_minus_x", &trace_x3_minus_x);
  m.def("n4_str", [](const Field& f, std::uint64_t c, std::optional<std::uint64_t> d) {
    return n4(f, d.value_or(default_exponent(f)), f.element(c)).str();
  }, py::arg("field"), py::arg("c"), py::arg("d") = py::none());
  m.def("verify_json", [](const Field& f, std::uint64_t c) { return to_json(verify_one(f, f.element(c))).dump(); });
  m.def("run_cli", [](const std::vector<std::string>& args) {
    std::ostringstream out, err;
    const int code = cli::run(args, out, err);
    return py::make_tuple(code, out.str(), err.str());
  });
}
