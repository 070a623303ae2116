#include "jackcc/connection.hpp"
#include "jackcc/grouporacle.hpp"
#include "jackcc/jack.hpp"
#include "jackcc/partitions.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace jackcc;

namespace {

py::object to_py_int(const BigInt& v) {
  return py::reinterpret_steal<py::object>(PyLong_FromString(v.get_str().c_str(), nullptr, 10));
}

py::list to_py_ints(const std::vector<BigInt>& values) {
  py::list out;
  for (const auto& v : values) out.append(to_py_int(v));
  return out;
}

std::vector<std::string> coeff_strings(const LaurentAlpha& a) {
  std::vector<std::string> out;
  for (const auto& c : a.coeffs()) out.push_back(c.get_str());
  return out;
}

}  // namespace

PYBIND11_MODULE(_jackcc, m) {
  m.doc() = "Exact Jack characters and Jack connection coefficients";
  py::register_exception<TheoremViolation>(m, "TheoremViolation", PyExc_ArithmeticError);

  py::class_<Partition>(m, "Partition")
      .def(py::init<std::vector<int>>(), py::arg("parts"))
      .def(py::init([](const std::string& text) { return parse_partition(text); }), py::arg("text"))
      .def_property_readonly("parts", [](const Partition& p) { return std::vector<int>(p.parts().begin(), p.parts().end()); })
      .def_property_readonly("weight", &Partition::weight)
      .def_property_readonly("length", &Partition::length)
      .def("__str__", &Partition::to_string)
      .def("__repr__", [](const Partition& p) { return "Partition('" + p.to_string() + "')"; })
      .def("__eq__", [](const Partition& a, const Partition& b) { return a == b; })
      .def("__hash__", [](const Partition& p) { return std::hash<Partition>{}(p); });
  py::implicitly_convertible<std::string, Partition>();
  py::implicitly_convertible<std::vector<int>, Partition>();

  py::class_<LaurentAlpha>(m, "LaurentAlpha")
      .def_property_readonly("min_degree", &LaurentAlpha::min_degree)
      .def_property_readonly("coeffs", &coeff_strings, "Coefficients from min_degree upward as 'p/q' strings")
      .def("is_zero", &LaurentAlpha::is_zero)
      .def("evaluate", [](const LaurentAlpha& a, const std::string& alpha) {
             return substitute_alpha(a, parse_rational(alpha)).get_str();
           }, py::arg("alpha"), "Exact value at a rational alpha given as 'p/q'; returned as 'p/q'")
      .def("__str__", &LaurentAlpha::to_string)
      .def("__repr__", [](const LaurentAlpha& a) { return "LaurentAlpha('" + a.to_string() + "')"; })
      .def("__eq__", [](const LaurentAlpha& a, const LaurentAlpha& b) { return a == b; });

  m.def("partitions", [](int n) { return generate_partitions(n); }, py::arg("n"),
        "Partitions of n in reverse lexicographic order");
  m.def("theta", &jackcc::theta, py::arg("lam"), py::arg("mu"), "Jack character theta^lam_mu(alpha)");
  m.def("jcc", [](const std::vector<Partition>& lambdas) { return jcc(lambdas); }, py::arg("lambdas"),
        "Jack connection coefficient a_{lambda^1,...,lambda^s}(alpha)");
  m.def("a_r_lambda", [](const Partition& lambda, int r) {
          const auto res = a_r_lambda(lambda, r);
          py::dict d;
          d["value"] = res.value;
          d["g"] = to_py_ints(res.g);
          d["b"] = to_py_ints(res.b);
          return d;
        }, py::arg("lam"), py::arg("r"), "a^r_lambda(alpha) with its g and b coefficient lists");
  m.def("denes_closed_form", &denes_closed_form, py::arg("lam"));
  m.def("jack_in_monomial", [](const Partition& lambda) {
          const MonoVec j = jack_in_monomial(lambda);
          py::dict d;
          for (const auto& [mu, c] : j.terms()) d[py::str(mu.to_string())] = c;
          return d;
        }, py::arg("lam"), "J_lambda in the monomial basis, keyed by partition string");
  m.def("jackson_formula", [](int n, int s) { return jackson_formula(n, s).get_str(); }, py::arg("n"), py::arg("s"));
  m.def("character", [](const Partition& l, const Partition& mu) { return to_py_int(character(l, mu)); },
        py::arg("lam"), py::arg("mu"), "Irreducible character chi^lam_mu of the symmetric group");
  m.def("c_coeff", [](const Partition& t, const std::vector<Partition>& f) { return to_py_int(c_coeff(t, f)); },
        py::arg("target"), py::arg("factors"), "Class-algebra connection coefficient by direct search");
  m.def("b_coeff", [](const Partition& t, const std::vector<Partition>& f) { return to_py_int(b_coeff(t, f)); },
        py::arg("target"), py::arg("factors"), "Double-coset connection coefficient by convolution in S_2n");

  auto report = [](const VerificationReport& r) {
    py::list out;
    for (const auto& c : r.checks) out.append(py::make_tuple(c.name, c.passed, c.detail));
    return out;
  };
  m.def("verify_theorems", [report](int n_max, int r_extra) { return report(verify_theorems(n_max, r_extra)); },
        py::arg("n_max"), py::arg("r_extra") = 4, "List of (check, passed, detail) tuples");
  m.def("verify_oracles", [report](int n_max) { return report(verify_oracles(n_max)); }, py::arg("n_max"));
}
