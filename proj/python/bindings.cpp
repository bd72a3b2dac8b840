#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "hmp/entropy.hpp"
#include "hmp/errors.hpp"
#include "hmp/expansion.hpp"
#include "hmp/ising.hpp"
#include "hmp/series.hpp"

namespace py = pybind11;

namespace {

hmp::BitSequence to_sequence(const std::vector<int>& symbols) {
  return hmp::BitSequence(symbols);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Entropy rate of the binary symmetric hidden Markov process";

  py::register_exception<hmp::invalid_input_error>(m, "InvalidInputError", PyExc_ValueError);
  py::register_exception<hmp::resource_limit_error>(m, "ResourceLimitError", PyExc_RuntimeError);
  py::register_exception<hmp::unsupported_order_error>(m, "UnsupportedOrderError",
                                                       PyExc_ValueError);

  py::class_<hmp::ProcessParams>(m, "ProcessParams")
      .def(py::init<double, double>(), py::arg("p"), py::arg("eps"))
      .def_readonly("p", &hmp::ProcessParams::p)
      .def_readonly("eps", &hmp::ProcessParams::eps);

  py::enum_<hmp::Boundary>(m, "Boundary")
      .value("open", hmp::Boundary::open)
      .value("periodic", hmp::Boundary::periodic);

  py::class_<hmp::IsingParams>(m, "IsingParams")
      .def_readonly("j", &hmp::IsingParams::j)
      .def_readonly("k", &hmp::IsingParams::k)
      .def_readonly("a0", &hmp::IsingParams::a0)
      .def_readonly("a1", &hmp::IsingParams::a1)
      .def_readonly("n", &hmp::IsingParams::n);

  m.def("markov_prob", [](const std::vector<int>& s, double p) {
    return hmp::markov_prob(to_sequence(s), p);
  });
  m.def("emission_prob", [](const std::vector<int>& r, const std::vector<int>& s, double eps) {
    return hmp::emission_prob(to_sequence(r), to_sequence(s), eps);
  });
  m.def("observed_prob_brute", [](const std::vector<int>& r, const hmp::ProcessParams& params) {
    return hmp::observed_prob_brute(to_sequence(r), params);
  });
  m.def("observed_prob_forward", [](const std::vector<int>& r, const hmp::ProcessParams& params) {
    return hmp::observed_prob_forward(to_sequence(r), params);
  });
  m.def(
      "sample",
      [](const hmp::ProcessParams& params, int length, std::uint64_t seed) {
        const auto [s, r] = hmp::sample(params, length, seed);
        return py::make_tuple(s.symbols(), r.symbols());
      },
      py::arg("params"), py::arg("length"), py::arg("seed"));

  m.def("ising_couplings", &hmp::ising_couplings, py::arg("params"), py::arg("n"),
        py::arg("boundary") = hmp::Boundary::open);
  m.def("ising_z", [](const std::vector<int>& r, const hmp::IsingParams& ising) {
    return hmp::ising_z(to_sequence(r), ising);
  });
  m.def("ising_z_low_order",
        [](const std::vector<int>& r, const hmp::IsingParams& ising, int order) {
          return hmp::ising_z_low_order(to_sequence(r), ising, order);
        });

  m.def(
      "block_entropy",
      [](int n, const hmp::ProcessParams& params) { return hmp::block_entropy(n, params); },
      py::arg("n"), py::arg("params"));
  m.def(
      "conditional_entropy",
      [](int n, const hmp::ProcessParams& params) { return hmp::conditional_entropy(n, params); },
      py::arg("n"), py::arg("params"));
  m.def(
      "lower_bound",
      [](int n, const hmp::ProcessParams& params) { return hmp::lower_bound(n, params); },
      py::arg("n"), py::arg("params"));
  m.def(
      "smb_estimate",
      [](const hmp::ProcessParams& params, std::int64_t length, std::uint64_t seed) {
        const auto est = hmp::smb_estimate(params, length, seed);
        return py::make_tuple(est.estimate, est.stderr_);
      },
      py::arg("params"), py::arg("length"), py::arg("seed"));

  m.def("coefficient", [](int k, double p) { return hmp::coefficient(k, p); });
  m.def("coefficient_display",
        [](int k) { return hmp::coefficient_exact(k).to_string(); });
  m.def(
      "entropy_series",
      [](double p, double eps, int order) {
        const auto eval = hmp::entropy_series(p, eps, order);
        py::dict out;
        out["value"] = eval.value;
        out["terms"] = eval.terms;
        out["divergence"] = eval.divergence_flag;
        return out;
      },
      py::arg("p"), py::arg("eps"), py::arg("order") = 11);
  m.def("iid_entropy", &hmp::iid_entropy);
  m.def("iid_coefficient", &hmp::iid_coefficient);
  m.def("iid_radius_exact", &hmp::iid_radius_exact);
  m.def(
      "radius_estimate",
      [](const std::vector<double>& coeffs, int k_min, int k_max) {
        const auto fit = hmp::radius_estimate(coeffs, k_min, k_max);
        py::dict out;
        out["a"] = fit.a;
        out["b"] = fit.b;
        out["c"] = fit.c;
        out["residual"] = fit.residual;
        out["radius"] = fit.radius();
        return out;
      },
      py::arg("coefficients"), py::arg("k_min"), py::arg("k_max"));

  m.def(
      "conditional_series_display",
      [](int n, int k) {
        std::vector<std::string> out;
        const auto series = hmp::conditional_series(n, k);
        for (const auto& coeff : series.coeffs()) out.push_back(coeff.to_string());
        return out;
      },
      py::arg("n"), py::arg("k"));
  m.def(
      "conditional_series_eval",
      [](int n, int k, double p, double eps) {
        return hmp::conditional_series(n, k).eval(p, eps);
      },
      py::arg("n"), py::arg("k"), py::arg("p"), py::arg("eps"));
  m.def(
      "verify_conjecture_json",
      [](int k_max, int n_max) {
        return hmp::conjecture_report_to_json(hmp::verify_conjecture(k_max, n_max));
      },
      py::arg("k_max"), py::arg("n_max"));
  m.def("free_element", [](int k) { return hmp::to_string(hmp::free_element(k)); });
}
