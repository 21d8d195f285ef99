#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "rkhs/json_io.hpp"

namespace py = pybind11;

PYBIND11_MODULE(_rkhs, m) {
  m.doc() = "Reproducing kernels and Segal-Bargmann transforms";

  py::register_exception<rkhs::DomainError>(m, "DomainError", PyExc_ValueError);
  py::register_exception<rkhs::ConvergenceError>(m, "ConvergenceError", PyExc_RuntimeError);
  py::register_exception<rkhs::IndexError>(m, "IndexError", PyExc_IndexError);
  py::register_exception<rkhs::UnsupportedError>(m, "UnsupportedError",
                                                 PyExc_NotImplementedError);

  m.def("pochhammer", &rkhs::pochhammer, py::arg("a"), py::arg("n"));
  m.def("gamma_ratio", &rkhs::gamma_ratio, py::arg("a"), py::arg("b"));
  m.def("log_gamma", &rkhs::log_gamma, py::arg("x"));
  m.def("incomplete_beta", &rkhs::incomplete_beta, py::arg("x"), py::arg("a"), py::arg("b"));
  m.def("pfq", &rkhs::pfq, py::arg("numerator"), py::arg("denominator"), py::arg("z"));

  py::class_<rkhs::LaurentSeries>(m, "LaurentSeries")
      .def(py::init<int, std::vector<rkhs::complex>>(), py::arg("min_index"),
           py::arg("coefficients"))
      .def_property_readonly("min_index", &rkhs::LaurentSeries::min_index)
      .def_property_readonly("max_index", &rkhs::LaurentSeries::max_index)
      .def_property_readonly("coefficients",
                             [](const rkhs::LaurentSeries& f) {
                               auto c = f.coefficients();
                               return std::vector<rkhs::complex>(c.begin(), c.end());
                             })
      .def("__getitem__", &rkhs::LaurentSeries::operator[])
      .def("__call__", &rkhs::LaurentSeries::evaluate)
      .def("derivative", &rkhs::LaurentSeries::derivative, py::arg("order") = 1)
      .def("__eq__", [](const rkhs::LaurentSeries& a, const rkhs::LaurentSeries& b) { return a == b; })
      .def("to_json", [](const rkhs::LaurentSeries& f) { return rkhs::to_json(f); })
      .def_static("from_json", [](const std::string& s) { return rkhs::parse_laurent(s); });

  py::class_<rkhs::BergmanDirichletParams>(m, "BergmanParams")
      .def(py::init([](double alpha, double beta0, int p, double R, int m_) {
             rkhs::BergmanDirichletParams params{alpha, beta0, p, R, m_};
             params.validate();
             return params;
           }),
           py::arg("alpha"), py::arg("beta0"), py::arg("p") = 0, py::arg("R") = 1.0,
           py::arg("m") = 0)
      .def_readonly("alpha", &rkhs::BergmanDirichletParams::alpha)
      .def_readonly("beta0", &rkhs::BergmanDirichletParams::beta0)
      .def_readonly("p", &rkhs::BergmanDirichletParams::p)
      .def_readonly("R", &rkhs::BergmanDirichletParams::R)
      .def_readonly("m", &rkhs::BergmanDirichletParams::m);

  py::class_<rkhs::BargmannDirichletParams>(m, "BargmannParams")
      .def(py::init([](double theta, double beta0, int p, int m_) {
             rkhs::BargmannDirichletParams params{theta, beta0, p, m_};
             params.validate();
             return params;
           }),
           py::arg("theta"), py::arg("beta0"), py::arg("p") = 0, py::arg("m") = 0)
      .def_readonly("theta", &rkhs::BargmannDirichletParams::theta)
      .def_readonly("beta0", &rkhs::BargmannDirichletParams::beta0)
      .def_readonly("p", &rkhs::BargmannDirichletParams::p)
      .def_readonly("m", &rkhs::BargmannDirichletParams::m);

  py::class_<rkhs::HardyDirichletParams>(m, "HardyParams")
      .def(py::init([](double beta0, int p, int m_, double s) {
             rkhs::HardyDirichletParams params{beta0, p, m_, s};
             params.validate();
             return params;
           }),
           py::arg("beta0") = 0.0, py::arg("p") = 0, py::arg("m") = 0, py::arg("s") = 2.0)
      .def_readonly("beta0", &rkhs::HardyDirichletParams::beta0)
      .def_readonly("p", &rkhs::HardyDirichletParams::p)
      .def_readonly("m", &rkhs::HardyDirichletParams::m)
      .def_readonly("s", &rkhs::HardyDirichletParams::s);

  m.def("kernel", py::overload_cast<rkhs::complex, const rkhs::SpaceParams&>(&rkhs::kernel),
        py::arg("xi"), py::arg("space"));
  m.def("kernel_series", &rkhs::kernel_series, py::arg("xi"), py::arg("space"));
  m.def("monomial_norm", &rkhs::monomial_norm, py::arg("n"), py::arg("space"));
  m.def("dirichlet_norm", &rkhs::dirichlet_norm, py::arg("f"), py::arg("space"));
  m.def("dirichlet_inner_product", &rkhs::dirichlet_inner_product, py::arg("f"), py::arg("g"),
        py::arg("space"));
  m.def(
      "bergman_kernel_m0_forms",
      [](rkhs::complex xi, const rkhs::BergmanDirichletParams& params) {
        const auto forms = rkhs::bergman_kernel_m0_forms(xi, params);
        return py::make_tuple(forms.hypergeometric, forms.euler_transformed,
                              forms.binomial_sum ? py::cast(*forms.binomial_sum) : py::none());
      },
      py::arg("xi"), py::arg("params"));

  m.def("gamma_coeff", &rkhs::gamma_coeff, py::arg("n"), py::arg("p"), py::arg("alpha"),
        py::arg("beta0"));
  m.def("sigma_coeff", &rkhs::sigma_coeff, py::arg("n"), py::arg("p"), py::arg("theta"),
        py::arg("beta0"));
  m.def("c_pq", &rkhs::c_pq, py::arg("p"), py::arg("q"), py::arg("alpha"), py::arg("beta0"));
  m.def("d_pq", &rkhs::d_pq, py::arg("p"), py::arg("q"), py::arg("theta"), py::arg("beta0"));

  m.def(
      "series_identity",
      [](const std::string& kind, rkhs::complex xi, int p, int q, double alpha, double theta,
         double beta0) {
        const auto k = rkhs::parse_identity_kind(kind);
        if (!k) throw rkhs::DomainError("unknown identity '" + kind + "'");
        const auto sides = rkhs::series_identity(*k, xi, p, q, {alpha, theta, beta0});
        return py::make_tuple(sides.lhs, sides.rhs);
      },
      py::arg("kind"), py::arg("xi"), py::arg("p"), py::arg("q"), py::arg("alpha") = 0.0,
      py::arg("theta") = 1.0, py::arg("beta0") = 0.0);

  // Transforms take the JSON spec form {family, kind, p, q, alpha | theta, beta0}.
  m.def(
      "transform_kernel",
      [](const std::string& spec, rkhs::complex z, rkhs::complex w) {
        return rkhs::transform_kernel(rkhs::parse_transform_spec(spec), z, w);
      },
      py::arg("spec"), py::arg("z"), py::arg("w"));
  m.def(
      "apply_transform",
      [](const std::string& spec, const rkhs::LaurentSeries& f) {
        return rkhs::apply_transform_coeff(rkhs::parse_transform_spec(spec), f);
      },
      py::arg("spec"), py::arg("f"));

  m.def(
      "run_suite",
      [](std::uint64_t seed, std::vector<std::string> groups) {
        rkhs::SuiteConfig config;
        config.seed = seed;
        if (!groups.empty()) config.groups = std::move(groups);
        return rkhs::to_json(rkhs::run_suite(config));
      },
      py::arg("seed") = rkhs::SuiteConfig{}.seed,
      py::arg("groups") = std::vector<std::string>{},
      "Run the verification suite and return the reports as a JSON string.");
}
