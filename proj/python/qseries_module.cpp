#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "qseries/connection.hpp"
#include "qseries/errors.hpp"
#include "qseries/qcore.hpp"
#include "qseries/resummation.hpp"
#include "qseries/verify.hpp"

namespace py = pybind11;
using namespace qseries;

namespace {

QContext make_ctx(Complex q, int precision) { return QContext(q, precision); }

py::dict summary_dict(const SweepReport& r) {
  py::dict d;
  d["identity"] = r.identity;
  d["pass"] = r.summary.pass;
  d["skip"] = r.summary.skip;
  d["fail"] = r.summary.fail;
  d["max_rel_residual"] = r.summary.max_rel_residual;
  return d;
}

}  // namespace

PYBIND11_MODULE(_qseries, m) {
  m.doc() = "q-series evaluation, q-Borel/Laplace resummation and identity checks";

  static py::exception<Error> error(m, "QSeriesError", PyExc_ValueError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      const std::string msg = std::string(to_string(e.kind())) + ": " + e.what();
      py::set_error(error, msg.c_str());
    }
  });

  py::class_<TruncatedValue>(m, "TruncatedValue")
      .def_readonly("value", &TruncatedValue::value)
      .def_readonly("terms_used_pos", &TruncatedValue::terms_used_pos)
      .def_readonly("terms_used_neg", &TruncatedValue::terms_used_neg)
      .def_readonly("last_term_mag", &TruncatedValue::last_term_mag)
      .def_readonly("converged", &TruncatedValue::converged)
      .def_readonly("note", &TruncatedValue::note)
      .def("__repr__", [](const TruncatedValue& v) {
        return "TruncatedValue(" + py::repr(py::cast(v.value)).cast<std::string>() +
               ", converged=" + (v.converged ? "True" : "False") + ")";
      });

  auto q_arg = py::arg("q");
  auto prec = py::arg("precision") = 53;

  m.def("theta", [](Complex x, Complex q, int p) { return theta(x, make_ctx(q, p)); }, py::arg("x"),
        q_arg, prec);
  m.def("qpochhammer", [](Complex a, Complex q, long n, int p) { return qpochhammer(a, make_ctx(q, p), n); },
        py::arg("a"), q_arg, py::arg("n"), prec);
  m.def("qpochhammer_inf", [](Complex a, Complex q, int p) { return qpochhammer_inf(a, make_ctx(q, p)); },
        py::arg("a"), q_arg, prec);
  m.def("phi",
        [](std::vector<Complex> a, std::vector<Complex> b, Complex q, Complex x, int p) {
          return phi_series(SeriesSpec::phi(std::move(a), std::move(b)), make_ctx(q, p), x);
        },
        py::arg("a"), py::arg("b"), q_arg, py::arg("x"), prec);
  m.def("psi",
        [](std::vector<Complex> a, std::vector<Complex> b, Complex q, Complex x, int p) {
          return psi_series(SeriesSpec::psi(std::move(a), std::move(b)), make_ctx(q, p), x);
        },
        py::arg("a"), py::arg("b"), q_arg, py::arg("x"), prec);
  m.def("ramanujan",
        [](Complex a, Complex b, Complex q, Complex z, int p) { return ramanujan_product(a, b, make_ctx(q, p), z); },
        py::arg("a"), py::arg("b"), q_arg, py::arg("z"), prec);
  m.def("watson",
        [](Complex a, Complex b, Complex c, Complex q, Complex x, int p) {
          return watson_rhs(a, b, c, make_ctx(q, p), x);
        },
        py::arg("a"), py::arg("b"), py::arg("c"), q_arg, py::arg("x"), prec);
  m.def("slater",
        [](std::vector<Complex> a, std::vector<Complex> b, Complex q, Complex x, int p) {
          const QContext ctx = make_ctx(q, p);
          return slater_rhs(SlaterParams(std::move(a), std::move(b), ctx), ctx, x);
        },
        py::arg("a"), py::arg("b"), q_arg, py::arg("x"), prec);
  m.def("corollary",
        [](Complex a1, Complex a2, Complex b1, Complex q, Complex x, int p) {
          const QContext ctx = make_ctx(q, p);
          return corollary_2psi2_rhs(Psi1Params(a1, a2, b1, ctx), ctx, x);
        },
        py::arg("a1"), py::arg("a2"), py::arg("b1"), q_arg, py::arg("x"), prec);
  m.def("v_solution",
        [](int which, Complex a1, Complex a2, Complex b1, Complex q, Complex x, int p) {
          if (which != 1 && which != 2) throw Error(ErrorKind::kInvalidParameter, "which must be 1 or 2");
          const QContext ctx = make_ctx(q, p);
          return v_solution(Psi1Params(a1, a2, b1, ctx), ctx, static_cast<SolutionIndex>(which), x);
        },
        py::arg("which"), py::arg("a1"), py::arg("a2"), py::arg("b1"), q_arg, py::arg("x"), prec);
  m.def("borel_image_2psi2",
        [](Complex a1, Complex a2, Complex b1, Complex q, Complex xi, int p) {
          const QContext ctx = make_ctx(q, p);
          return borel_image_2psi2(Psi1Params(a1, a2, b1, ctx), ctx, xi);
        },
        py::arg("a1"), py::arg("a2"), py::arg("b1"), q_arg, py::arg("xi"), prec);
  m.def("resum_2psi1",
        [](Complex a1, Complex a2, Complex b1, Complex q, Complex lam, Complex x, int p) {
          const QContext ctx = make_ctx(q, p);
          return resum_2psi1(Psi1Params(a1, a2, b1, ctx), SpiralSpec(lam, ctx), x);
        },
        py::arg("a1"), py::arg("a2"), py::arg("b1"), q_arg, py::arg("lam"), py::arg("x"), prec);
  m.def("main_theorem_rhs",
        [](Complex a1, Complex a2, Complex b1, Complex q, Complex lam, Complex x, int p) {
          const QContext ctx = make_ctx(q, p);
          return main_theorem_rhs(Psi1Params(a1, a2, b1, ctx), SpiralSpec(lam, ctx), x);
        },
        py::arg("a1"), py::arg("a2"), py::arg("b1"), q_arg, py::arg("lam"), py::arg("x"), prec);
  m.def("connection_coefficient",
        [](int which, Complex a1, Complex a2, Complex b1, Complex q, Complex lam, Complex x, int p) {
          if (which != 1 && which != 2) throw Error(ErrorKind::kInvalidParameter, "which must be 1 or 2");
          const QContext ctx = make_ctx(q, p);
          const ConnectionCoefficientSpec spec{Psi1Params(a1, a2, b1, ctx), SpiralSpec(lam, ctx),
                                               static_cast<SolutionIndex>(which),
                                               CoefficientForm::kComplete};
          return connection_coefficient(spec, x);
        },
        py::arg("which"), py::arg("a1"), py::arg("a2"), py::arg("b1"), q_arg, py::arg("lam"),
        py::arg("x"), prec);

  m.def("identities", [] {
    std::vector<std::string> names;
    for (Identity id : all_identities()) names.emplace_back(to_string(id));
    return names;
  });
  m.def("run_default_sweep",
        [](const std::string& identity, std::uint64_t seed) {
          return summary_dict(run_sweep(default_config(identity_from_string(identity), seed)));
        },
        py::arg("identity"), py::arg("seed") = 1);
  m.def("default_report_json",
        [](const std::string& identity, std::uint64_t seed) {
          return format_report(run_sweep(default_config(identity_from_string(identity), seed)),
                               ReportFormat::kJson);
        },
        py::arg("identity"), py::arg("seed") = 1);
}
