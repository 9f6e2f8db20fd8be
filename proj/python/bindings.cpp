#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "circlesum/approx.hpp"
#include "circlesum/cpolynomial.hpp"
#include "circlesum/harmonics.hpp"
#include "circlesum/jobs.hpp"
#include "circlesum/representation.hpp"
#include "circlesum/series.hpp"

namespace py = pybind11;
using namespace circlesum;

namespace {

std::vector<Complex> to_vec(const CoeffSeq& c) { return c.vec(); }

TrigPolynomial signal(std::vector<double> a, std::vector<double> b) { return TrigPolynomial(std::move(a), std::move(b)); }

py::dict operator_dict(const ExtractionOperator& op) {
    py::dict d;
    d["n"] = op.n;
    d["nu"] = op.nu;
    d["N"] = op.N();
    d["phases"] = op.phases;
    d["power_sums"] = op.power_sums;
    d["certificate_residual"] = op.certificate_residual;
    d["certificate_tolerance"] = op.certificate_tolerance;
    return d;
}

py::object run_job(const std::function<jobs::json()>& job) {
    const auto outcome = jobs::run(job);
    return py::make_tuple(outcome.exit_code, outcome.document.dump());
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Power sums of unit-circle points: representations, approximation and harmonic extraction";

    auto base = py::register_exception<Error>(m, "CirclesumError");
    py::register_exception<InvalidArgument>(m, "InvalidArgument", base.ptr());
    py::register_exception<BorderlineError>(m, "BorderlineError", base.ptr());
    py::register_exception<NotFoundError>(m, "NotFoundError", base.ptr());
    auto precondition = py::register_exception<PreconditionError>(m, "PreconditionError", base.ptr());
    py::register_exception<RepresentTooSmall>(m, "RepresentTooSmall", precondition.ptr());
    auto numerical = py::register_exception<NumericalError>(m, "NumericalError", base.ptr());
    py::register_exception<RootCountError>(m, "RootCountError", numerical.ptr());
    py::register_exception<PoleProximityError>(m, "PoleProximityError", base.ptr());

    m.def("exp_antiderivative_taylor",
          [](std::vector<Complex> f, int n) { return to_vec(exp_antiderivative_taylor(CoeffSeq(std::move(f)), n).g); },
          py::arg("f"), py::arg("n"), "Taylor coefficients g_0..g_n of exp(integral f).");

    m.def("build_p",
          [](std::vector<Complex> g) {
              const int n = static_cast<int>(g.size()) - 1;
              const auto p = build_p(TaylorPolynomial{CoeffSeq(std::move(g)), n});
              return std::vector<Complex>(p.coeffs().begin(), p.coeffs().end());
          },
          py::arg("g"), "Coefficients of s(z) + z^N conj(s)(1/z) for s with coefficients g.");

    m.def("disk_zero_free",
          [](std::vector<Complex> g) {
              const int n = static_cast<int>(g.size()) - 1;
              return disk_zero_free(TaylorPolynomial{CoeffSeq(std::move(g)), n});
          },
          py::arg("g"));

    m.def("n0", [](std::vector<Complex> f, int n_max) { return n0(CoeffSeq(std::move(f)), n_max); }, py::arg("f"),
          py::arg("n_max") = 200);

    m.def("roots_on_circle",
          [](std::vector<Complex> coeffs) {
              const int n = (static_cast<int>(coeffs.size()) - 2) / 2;
              const auto r = roots_on_circle(CPolynomial(std::move(coeffs), n));
              return py::make_tuple(r.phases, r.residuals);
          },
          py::arg("coeffs"), "Phases and residuals of the roots of a degree 2n+1 self-inversive polynomial.");

    py::class_<Representation>(m, "Representation")
        .def_readonly("n", &Representation::n)
        .def_readonly("N", &Representation::N)
        .def_readonly("lambdas", &Representation::lambdas)
        .def_property_readonly("phases", [](const Representation& r) { return r.roots.phases; })
        .def_readonly("residual_head", &Representation::residual_head)
        .def_readonly("newton_discrepancy", &Representation::newton_discrepancy)
        .def_readonly("n0", &Representation::n0_used)
        .def("tail_residual", [](const Representation& r, int j) { return tail_residual(r, j); }, py::arg("j"))
        .def("__repr__", [](const Representation& r) {
            return "<Representation n=" + std::to_string(r.n) + " residual_head=" + std::to_string(r.residual_head) + ">";
        });

    m.def("represent", [](std::vector<Complex> a, int n) { return represent(CoeffSeq(std::move(a)), n); },
          py::arg("a"), py::arg("n"));
    m.def("power_sum", [](std::vector<Complex> l, int nu) { return power_sum(l, nu); }, py::arg("lambdas"),
          py::arg("nu"));
    m.def("tail_bound_general", py::overload_cast<int, int, double, double>(&tail_bound_general), py::arg("n"),
          py::arg("j"), py::arg("r"), py::arg("eps"));
    m.def("tail_bound_bounded", &tail_bound_bounded, py::arg("n"), py::arg("j"), py::arg("r"));
    m.def("best_tail_bound",
          [](int n, int j, bool bounded) {
              const auto b = best_tail_bound(n, j, bounded ? TailBoundKind::bounded : TailBoundKind::general);
              return py::make_tuple(b.value, b.r, b.eps);
          },
          py::arg("n"), py::arg("j"), py::arg("bounded") = true, "(value, r, eps) of the minimised tail bound.");

    m.def("spf_eval",
          [](std::vector<double> phases, Complex z) {
              CirclePhases ph;
              ph.phases = std::move(phases);
              return spf_eval(ph, z);
          },
          py::arg("phases"), py::arg("z"));
    m.def("spf_bound_bounded", &spf_bound_bounded, py::arg("n"), py::arg("abs_z"));
    m.def("spf_interpolation_order",
          [](std::vector<Complex> f, int n) { return spf_interpolation_order(CoeffSeq(std::move(f)), n); },
          py::arg("f"), py::arg("n"));
    m.def("exp_sum_eval", [](std::vector<Complex> l, Complex z) { return exp_sum_eval(l, z); }, py::arg("lambdas"),
          py::arg("z"));
    m.def("exp_sum_bound", &exp_sum_bound, py::arg("n"), py::arg("z"), py::arg("r") = 0.9);

    m.def("extraction_phases", [](int n, int nu) { return operator_dict(extraction_phases(n, nu)); }, py::arg("n"),
          py::arg("nu"));
    m.def("combination_phases",
          [](std::vector<Complex> gamma, int n_max) { return operator_dict(combination_phases(gamma, n_max)); },
          py::arg("gamma"), py::arg("n_max") = 200);
    m.def("extract_harmonic",
          [](std::vector<double> a, std::vector<double> b, int nu, double t) {
              const auto s = signal(std::move(a), std::move(b));
              return extract_harmonic(s, extraction_phases(s.degree(), nu), t);
          },
          py::arg("a"), py::arg("b"), py::arg("nu"), py::arg("t"), "Theta(t) for the signal with cosine a, sine b.");
    m.def("fourier_coeffs",
          [](std::vector<double> a, std::vector<double> b, int nu) {
              return fourier_coeffs(signal(std::move(a), std::move(b)), nu);
          },
          py::arg("a"), py::arg("b"), py::arg("nu"));

    // JSON pipelines; each returns (exit_code, document_text)
    m.def("run_represent", [](const std::string& job) { return run_job([&] { return jobs::cmd_represent(jobs::json::parse(job)); }); },
          py::arg("job"));
    m.def("run_verify", [](const std::string& doc) { return run_job([&] { return jobs::cmd_verify(jobs::json::parse(doc)); }); },
          py::arg("document"));
    m.def("run_approx",
          [](const std::string& mode, const std::string& job) {
              return run_job([&] { return jobs::cmd_approx(mode, jobs::json::parse(job)); });
          },
          py::arg("mode"), py::arg("job"));
    m.def("run_harmonics",
          [](std::vector<double> a, std::vector<double> b, const std::string& nu, int grid) {
              return run_job([&] { return jobs::cmd_harmonics(signal(a, b), nu, grid); });
          },
          py::arg("a"), py::arg("b"), py::arg("nu"), py::arg("grid") = 720);
}
