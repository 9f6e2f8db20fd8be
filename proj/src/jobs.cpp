#include "circlesum/jobs.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <numbers>
#include <random>
#include <sstream>

#include "circlesum/approx.hpp"
#include "circlesum/cpolynomial.hpp"
#include "circlesum/oracle.hpp"
#include "circlesum/representation.hpp"
#include "circlesum/series.hpp"
#include "circlesum/signal_io.hpp"

namespace circlesum::jobs {

namespace {

constexpr double two_pi = 2.0 * std::numbers::pi;
constexpr int tail_span = 20;

// ---- schema helpers ----------------------------------------------------------

const json& field(const json& doc, const char* key) {
    if (!doc.is_object()) throw UsageError("job document must be a JSON object");
    const auto it = doc.find(key);
    if (it == doc.end()) throw UsageError(std::string("missing field '") + key + "'");
    return *it;
}

int int_field(const json& doc, const char* key) {
    const json& v = field(doc, key);
    if (!v.is_number_integer()) throw UsageError(std::string("field '") + key + "' must be an integer");
    return v.get<int>();
}

int int_or(const json& doc, const char* key, int fallback) {
    return doc.contains(key) ? int_field(doc, key) : fallback;
}

double number_or(const json& doc, const char* key, double fallback) {
    if (!doc.contains(key)) return fallback;
    const json& v = doc.at(key);
    if (!v.is_number()) throw UsageError(std::string("field '") + key + "' must be a number");
    return v.get<double>();
}

Complex to_complex(const json& v) {
    if (v.is_number()) return {v.get<double>(), 0.0};
    if (v.is_array() && v.size() == 2 && v[0].is_number() && v[1].is_number())
        return {v[0].get<double>(), v[1].get<double>()};
    throw UsageError("complex values are [re, im] pairs, got " + v.dump());
}

json from_complex(Complex z) { return json::array({z.real(), z.imag()}); }

std::vector<Complex> complex_array(const json& doc, const char* key) {
    const json& v = field(doc, key);
    if (!v.is_array() || v.empty()) throw UsageError(std::string("field '") + key + "' must be a non-empty array");
    std::vector<Complex> out;
    out.reserve(v.size());
    for (const auto& x : v) out.push_back(to_complex(x));
    return out;
}

std::vector<double> real_array(const json& doc, const char* key) {
    const json& v = field(doc, key);
    if (!v.is_array()) throw UsageError(std::string("field '") + key + "' must be an array");
    std::vector<double> out;
    for (const auto& x : v) {
        if (!x.is_number()) throw UsageError(std::string("field '") + key + "' must hold numbers");
        out.push_back(x.get<double>());
    }
    return out;
}

json complex_list(std::span<const Complex> zs) {
    json out = json::array();
    for (const auto& z : zs) out.push_back(from_complex(z));
    return out;
}

void check_order(int n) {
    if (n < 1) throw UsageError("order n must be >= 1, got " + std::to_string(n));
    if (n > max_n()) {
        throw UsageError("order n = " + std::to_string(n) + " exceeds CIRCLESUM_MAX_N = " + std::to_string(max_n()));
    }
}

std::vector<Complex> lambdas_of(std::span<const double> phases) {
    std::vector<Complex> out;
    out.reserve(phases.size());
    for (double t : phases) out.push_back(std::polar(1.0, -t));
    return out;
}

// Power sums S_1..S_m through the oracle path (elementary symmetric functions
// and Newton identities), never through the library's power_sum.
std::vector<Complex> oracle_power_sums(std::span<const Complex> points, int m) {
    const auto e = oracle::elementary_symmetric(points);
    return oracle::power_sums_from_elementary(e, m);
}

json signal_json(const TrigPolynomial& s) {
    return {{"n", s.degree()}, {"a", s.cos_coeffs()}, {"b", s.sin_coeffs()}};
}

TrigPolynomial signal_from_json(const json& doc) {
    const json& sig = field(doc, "signal");
    const int n = int_field(sig, "n");
    auto a = real_array(sig, "a");
    auto b = real_array(sig, "b");
    if (static_cast<int>(a.size()) != n || static_cast<int>(b.size()) != n)
        throw UsageError("signal coefficient arrays must have length n");
    return TrigPolynomial(std::move(a), std::move(b));
}

std::vector<int> harmonic_indices(const std::string& nu, int n) {
    if (nu == "all") {
        if (n < 2) throw PreconditionError("harmonic extraction requires n >= 2; got n = " + std::to_string(n));
        std::vector<int> all(n);
        for (int m = 1; m <= n; ++m) all[m - 1] = m;
        return all;
    }
    std::size_t used = 0;
    int value = 0;
    try {
        value = std::stoi(nu, &used);
    } catch (const std::exception&) {
        throw UsageError("--nu must be an integer or 'all', got '" + nu + "'");
    }
    if (used != nu.size()) throw UsageError("--nu must be an integer or 'all', got '" + nu + "'");
    if (n >= 2 && (value < 1 || value > n)) {
        throw UsageError("harmonic index must satisfy 1 <= nu <= n = " + std::to_string(n) + ", got " + nu);
    }
    return {value};
}

// ---- verify ------------------------------------------------------------------

json verify_represent(const json& doc) {
    const int n = int_field(doc, "n");
    check_order(n);
    const auto a = complex_array(doc, "a");
    const auto lambdas = complex_array(doc, "lambdas");
    if (static_cast<int>(lambdas.size()) != 2 * n + 1) {
        throw UsageError("expected " + std::to_string(2 * n + 1) + " lambdas, got " + std::to_string(lambdas.size()));
    }
    if (static_cast<int>(a.size()) < n) throw UsageError("fewer targets than n");

    const json& tails = doc.contains("tail_bounds") ? doc.at("tail_bounds") : json::array();
    int top = n;
    for (const auto& t : tails) top = std::max(top, int_field(t, "j") + 1);
    const auto s = oracle_power_sums(lambdas, top);

    double a_max = 0.0;
    for (int j = 0; j < n; ++j) a_max = std::max(a_max, std::abs(a[j]));
    const double tol = head_tolerance(a_max, n);

    json violations = json::array();
    double worst = 0.0;
    for (int j = 0; j < n; ++j) {
        const double d = std::abs(s[j] - a[j]);
        worst = std::max(worst, d);
        if (d > tol) violations.push_back({{"j", j}, {"power", j + 1}, {"discrepancy", d}, {"tolerance", tol}});
    }

    json tail_violations = json::array();
    for (const auto& t : tails) {
        const int j = int_field(t, "j");
        const Complex target = j < static_cast<int>(a.size()) ? a[j] : Complex{0.0, 0.0};
        const double value = std::abs(s[j] - target);
        const bool certified = t.value("certified", false);
        const double bound = number_or(t, "bound", 0.0);
        if (certified && value > bound)
            tail_violations.push_back({{"j", j}, {"value", value}, {"bound", bound}});
    }

    json unit = json::array();
    for (std::size_t k = 0; k < lambdas.size(); ++k)
        if (std::abs(std::abs(lambdas[k]) - 1.0) > 1e-12) unit.push_back(k);

    const bool ok = violations.empty() && tail_violations.empty() && unit.empty();
    json report = {{"command", "verify"},   {"verified", "represent"},       {"ok", ok},
                   {"max_discrepancy", worst}, {"tolerance", tol},          {"violations", violations},
                   {"tail_violations", tail_violations}, {"off_circle", unit}};
    if (!violations.empty()) report["first_violation"] = violations.front()["j"];
    return report;
}

json verify_harmonics(const json& doc) {
    const TrigPolynomial signal = signal_from_json(doc);
    const int n = signal.degree();
    check_order(n);
    const json& entries = field(doc, "harmonics");
    if (!entries.is_array() || entries.empty()) throw UsageError("'harmonics' must be a non-empty array");

    const double ex_tol = extraction_tolerance(n, signal.coeff_l1());
    bool ok = true;
    double worst = 0.0;
    json checked = json::array();
    for (const auto& e : entries) {
        const int nu = int_field(e, "nu");
        if (nu < 1 || nu > n) throw UsageError("harmonic index out of range in document");
        const auto phases = real_array(e, "phases");
        if (static_cast<int>(phases.size()) != 2 * n + 1) throw UsageError("phase count must be 2n+1");
        const auto s = oracle_power_sums(lambdas_of(phases), n);

        // target: S_nu = 1, S_j = 0 otherwise
        const double tol = head_tolerance(1.0, n);
        json violations = json::array();
        double disc = 0.0;
        for (int j = 1; j <= n; ++j) {
            const Complex target = j == nu ? Complex{1.0, 0.0} : Complex{0.0, 0.0};
            const double d = std::abs(s[j - 1] - target);
            disc = std::max(disc, d);
            if (d > tol) violations.push_back({{"j", j}, {"discrepancy", d}});
        }
        const double err_a = std::abs(number_or(e, "a", 0.0) - signal.a(nu));
        const double err_b = std::abs(number_or(e, "b", 0.0) - signal.b(nu));
        const bool coeff_ok = err_a <= ex_tol && err_b <= ex_tol;
        const bool entry_ok = violations.empty() && coeff_ok;
        ok = ok && entry_ok;
        worst = std::max(worst, disc);
        json item = {{"nu", nu},          {"ok", entry_ok},      {"max_discrepancy", disc}, {"tolerance", tol},
                     {"violations", violations}, {"coefficient_error", std::max(err_a, err_b)}};
        if (!violations.empty()) item["first_violation"] = violations.front()["j"];
        checked.push_back(item);
    }
    return {{"command", "verify"}, {"verified", "harmonics"}, {"ok", ok}, {"max_discrepancy", worst},
            {"extraction_tolerance", ex_tol}, {"harmonics", checked}};
}

json verify_fourier(const json& doc) {
    const TrigPolynomial signal = signal_from_json(doc);
    const double tol = extraction_tolerance(signal.degree(), signal.coeff_l1());
    json bad = json::array();
    double worst = 0.0;
    for (const auto& c : field(doc, "coefficients")) {
        const int nu = int_field(c, "nu");
        if (nu < 1 || nu > signal.degree()) throw UsageError("harmonic index out of range in document");
        const double err = std::max(std::abs(number_or(c, "a", 0.0) - signal.a(nu)),
                                    std::abs(number_or(c, "b", 0.0) - signal.b(nu)));
        worst = std::max(worst, err);
        if (err > tol) bad.push_back(nu);
    }
    return {{"command", "verify"}, {"verified", "fourier"}, {"ok", bad.empty()},
            {"max_discrepancy", worst}, {"tolerance", tol}, {"violations", bad}};
}

// ---- approx ------------------------------------------------------------------

std::vector<double> radii_or(const json& job, std::vector<double> fallback) {
    if (!job.contains("radii")) return fallback;
    auto r = real_array(job, "radii");
    if (r.empty()) throw UsageError("'radii' must not be empty");
    return r;
}

json approx_spf(const json& job) {
    const int n = int_field(job, "n");
    check_order(n);
    const CoeffSeq f(complex_array(job, "f"));
    const int angles = int_or(job, "angles", 720);
    if (angles < 1) throw UsageError("'angles' must be positive");
    const double eps = number_or(job, "eps", 0.25);

    const auto roots = roots_on_circle(build_p(exp_antiderivative_taylor(f, n)));
    const bool bounded = has_bounded_coefficients(f);

    json sweep = json::array();
    int violations = 0;
    for (double radius : radii_or(job, {0.2, 0.5, 0.8})) {
        if (!(radius >= 0.0 && radius < 1.0)) throw UsageError("radii must lie in [0, 1)");
        const double err = spf_sup_error(f, roots, radius, angles);
        json row = {{"radius", radius}, {"sup_error", err}};
        if (bounded) {
            const double b = spf_bound_bounded(n, radius);
            row["bound"] = b;
            row["certified"] = true;
            row["satisfied"] = err <= b;
            violations += err > b;
        } else if (radius + eps < 1.0 && radius > 0.0) {
            const double b = spf_bound_disk(n, radius, eps);
            row["bound"] = b;
            row["certified"] = false;
            row["satisfied"] = err <= b;
        }
        sweep.push_back(row);
    }
    return {{"command", "approx"},
            {"mode", "spf"},
            {"n", n},
            {"N", 2 * n + 1},
            {"phases", roots.phases},
            {"lambdas", complex_list(lambdas_of(roots.phases))},
            {"interpolation_order", spf_interpolation_order(f, n)},
            {"bounded_coefficients", bounded},
            {"certified_violations", violations},
            {"sweep", sweep}};
}

json approx_exp(const json& job) {
    const int n = int_field(job, "n");
    check_order(n);
    auto coeffs = complex_array(job, "p");
    if (coeffs.size() < static_cast<std::size_t>(n)) coeffs.resize(n, Complex{0.0, 0.0});
    const CoeffSeq p(std::move(coeffs));
    const double r = number_or(job, "r", 0.9);
    const double radius = number_or(job, "radius", 3.0);
    const int grid = int_or(job, "grid", 20);
    if (grid < 1) throw UsageError("'grid' must be positive");
    if (!(radius > 0.0)) throw UsageError("'radius' must be positive");

    const Representation rep = represent(p, n);
    const bool bounded = has_bounded_coefficients(p);
    json sweep = json::array();
    int violations = 0;
    for (int i = 1; i <= grid; ++i) {
        const double rho = radius * i / grid;
        double sup = 0.0;
        for (int k = 0; k < grid; ++k) {
            const Complex z = std::polar(rho, two_pi * k / grid);
            sup = std::max(sup, std::abs(exp_sum_eval(rep.lambdas, z) - exp_generating_eval(p, z)));
        }
        const double b = exp_sum_bound(n, rho, r);
        violations += bounded && sup > b;
        sweep.push_back({{"radius", rho}, {"sup_error", sup}, {"bound", b}, {"certified", bounded},
                         {"satisfied", sup <= b}});
    }
    return {{"command", "approx"},
            {"mode", "exp"},
            {"n", n},
            {"N", rep.N},
            {"lambdas", complex_list(rep.lambdas)},
            {"residual_head", rep.residual_head},
            {"bounded_coefficients", bounded},
            {"certified_violations", violations},
            {"sweep", sweep}};
}

HSeries h_from_json(const json& job) {
    const json& h = field(job, "h");
    const std::string kind = field(h, "kind").get<std::string>();
    if (kind == "pole") return HSeries::simple_pole();
    if (kind == "exp") return HSeries::exponential();
    if (kind == "coeffs") return HSeries::from_coeffs(CoeffSeq(complex_array(h, "coeffs")), number_or(h, "M", 1.0));
    throw UsageError("h.kind must be pole, exp or coeffs, got '" + kind + "'");
}

json approx_hsum(const json& job) {
    const int n = int_field(job, "n");
    check_order(n);
    const CoeffSeq f(complex_array(job, "f"));
    const HSeries h = h_from_json(job);
    const bool first_kind = job.value("first_kind", false);
    const int angles = int_or(job, "angles", 360);
    if (angles < 1) throw UsageError("'angles' must be positive");

    const Representation rep = first_kind ? h1_sum_build(f, h, n) : h_sum_build(f, h, n);
    json sweep = json::array();
    for (double radius : radii_or(job, {0.2, 0.4, 0.6})) {
        if (!(radius >= 0.0 && radius < 1.0)) throw UsageError("radii must lie in [0, 1)");
        double sup = 0.0, trunc = 0.0;
        for (int k = 0; k < angles; ++k) {
            const Complex z = std::polar(radius, two_pi * k / angles);
            const auto v = first_kind ? h1_sum_eval(h, rep.lambdas, z) : h_sum_eval(h, rep.lambdas, z);
            sup = std::max(sup, std::abs(v.value - eval_poly(f, z)));
            trunc = std::max(trunc, v.truncation_error);
        }
        const double b = first_kind ? h1_sum_bound(n, radius, h.bound()) : h_sum_bound(n, radius, h.bound());
        sweep.push_back({{"radius", radius}, {"sup_error", sup}, {"bound", b}, {"truncation_error", trunc},
                         {"satisfied", sup <= b}});
    }
    return {{"command", "approx"},
            {"mode", "hsum"},
            {"h", h.name()},
            {"first_kind", first_kind},
            {"n", n},
            {"N", rep.N},
            {"lambdas", complex_list(rep.lambdas)},
            {"residual_head", rep.residual_head},
            {"sweep", sweep}};
}

}  // namespace

int max_n() {
    const char* env = std::getenv("CIRCLESUM_MAX_N");
    if (env == nullptr || *env == '\0') return 200;
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (*end != '\0' || v < 1 || v > 100000) throw UsageError(std::string("bad CIRCLESUM_MAX_N '") + env + "'");
    return static_cast<int>(v);
}

json cmd_represent(const json& job) {
    const int n = int_field(job, "n");
    check_order(n);
    const CoeffSeq a(complex_array(job, "a"));
    if (a.size() < static_cast<std::size_t>(n))
        throw UsageError("need at least n = " + std::to_string(n) + " targets, got " + std::to_string(a.size()));

    const Representation rep = represent(a, n);
    const bool bounded = has_bounded_coefficients(a);
    json tails = json::array();
    for (int j = n; j <= n + tail_span; ++j) {
        const double value = std::abs(tail_residual(rep, j));
        const auto best = best_tail_bound(n, j, bounded ? TailBoundKind::bounded : TailBoundKind::general);
        json row = {{"j", j}, {"value", value}, {"bound", best.value}, {"r_opt", best.r}};
        if (!bounded) row["eps_opt"] = best.eps;
        row["kind"] = bounded ? "bounded" : "general";
        row["satisfied"] = value <= best.value;
        row["certified"] = bounded;
        tails.push_back(row);
    }
    return {{"command", "represent"},
            {"n", n},
            {"N", rep.N},
            {"a", complex_list(a.span())},
            {"n0", rep.n0_used},
            {"lambdas", complex_list(rep.lambdas)},
            {"phases", rep.roots.phases},
            {"residual_head", rep.residual_head},
            {"head_tolerance", head_tolerance(a.max_abs(), n)},
            {"newton_discrepancy", rep.newton_discrepancy},
            {"tail_bounds", tails}};
}

json cmd_harmonics(const TrigPolynomial& signal, const std::string& nu, int grid) {
    const int n = signal.degree();
    check_order(n);
    if (grid < 1) throw UsageError("--grid must be positive");
    const auto indices = harmonic_indices(nu, n);
    const double tol = extraction_tolerance(n, signal.coeff_l1());

    json entries = json::array();
    for (int v : indices) {
        const ExtractionOperator op = extraction_phases(n, v);
        const auto [av, bv] = fourier_coeffs(signal, v);
        std::vector<double> ts(grid), tv(grid), tau(grid), theta(grid);
        double worst = 0.0;
        for (int i = 0; i < grid; ++i) {
            ts[i] = two_pi * i / grid;
            tv[i] = signal(ts[i]);
            tau[i] = signal.harmonic(v, ts[i]);
            theta[i] = extract_harmonic(signal, op, ts[i]);
            worst = std::max(worst, std::abs(theta[i] - tau[i]));
        }
        entries.push_back({{"nu", v},
                           {"N", op.N()},
                           {"phases", op.phases},
                           {"certificate_residual", op.certificate_residual},
                           {"certificate_tolerance", op.certificate_tolerance},
                           {"a", av},
                           {"b", bv},
                           {"max_error", worst},
                           {"samples", {{"t", ts}, {"T", tv}, {"tau", tau}, {"theta", theta}}}});
    }
    return {{"command", "harmonics"}, {"signal", signal_json(signal)}, {"grid", grid}, {"tolerance", tol},
            {"harmonics", entries}};
}

std::string harmonics_csv(const json& doc) {
    const json& entries = field(doc, "harmonics");
    if (entries.size() != 1) throw UsageError("--csv needs a single harmonic index, not 'all'");
    const json& s = entries[0].at("samples");
    std::ostringstream out;
    out.precision(17);
    out << "t,T,tau_nu,Theta\n";
    for (std::size_t i = 0; i < s.at("t").size(); ++i) {
        out << s["t"][i].get<double>() << ',' << s["T"][i].get<double>() << ',' << s["tau"][i].get<double>() << ','
            << s["theta"][i].get<double>() << '\n';
    }
    return out.str();
}

json cmd_fourier(const TrigPolynomial& signal, const std::string& nu) {
    const int n = signal.degree();
    check_order(n);
    json coeffs = json::array();
    for (int v : harmonic_indices(nu, n)) {
        const auto [av, bv] = fourier_coeffs(signal, v);
        coeffs.push_back({{"nu", v}, {"a", av}, {"b", bv}});
    }
    return {{"command", "fourier"},
            {"signal", signal_json(signal)},
            {"tolerance", extraction_tolerance(n, signal.coeff_l1())},
            {"coefficients", coeffs}};
}

json cmd_approx(const std::string& mode, const json& job) {
    if (mode == "spf") return approx_spf(job);
    if (mode == "exp") return approx_exp(job);
    if (mode == "hsum") return approx_hsum(job);
    throw UsageError("--mode must be spf, exp or hsum, got '" + mode + "'");
}

json cmd_verify(const json& doc) {
    const std::string command = field(doc, "command").get<std::string>();
    if (command == "represent") return verify_represent(doc);
    if (command == "harmonics") return verify_harmonics(doc);
    if (command == "fourier") return verify_fourier(doc);
    throw UsageError("cannot verify a '" + command + "' document");
}

std::string cmd_generate(const std::string& kind, int n, std::uint64_t seed) {
    check_order(n);
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    if (kind == "targets") {
        json a = json::array();
        for (int j = 0; j < n; ++j) {
            const double mod = unit(rng) / ((j + 2.0) * (j + 2.0));
            a.push_back(from_complex(std::polar(mod, two_pi * unit(rng))));
        }
        return json{{"a", a}, {"n", n}}.dump(2) + "\n";
    }
    if (kind == "signal") {
        std::vector<double> a(n), b(n);
        for (int m = 0; m < n; ++m) {
            a[m] = 2.0 * unit(rng) - 1.0;
            b[m] = 2.0 * unit(rng) - 1.0;
        }
        return format_signal(TrigPolynomial(std::move(a), std::move(b)));
    }
    throw UsageError("--kind must be targets or signal, got '" + kind + "'");
}

int exit_code_for(const std::exception_ptr& error) {
    try {
        std::rethrow_exception(error);
    } catch (const InvalidArgument&) {
        return exit_code::usage;
    } catch (const json::exception&) {
        return exit_code::usage;
    } catch (const PreconditionError&) {
        return exit_code::precondition;
    } catch (const NotFoundError&) {
        return exit_code::precondition;
    } catch (const std::exception&) {
        return exit_code::numerical;
    }
}

json error_document(const std::exception_ptr& error) {
    json doc;
    try {
        std::rethrow_exception(error);
    } catch (const RepresentTooSmall& e) {
        doc = {{"error", "precondition"}, {"message", e.what()}, {"n0", e.n0()}};
    } catch (const RootCountError& e) {
        doc = {{"error", "numerical"}, {"message", e.what()}, {"expected", e.expected()}, {"found", e.found()}};
    } catch (const BorderlineError& e) {
        doc = {{"error", "numerical"}, {"message", e.what()}, {"min_modulus", e.min_modulus()}};
    } catch (const NotFoundError& e) {
        doc = {{"error", "precondition"}, {"message", e.what()}, {"n_max", e.n_max()}};
    } catch (const std::exception& e) {
        const int code = exit_code_for(error);
        const char* kind = code == exit_code::usage ? "usage" : code == exit_code::precondition ? "precondition"
                                                                                               : "numerical";
        doc = {{"error", kind}, {"message", e.what()}};
    }
    doc["exit_code"] = exit_code_for(error);
    return doc;
}

Outcome run(const std::function<json()>& job) {
    try {
        json doc = job();
        const bool failed_verify = doc.value("command", "") == "verify" && !doc.value("ok", false);
        return {failed_verify ? exit_code::verify_failed : exit_code::ok, std::move(doc)};
    } catch (...) {
        const auto error = std::current_exception();
        return {exit_code_for(error), error_document(error)};
    }
}

}  // namespace circlesum::jobs
