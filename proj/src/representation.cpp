#include "circlesum/representation.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "circlesum/cpolynomial.hpp"
#include "circlesum/oracle.hpp"
#include "circlesum/series.hpp"

namespace circlesum {

namespace {

// Largest order searched when reporting the threshold in a RepresentTooSmall error.
constexpr int n0_report_cap = 200;

Complex ipow(Complex base, int exp) {
    Complex result{1.0, 0.0};
    while (exp > 0) {
        if (exp & 1) result *= base;
        base *= base;
        exp >>= 1;
    }
    return result;
}

template <typename F>
std::pair<double, double> golden_min(F&& fn, double lo, double hi, double tol) {
    const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
    double x1 = hi - inv_phi * (hi - lo);
    double x2 = lo + inv_phi * (hi - lo);
    double f1 = fn(x1);
    double f2 = fn(x2);
    while (hi - lo > tol) {
        if (f1 < f2) {
            hi = x2;
            x2 = x1;
            f2 = f1;
            x1 = hi - inv_phi * (hi - lo);
            f1 = fn(x1);
        } else {
            lo = x1;
            x1 = x2;
            f1 = f2;
            x2 = lo + inv_phi * (hi - lo);
            f2 = fn(x2);
        }
    }
    return f1 < f2 ? std::pair{x1, f1} : std::pair{x2, f2};
}

constexpr double golden_tol = 1e-4;
constexpr double eps_fractions[] = {0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9, 0.95};

// min over eps in (0, r) of the general bound, returns {eps, value}.
std::pair<double, double> best_eps(int n, int j, double r) {
    double best_frac = eps_fractions[0];
    double best_val = std::numeric_limits<double>::infinity();
    for (double frac : eps_fractions) {
        const double v = tail_bound_general(n, j, r, frac * r);
        if (v < best_val) {
            best_val = v;
            best_frac = frac;
        }
    }
    const double lo = std::max(best_frac - 0.1, 1e-6) * r;
    const double hi = std::min(best_frac + 0.1, 1.0 - 1e-6) * r;
    auto [e, v] = golden_min([&](double x) { return tail_bound_general(n, j, r, x); }, lo, hi, golden_tol * r);
    if (v < best_val) return {e, v};
    return {best_frac * r, best_val};
}

}  // namespace

double head_tolerance(double a_max, int n) { return 1e-8 * (1.0 + a_max) * (2 * n + 1); }

Representation represent(const CoeffSeq& a, int n) {
    if (n < 1) throw InvalidArgument("represent requires n >= 1, got " + std::to_string(n));
    if (a.size() < static_cast<std::size_t>(n))
        throw InvalidArgument("represent needs at least n = " + std::to_string(n) + " targets, got " +
                              std::to_string(a.size()));

    std::vector<Complex> neg(a.size());
    std::transform(a.begin(), a.end(), neg.begin(), [](Complex x) { return -x; });
    const CoeffSeq f(std::move(neg));

    const TaylorPolynomial s = exp_antiderivative_taylor(f, n);
    if (!disk_zero_free(s)) {
        int threshold = -1;
        try {
            threshold = n0(f, std::max(n0_report_cap, n + 1));
        } catch (const NotFoundError&) {
        }
        throw RepresentTooSmall("order " + std::to_string(n) +
                                    " Taylor polynomial has zeros in the closed disk; threshold n0 = " +
                                    (threshold > 0 ? std::to_string(threshold) : std::string("not found")),
                                threshold);
    }

    Representation rep;
    rep.n = n;
    rep.N = 2 * n + 1;
    rep.a = a;
    rep.n0_used = n0(f, n);

    const CPolynomial p = build_p(s);
    rep.roots = roots_on_circle(p);
    rep.lambdas.reserve(rep.roots.size());
    for (double t : rep.roots.phases) rep.lambdas.push_back(std::polar(1.0, -t));

    for (int j = 0; j < n; ++j)
        rep.residual_head = std::max(rep.residual_head, std::abs(power_sum(rep.lambdas, j + 1) - a[j]));

    const auto newton = oracle::newton_power_sums(p, 2 * n);
    for (int k = 1; k <= 2 * n; ++k) {
        const Complex direct = power_sum(rep.lambdas, k);
        rep.newton_discrepancy =
            std::max(rep.newton_discrepancy, std::abs(direct - newton[k - 1]) / (1.0 + std::abs(direct)));
    }

    double a_max = 0.0;
    for (int j = 0; j < n; ++j) a_max = std::max(a_max, std::abs(a[j]));
    const double tol = head_tolerance(a_max, n);
    if (rep.residual_head > tol) {
        throw NumericalError("head residual " + std::to_string(rep.residual_head) + " exceeds tolerance " +
                             std::to_string(tol));
    }
    return rep;
}

Complex power_sum(std::span<const Complex> lambdas, int nu) {
    if (nu < 1) throw InvalidArgument("power_sum requires nu >= 1");
    Complex acc{0.0, 0.0};
    for (const auto& l : lambdas) acc += ipow(l, nu);
    return acc;
}

Complex tail_residual(const Representation& rep, int j) {
    if (j < 0) throw InvalidArgument("tail_residual requires j >= 0");
    return power_sum(rep.lambdas, j + 1) - rep.a.at_or_zero(static_cast<std::size_t>(j));
}

bool has_bounded_coefficients(const CoeffSeq& a) {
    for (std::size_t j = 0; j < a.size(); ++j) {
        const double cap = 1.0 / ((j + 2.0) * (j + 2.0));
        if (std::abs(a[j]) > cap) return false;
    }
    return true;
}

double tail_bound_general(int n, int j, double r, double eps) {
    if (j < n) throw InvalidArgument("tail bound requires j >= n");
    if (!(0.0 < eps && eps < r && r < 1.0)) throw InvalidArgument("tail bound requires 0 < eps < r < 1");
    return std::pow(r, n + 1) * std::pow(r - eps, -j) / (2.0 * eps * (1.0 - r));
}

double tail_bound_bounded(int n, int j, double r) {
    if (n < 1) throw InvalidArgument("tail bound requires n >= 1");
    if (j < n) throw InvalidArgument("tail bound requires j >= n");
    if (!(0.0 < r && r < 1.0)) throw InvalidArgument("tail bound requires 0 < r < 1");
    return std::pow(r, n - j) / (1.0 - std::pow(r, n + 1)) * (15.0 * n + 30.0 / (1.0 - r));
}

TailBoundOptimum best_tail_bound(int n, int j, TailBoundKind kind) {
    if (j < n) throw InvalidArgument("tail bound requires j >= n");

    TailBoundOptimum best{std::numeric_limits<double>::infinity(), 0.0, 0.0};
    if (kind == TailBoundKind::bounded) {
        for (int i = 1; i <= 19; ++i) {
            const double r = 0.05 * i;
            const double v = tail_bound_bounded(n, j, r);
            if (v < best.value) best = {v, r, 0.0};
        }
        const double lo = std::max(best.r - 0.05, 1e-6);
        const double hi = std::min(best.r + 0.05, 1.0 - 1e-9);
        auto [r, v] = golden_min([&](double x) { return tail_bound_bounded(n, j, x); }, lo, hi, golden_tol);
        if (v < best.value) best = {v, r, 0.0};
        return best;
    }

    for (int i = 1; i <= 19; ++i) {
        const double r = 0.05 * i;
        auto [e, v] = best_eps(n, j, r);
        if (v < best.value) best = {v, r, e};
    }
    const double lo = std::max(best.r - 0.05, 1e-6);
    const double hi = std::min(best.r + 0.05, 1.0 - 1e-9);
    auto [r, v] = golden_min([&](double x) { return best_eps(n, j, x).second; }, lo, hi, golden_tol);
    if (v < best.value) best = {v, r, best_eps(n, j, r).first};
    return best;
}

}  // namespace circlesum
