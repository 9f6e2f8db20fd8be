#include "circlesum/approx.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "circlesum/cpolynomial.hpp"
#include "circlesum/series.hpp"

namespace circlesum {

namespace {

constexpr double two_pi = 2.0 * std::numbers::pi;
constexpr double pole_distance = 1e-12;
constexpr double h_truncation = 1e-12;

void require_inside_disk(Complex z) {
    if (!(std::abs(z) < 1.0))
        throw InvalidArgument("h-sum evaluation needs |z| < 1, got |z| = " + std::to_string(std::abs(z)));
}

void require_bound_args(int n, double abs_z) {
    if (n < 1) throw InvalidArgument("bound requires n >= 1");
    if (!(abs_z >= 0.0 && abs_z < 1.0)) throw InvalidArgument("bound requires 0 <= |z| < 1");
}

Complex nonzero_h(const HSeries& h, int j) {
    const Complex hj = h.coeff(j);
    if (hj == Complex{0.0, 0.0}) throw InvalidArgument("h coefficient " + std::to_string(j) + " is zero");
    return hj;
}

}  // namespace

HSeries::HSeries(std::function<Complex(int)> coeff, double bound, std::string name)
    : coeff_(std::move(coeff)), bound_(bound), name_(std::move(name)) {
    if (!(bound_ > 0.0) || !std::isfinite(bound_)) throw InvalidArgument("h bound M must be positive and finite");
}

HSeries HSeries::from_coeffs(const CoeffSeq& coeffs, double bound) {
    for (std::size_t j = 0; j < coeffs.size(); ++j) {
        if (std::abs(coeffs[j]) > bound)
            throw InvalidArgument("|h_" + std::to_string(j) + "| exceeds the declared bound M");
    }
    return HSeries([coeffs](int j) { return coeffs.at_or_zero(static_cast<std::size_t>(j)); }, bound, "coeffs");
}

HSeries HSeries::simple_pole() {
    return HSeries([](int) { return Complex{-1.0, 0.0}; }, 1.0, "pole");
}

HSeries HSeries::exponential() {
    return HSeries([](int j) { return Complex{1.0 / std::tgamma(j + 1.0), 0.0}; }, 1.0, "exp");
}

int HSeries::series_cut(double abs_w, double bound) {
    if (abs_w == 0.0) return 0;
    int cut = 0;
    double tail = bound * abs_w / (1.0 - abs_w);
    while (tail > h_truncation) {
        ++cut;
        tail *= abs_w;
    }
    return cut;
}

HSeries::Value HSeries::eval(Complex w) const {
    const double aw = std::abs(w);
    require_inside_disk(w);
    const int cut = series_cut(aw, bound_);
    Complex acc{0.0, 0.0};
    for (int j = cut; j >= 0; --j) acc = acc * w + coeff_(j);
    const double tail = aw == 0.0 ? 0.0 : bound_ * std::pow(aw, cut + 1) / (1.0 - aw);
    return {acc, tail};
}

Complex spf_eval(const CirclePhases& phases, Complex z) {
    Complex acc{0.0, 0.0};
    for (double t : phases.phases) {
        const Complex d = z - std::polar(1.0, t);
        if (std::abs(d) < pole_distance) throw PoleProximityError("evaluation point is within 1e-12 of a pole");
        acc += 1.0 / d;
    }
    return acc;
}

double spf_bound_disk(int n, double a_radius, double eps) {
    if (n < 1) throw InvalidArgument("bound requires n >= 1");
    if (!(a_radius > 0.0 && a_radius < 1.0)) throw InvalidArgument("bound requires 0 < a < 1");
    if (!(eps > 0.0 && eps < 1.0 - a_radius)) throw InvalidArgument("bound requires 0 < eps < 1 - a");
    return std::pow(a_radius + eps, n + 1) / (2.0 * eps * (1.0 - a_radius - eps));
}

double spf_bound_bounded(int n, double abs_z) {
    require_bound_args(n, abs_z);
    return 15.0 * std::pow(abs_z, n) / (1.0 - std::pow(abs_z, n + 1)) * (n + 2.0 / (1.0 - abs_z));
}

int spf_interpolation_order(const CoeffSeq& f, int n) {
    const TaylorPolynomial s = exp_antiderivative_taylor(f, n);
    if (!disk_zero_free(s))
        throw RepresentTooSmall("order " + std::to_string(n) + " is below the zero-free threshold", -1);
    const CPolynomial p = build_p(s);
    const auto c = p.coeffs();
    const int deg = p.degree();
    const int terms = n + deg + 8;

    // P'/P by series division: sum_{i<=k} p_i q_{k-i} = (k+1) p_{k+1}.
    std::vector<Complex> q(static_cast<std::size_t>(terms), Complex{0.0, 0.0});
    for (int k = 0; k < terms; ++k) {
        Complex acc = k + 1 <= deg ? static_cast<double>(k + 1) * c[k + 1] : Complex{0.0, 0.0};
        for (int i = 1; i <= std::min(k, deg); ++i) acc -= c[i] * q[k - i];
        q[k] = acc / c[0];
    }
    for (int k = 0; k < terms; ++k) {
        if (std::abs(q[k] - f.at_or_zero(static_cast<std::size_t>(k))) > order_tolerance) return k;
    }
    return terms;
}

double spf_sup_error(const CoeffSeq& f, const CirclePhases& phases, double radius, int angles) {
    double sup = 0.0;
    for (int i = 0; i < angles; ++i) {
        const Complex z = std::polar(radius, two_pi * i / angles);
        sup = std::max(sup, std::abs(spf_eval(phases, z) - eval_poly(f, z)));
    }
    return sup;
}

int estimate_n1(const CoeffSeq& f, const BoundParams& p, int n_max) {
    std::string last = "no zero-free order found";
    for (int n = 1; n <= n_max; ++n) {
        const TaylorPolynomial s = exp_antiderivative_taylor(f, n);
        if (!disk_zero_free(s)) continue;
        const CirclePhases phases = roots_on_circle(build_p(s));
        const double measured = spf_sup_error(f, phases, p.a_radius);
        const double bound = spf_bound_disk(n, p);
        if (measured <= bound) return n;
        last = "at n = " + std::to_string(n) + " measured " + std::to_string(measured) + " > bound " +
               std::to_string(bound);
    }
    throw NotFoundError("estimate_n1: bound not met for n <= " + std::to_string(n_max) + " (" + last + ")", n_max);
}

Complex exp_sum_eval(std::span<const Complex> lambdas, Complex z) {
    Complex acc{0.0, 0.0};
    for (const auto& l : lambdas) acc += l * std::exp(l * z);
    return acc;
}

double exp_sum_bound(int n, Complex z, double r) {
    if (n < 1) throw InvalidArgument("bound requires n >= 1");
    if (!(r > 0.0 && r < 1.0)) throw InvalidArgument("bound requires 0 < r < 1");
    const double az = std::abs(z);
    const double lead = std::pow(az, n) / std::tgamma(n + 1.0);
    return lead * 15.0 / (1.0 - std::pow(r, n + 1)) * (n + 2.0 / (1.0 - r)) *
           (1.0 + az * std::exp(az / r) / (r * n + r));
}

Complex exp_generating_eval(const CoeffSeq& p, Complex z) {
    Complex acc{0.0, 0.0};
    Complex term{1.0, 0.0};
    for (std::size_t j = 0; j < p.size(); ++j) {
        acc += p[j] * term;
        term *= z / static_cast<double>(j + 1);
    }
    return acc;
}

Representation h_sum_build(const CoeffSeq& f, const HSeries& h, int n) {
    const std::size_t len = std::max(f.size(), static_cast<std::size_t>(n));
    std::vector<Complex> targets(len);
    for (std::size_t j = 0; j < len; ++j) targets[j] = f.at_or_zero(j) / nonzero_h(h, static_cast<int>(j));
    return represent(CoeffSeq(std::move(targets)), n);
}

Representation h1_sum_build(const CoeffSeq& f, const HSeries& h, int n) {
    if (h.coeff(0) != Complex{0.0, 0.0}) throw InvalidArgument("first-kind h-sum requires h_0 = 0");
    const std::size_t len = std::max(f.size() > 0 ? f.size() - 1 : 0, static_cast<std::size_t>(n));
    std::vector<Complex> targets(len);
    for (std::size_t j = 0; j < len; ++j)
        targets[j] = f.at_or_zero(j + 1) / nonzero_h(h, static_cast<int>(j + 1));
    return represent(CoeffSeq(std::move(targets)), n);
}

HSeries::Value h_sum_eval(const HSeries& h, std::span<const Complex> lambdas, Complex z) {
    require_inside_disk(z);
    HSeries::Value out{{0.0, 0.0}, 0.0};
    for (const auto& l : lambdas) {
        const auto v = h.eval(l * z);
        out.value += l * v.value;
        out.truncation_error += v.truncation_error;
    }
    return out;
}

HSeries::Value h1_sum_eval(const HSeries& h, std::span<const Complex> lambdas, Complex z) {
    if (h.coeff(0) != Complex{0.0, 0.0}) throw InvalidArgument("first-kind h-sum requires h_0 = 0");
    require_inside_disk(z);
    HSeries::Value out{{0.0, 0.0}, 0.0};
    for (const auto& l : lambdas) {
        const auto v = h.eval(l * z);
        out.value += v.value;
        out.truncation_error += v.truncation_error;
    }
    return out;
}

double h_sum_bound(int n, double abs_z, double bound_m) {
    require_bound_args(n, abs_z);
    return std::pow(abs_z, n) * std::pow(5.0 - abs_z, n + 1) / std::pow(4.0, n - 1) * (2.0 * bound_m / 3.0) *
           (3.0 + abs_z) / std::pow(1.0 - abs_z, 4);
}

double h_sum_bound_raw(int n, double abs_z, double bound_m, double r, double eps) {
    require_bound_args(n, abs_z);
    if (!(0.0 < eps && eps < r && r < 1.0)) throw InvalidArgument("bound requires 0 < eps < r < 1");
    if (!(abs_z < r - eps)) throw InvalidArgument("bound requires |z| < r - eps");
    return bound_m / (r - eps - abs_z) * std::pow(r, n + 1) / (1.0 - r) * std::pow(abs_z, n) /
           (2.0 * eps * std::pow(r - eps, n - 1));
}

double h1_sum_bound(int n, double abs_z, double bound_m) {
    require_bound_args(n, abs_z);
    return std::pow(5.0 * abs_z - abs_z * abs_z, n + 1) / std::pow(4.0, n - 1) * (2.0 * bound_m / 3.0) *
           (3.0 + abs_z) / std::pow(1.0 - abs_z, 4);
}

}  // namespace circlesum
