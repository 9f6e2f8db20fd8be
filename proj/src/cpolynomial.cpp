#include "circlesum/cpolynomial.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>
#include <vector>

#include "circlesum/series.hpp"

namespace circlesum {

namespace {

constexpr double two_pi = 2.0 * std::numbers::pi;
constexpr double eps = std::numeric_limits<double>::epsilon();

Complex unit(double theta) { return std::polar(1.0, theta); }

// Adaptive argument-principle walk along the circle. Each accepted segment
// turns the argument by at most pi/4, so the unwrapped total is exact.
class WindingWalk {
public:
    explicit WindingWalk(std::span<const Complex> s) : s_(s) {}

    double segment(double ta, Complex va, double tb, Complex vb, int depth) {
        const double turn = std::arg(vb / va);
        if (std::abs(turn) <= std::numbers::pi / 4) return turn;
        if (depth >= max_depth) {
            zero_on_circle_ = true;
            return turn;
        }
        const double tm = 0.5 * (ta + tb);
        const Complex vm = eval(tm);
        return segment(ta, va, tm, vm, depth + 1) + segment(tm, vm, tb, vb, depth + 1);
    }

    Complex eval(double theta) {
        const Complex v = eval_poly(s_, unit(theta));
        min_modulus_ = std::min(min_modulus_, std::abs(v));
        return v;
    }

    bool zero_on_circle() const noexcept { return zero_on_circle_; }
    double min_modulus() const noexcept { return min_modulus_; }

    static constexpr int max_depth = 44;

private:
    std::span<const Complex> s_;
    double min_modulus_ = std::numeric_limits<double>::infinity();
    bool zero_on_circle_ = false;
};

// Illinois-modified regula falsi on a sign-change bracket.
template <typename F>
double refine_bracket(F&& fn, double a, double fa, double b, double fb) {
    int side = 0;
    for (int it = 0; it < 200; ++it) {
        if (b - a <= 4.0 * eps * std::max(1.0, std::abs(a))) break;
        double c = (a * fb - b * fa) / (fb - fa);
        if (!(c > a && c < b)) c = 0.5 * (a + b);
        const double fc = fn(c);
        if (fc == 0.0) return c;
        if ((fc > 0) == (fb > 0)) {
            b = c;
            fb = fc;
            if (side == -1) fa *= 0.5;
            side = -1;
        } else {
            a = c;
            fa = fc;
            if (side == 1) fb *= 0.5;
            side = 1;
        }
    }
    return std::abs(fa) < std::abs(fb) ? a : b;
}

struct Bracket {
    double a, fa, b, fb;
};

}  // namespace

CPolynomial build_p(const TaylorPolynomial& s) {
    if (s.n < 1) throw InvalidArgument("build_p requires n >= 1, got " + std::to_string(s.n));
    if (s.g.size() != static_cast<std::size_t>(s.n) + 1)
        throw InvalidArgument("Taylor polynomial must carry exactly n+1 coefficients");
    const int deg = 2 * s.n + 1;
    std::vector<Complex> c(static_cast<std::size_t>(deg) + 1, Complex{0.0, 0.0});
    for (int k = 0; k <= s.n; ++k) {
        c[k] = s.g[k];
        c[deg - k] = std::conj(s.g[k]);
    }
    return CPolynomial(std::move(c), s.n);
}

bool disk_zero_free(const TaylorPolynomial& s) {
    std::size_t len = s.g.size();
    while (len > 1 && s.g[len - 1] == Complex{0.0, 0.0}) --len;
    const auto coeffs = s.g.span().first(len);
    if (len == 1) return coeffs[0] != Complex{0.0, 0.0};

    const int degree = static_cast<int>(len) - 1;
    const int samples = std::max(256, 32 * degree);
    WindingWalk walk(coeffs);

    const Complex first = walk.eval(0.0);
    Complex prev = first;
    double total = 0.0;
    for (int i = 1; i <= samples; ++i) {
        const double theta = two_pi * i / samples;
        const Complex cur = i == samples ? first : walk.eval(theta);
        total += walk.segment(two_pi * (i - 1) / samples, prev, theta, cur, 0);
        prev = cur;
    }

    double coeff_l1 = 0.0;
    for (const auto& c : coeffs) coeff_l1 += std::abs(c);
    if (walk.zero_on_circle() || walk.min_modulus() <= 64.0 * eps * coeff_l1) return false;
    if (walk.min_modulus() <= tolerance::boundary) {
        throw BorderlineError("boundary modulus " + std::to_string(walk.min_modulus()) +
                                  " inside tolerance band; zero-free test is indeterminate",
                              walk.min_modulus());
    }
    const long winding = std::lround(total / two_pi);
    return winding == 0;
}

int n0(const CoeffSeq& f, int n_max) {
    if (n_max < 1) throw InvalidArgument("n_max must be >= 1");
    for (int n = 1; n <= n_max; ++n) {
        if (disk_zero_free(exp_antiderivative_taylor(f, n))) return n;
    }
    throw NotFoundError("no zero-free Taylor polynomial for n <= " + std::to_string(n_max), n_max);
}

double q_real(const CPolynomial& p, double theta) {
    const Complex rot = std::polar(1.0, -0.5 * p.degree() * theta);
    return (rot * eval_poly(p.coeffs(), unit(theta))).real();
}

CirclePhases roots_on_circle(const CPolynomial& p) {
    const int deg = p.degree();
    const double residual_tol = tolerance::root_residual_rel * p.max_abs_coeff();
    auto q = [&p](double theta) { return q_real(p, theta); };

    int found = 0;
    for (int factor = tolerance::grid_factor_initial; factor <= tolerance::grid_factor_max; factor *= 2) {
        const int grid = factor * deg;
        std::vector<double> values(static_cast<std::size_t>(grid) + 1);
        for (int i = 0; i < grid; ++i) values[i] = q(two_pi * i / grid);
        values[grid] = -values[0];

        std::vector<double> exact;
        std::vector<Bracket> brackets;
        for (int i = 0; i < grid; ++i) {
            const double va = values[i];
            const double vb = values[i + 1];
            if (va == 0.0) {
                exact.push_back(two_pi * i / grid);
                continue;
            }
            if (vb != 0.0 && (va > 0) != (vb > 0))
                brackets.push_back({two_pi * i / grid, va, two_pi * (i + 1) / grid, vb});
        }
        found = static_cast<int>(exact.size() + brackets.size());
        if (found != deg) continue;

        std::vector<double> phases = exact;
        for (const auto& br : brackets) phases.push_back(refine_bracket(q, br.a, br.fa, br.b, br.fb));
        for (auto& t : phases) {
            t = std::fmod(t, two_pi);
            if (t < 0) t += two_pi;
        }
        std::sort(phases.begin(), phases.end());

        CirclePhases out;
        out.phases = std::move(phases);
        out.residuals.reserve(out.phases.size());
        for (double t : out.phases) out.residuals.push_back(std::abs(eval_poly(p.coeffs(), unit(t))));

        if (out.max_residual() > residual_tol) {
            throw NumericalError("root residual " + std::to_string(out.max_residual()) +
                                 " exceeds tolerance " + std::to_string(residual_tol));
        }
        if (out.min_separation() <= tolerance::separation) {
            throw NumericalError("root separation " + std::to_string(out.min_separation()) +
                                 " below tolerance; conditioning collapse");
        }
        return out;
    }
    throw RootCountError("found " + std::to_string(found) + " sign changes, expected " + std::to_string(deg),
                         deg, found);
}

}  // namespace circlesum
