#include "circlesum/oracle.hpp"

#include <cmath>
#include <string>

namespace circlesum::oracle {

namespace {

// Neumaier summation, one accumulator per real component.
class CompensatedSum {
public:
    void add(double x) noexcept {
        const double t = sum_ + x;
        if (std::abs(sum_) >= std::abs(x))
            comp_ += (sum_ - t) + x;
        else
            comp_ += (x - t) + sum_;
        sum_ = t;
    }
    double value() const noexcept { return sum_ + comp_; }

private:
    double sum_ = 0.0;
    double comp_ = 0.0;
};

class CompensatedComplexSum {
public:
    void add(Complex z) noexcept {
        re_.add(z.real());
        im_.add(z.imag());
    }
    Complex value() const noexcept { return {re_.value(), im_.value()}; }

private:
    CompensatedSum re_;
    CompensatedSum im_;
};

}  // namespace

std::vector<Complex> elementary_symmetric(std::span<const Complex> points) {
    // Coefficients of prod (z - x_k) built one factor at a time; e_j = (-1)^j c_{N-j}.
    std::vector<Complex> e(points.size() + 1, Complex{0.0, 0.0});
    e[0] = 1.0;
    for (std::size_t k = 0; k < points.size(); ++k) {
        for (std::size_t j = k + 1; j >= 1; --j) e[j] += e[j - 1] * points[k];
    }
    return e;
}

std::vector<Complex> power_sums_from_elementary(std::span<const Complex> e, int m) {
    const int top = static_cast<int>(e.size()) - 1;
    auto ej = [&](int j) { return j <= top ? e[j] : Complex{0.0, 0.0}; };

    std::vector<Complex> s(static_cast<std::size_t>(std::max(m, 0)) + 1, Complex{0.0, 0.0});
    for (int k = 1; k <= m; ++k) {
        Complex acc{0.0, 0.0};
        double sign = 1.0;
        for (int i = 1; i < k; ++i) {
            acc += sign * ej(i) * s[k - i];
            sign = -sign;
        }
        acc += sign * static_cast<double>(k) * ej(k);
        s[k] = acc;
    }
    s.erase(s.begin());
    return s;
}

std::vector<Complex> newton_power_sums(const CPolynomial& p, int m) {
    if (m < 1) throw InvalidArgument("newton_power_sums requires m >= 1");
    const auto c = p.coeffs();
    std::vector<Complex> e(c.size());
    double sign = 1.0;
    for (std::size_t j = 0; j < c.size(); ++j) {
        e[j] = sign * c[j] / c[0];
        sign = -sign;
    }
    return power_sums_from_elementary(e, m);
}

CoeffSeq brute_exp_series(const CoeffSeq& f, int n) {
    if (n < 0) throw InvalidArgument("order must be non-negative");
    if (n > brute_exp_series_max_order)
        throw InvalidArgument("brute_exp_series order " + std::to_string(n) + " exceeds cost guard " +
                              std::to_string(brute_exp_series_max_order));

    const auto len = static_cast<std::size_t>(n) + 1;
    std::vector<Complex> antideriv(len, Complex{0.0, 0.0});
    for (std::size_t j = 1; j < len; ++j) antideriv[j] = f.at_or_zero(j - 1) / static_cast<double>(j);

    std::vector<CompensatedComplexSum> total(len);
    std::vector<Complex> term(len, Complex{0.0, 0.0});
    term[0] = 1.0;
    total[0].add(term[0]);

    // term_m = F^m / m!; F has no constant term, so term_m starts at order m.
    for (int m = 1; m <= n; ++m) {
        std::vector<Complex> next(len, Complex{0.0, 0.0});
        for (std::size_t k = static_cast<std::size_t>(m); k < len; ++k) {
            CompensatedComplexSum acc;
            for (std::size_t i = 1; i <= k; ++i) acc.add(antideriv[i] * term[k - i]);
            next[k] = acc.value() / static_cast<double>(m);
        }
        term = std::move(next);
        for (std::size_t k = 0; k < len; ++k) total[k].add(term[k]);
    }

    std::vector<Complex> out(len);
    for (std::size_t k = 0; k < len; ++k) out[k] = total[k].value();
    return CoeffSeq(std::move(out));
}

bool coefficient_bound_check(const CoeffSeq& f, double sigma, int n) {
    if (!(sigma > 0.0)) throw InvalidArgument("sigma must be positive");
    if (n < 1) throw InvalidArgument("coefficient_bound_check requires n >= 1");
    const double power = -1.0 - sigma;
    for (int k = 0; k <= n; ++k) {
        if (std::abs(f.at_or_zero(k)) > std::pow(k + 2.0, power))
            throw InvalidArgument("hypothesis |f_k| <= (k+2)^(-1-sigma) fails at k = " + std::to_string(k));
    }

    const CoeffSeq g = brute_exp_series(f, n);
    if (std::abs(g[1]) > std::pow(2.0, power)) return false;
    for (int k = 2; k <= n; ++k) {
        if (!(std::abs(g[k]) < std::pow(k + 1.0, power))) return false;
    }
    return true;
}

double zeta2_partial(long n) {
    if (n < 1) throw InvalidArgument("zeta2_partial requires n >= 1");
    CompensatedSum acc;
    for (long k = n; k >= 1; --k) {
        const double kd = static_cast<double>(k);
        acc.add(1.0 / (kd * kd));
    }
    return acc.value();
}

}  // namespace circlesum::oracle
