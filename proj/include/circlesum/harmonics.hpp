#pragma once

#include <cmath>
#include <complex>
#include <numbers>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "circlesum/types.hpp"

namespace circlesum {

/// Zero-mean trigonometric polynomial T(t) = sum_{m=1}^n a_m cos(mt) + b_m sin(mt).
///
/// Scalar is double for real signals; Complex is accepted too since the
/// extraction identities are linear in the coefficients.
template <typename Scalar>
class BasicTrigPolynomial {
public:
    BasicTrigPolynomial(std::vector<Scalar> a, std::vector<Scalar> b) : a_(std::move(a)), b_(std::move(b)) {
        if (a_.size() != b_.size()) throw InvalidArgument("cosine and sine coefficient counts differ");
        if (a_.empty()) throw InvalidArgument("trigonometric polynomial needs degree >= 1");
    }
    static BasicTrigPolynomial zero(int n) {
        return BasicTrigPolynomial(std::vector<Scalar>(n, Scalar{}), std::vector<Scalar>(n, Scalar{}));
    }

    int degree() const noexcept { return static_cast<int>(a_.size()); }
    /// a_m, b_m for m = 1..n.
    Scalar a(int m) const { return a_.at(m - 1); }
    Scalar b(int m) const { return b_.at(m - 1); }
    const std::vector<Scalar>& cos_coeffs() const noexcept { return a_; }
    const std::vector<Scalar>& sin_coeffs() const noexcept { return b_; }

    /// c_m = (a_m - i b_m) / 2.
    Complex c(int m) const { return 0.5 * (Complex(a(m)) - Complex{0.0, 1.0} * Complex(b(m))); }

    Scalar operator()(double t) const {
        Scalar acc{};
        for (int m = 1; m <= degree(); ++m) acc += harmonic(m, t);
        return acc;
    }

    /// tau_m(t) = a_m cos(mt) + b_m sin(mt).
    Scalar harmonic(int m, double t) const { return a(m) * std::cos(m * t) + b(m) * std::sin(m * t); }

    /// sum_m (|a_m| + |b_m|).
    double coeff_l1() const {
        double s = 0.0;
        for (int m = 1; m <= degree(); ++m) s += std::abs(a(m)) + std::abs(b(m));
        return s;
    }

    BasicTrigPolynomial operator+(const BasicTrigPolynomial& o) const { return combine(o, Scalar{1}, Scalar{1}); }
    BasicTrigPolynomial scaled(Scalar alpha) const { return combine(*this, alpha, Scalar{}); }
    BasicTrigPolynomial combine(const BasicTrigPolynomial& o, Scalar alpha, Scalar beta) const {
        if (o.degree() != degree()) throw InvalidArgument("degree mismatch");
        std::vector<Scalar> a(a_.size()), b(b_.size());
        for (std::size_t i = 0; i < a_.size(); ++i) {
            a[i] = alpha * a_[i] + beta * o.a_[i];
            b[i] = alpha * b_[i] + beta * o.b_[i];
        }
        return BasicTrigPolynomial(std::move(a), std::move(b));
    }

private:
    std::vector<Scalar> a_;
    std::vector<Scalar> b_;
};

using TrigPolynomial = BasicTrigPolynomial<double>;
using ComplexTrigPolynomial = BasicTrigPolynomial<Complex>;

/// Universal phase set t_1..t_N (N = 2n+1) with a power-sum certificate:
/// for lambda_k = e^{-i t_k}, S_j(lambda) equals targets[j-1] for j = 1..n.
struct ExtractionOperator {
    int n = 0;
    int nu = 0;                    ///< extracted harmonic; 0 for a combination operator
    int q = 0;                     ///< floor(n / nu) for single-harmonic operators
    int threshold = 0;             ///< zero-free threshold n* of a combination operator
    std::vector<Complex> targets;  ///< target power sums S_1..S_n
    std::vector<double> phases;    ///< sorted, in [0, 2pi)
    std::vector<Complex> power_sums;  ///< measured S_1..S_n
    double certificate_residual = 0.0;
    double certificate_tolerance = 0.0;

    int N() const noexcept { return 2 * n + 1; }
    bool certified() const noexcept { return certificate_residual <= certificate_tolerance; }
};

/// Coefficients of s(z) + z^N s(1/z) with s(z) = sum_{j=0}^{q} (-z^nu)^j / (nu^j j!), q = floor(n/nu).
CPolynomial extraction_polynomial(int n, int nu);

/// Phase set isolating the nu-th harmonic of any degree-n signal. Requires
/// n >= 2 (PreconditionError) and 1 <= nu <= n (InvalidArgument). Results are
/// cached per (n, nu); the cache is safe under concurrent use.
ExtractionOperator extraction_phases(int n, int nu);

/// Number of cached (n, nu) phase sets.
std::size_t extraction_cache_size();

/// Phase set reproducing sum_m gamma_m S_m targets: S_m = gamma_m (m <= len),
/// S_j = 0 otherwise up to the working degree max(n*, len, 2), where n* is the
/// zero-free threshold of f(z) = -sum gamma_j z^{j-1}. Throws NotFoundError
/// when no admissible degree exists up to n_max.
ExtractionOperator combination_phases(std::span<const Complex> gamma, int n_max);

/// Theta(t) = sum_k T(t - t_k). Requires T.degree() == op.n.
template <typename Scalar>
Scalar extract_harmonic(const BasicTrigPolynomial<Scalar>& signal, const ExtractionOperator& op, double t) {
    if (signal.degree() != op.n) {
        throw InvalidArgument("signal degree " + std::to_string(signal.degree()) +
                              " does not match operator degree " + std::to_string(op.n));
    }
    Scalar acc{};
    for (double tk : op.phases) acc += signal(t - tk);
    return acc;
}

/// (a_nu, b_nu) = (sum_k T(-t_k), sum_k T(pi/(2 nu) - t_k)).
template <typename Scalar>
std::pair<Scalar, Scalar> fourier_coeffs(const BasicTrigPolynomial<Scalar>& signal, int nu) {
    const ExtractionOperator op = extraction_phases(signal.degree(), nu);
    return {extract_harmonic(signal, op, 0.0), extract_harmonic(signal, op, std::numbers::pi / (2.0 * nu))};
}

/// 2 Re sum_m gamma_m c_m e^{imt}: what a combination operator returns on a real
/// signal. Equals sum_m gamma_m tau_m(t) when every gamma_m is real.
double combination_reference(const TrigPolynomial& signal, std::span<const Complex> gamma, double t);

/// Extraction tolerance 1e-8 N (1 + sum |a_m| + |b_m|).
double extraction_tolerance(int n, double coeff_l1);

/// Least-squares fit of a degree-n signal (plus a discarded constant term)
/// to samples (t_i, y_i). Needs at least 2n+1 samples.
TrigPolynomial fit_trig_polynomial(std::span<const double> t, std::span<const double> y, int n);

}  // namespace circlesum
