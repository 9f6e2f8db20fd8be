#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <initializer_list>
#include <numbers>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "circlesum/errors.hpp"

namespace circlesum {

using Complex = std::complex<double>;

inline bool is_finite(Complex z) noexcept {
    return std::isfinite(z.real()) && std::isfinite(z.imag());
}

/// Dense complex Taylor coefficients, index 0 is the constant term.
///
/// Never empty and never holds NaN/Inf. Reads past the end through `at_or_zero`
/// see zeros, so a finite prefix stands for a series with vanishing tail.
class CoeffSeq {
public:
    CoeffSeq() : coeffs_{Complex{0.0, 0.0}} {}
    CoeffSeq(std::initializer_list<Complex> init) : CoeffSeq(std::vector<Complex>(init)) {}
    explicit CoeffSeq(std::vector<Complex> coeffs) : coeffs_(std::move(coeffs)) {
        if (coeffs_.empty()) throw InvalidArgument("coefficient sequence must not be empty");
        for (std::size_t j = 0; j < coeffs_.size(); ++j) {
            if (!is_finite(coeffs_[j]))
                throw InvalidArgument("non-finite coefficient at index " + std::to_string(j));
        }
    }

    std::size_t size() const noexcept { return coeffs_.size(); }
    const Complex& operator[](std::size_t j) const { return coeffs_[j]; }
    Complex at_or_zero(std::size_t j) const noexcept {
        return j < coeffs_.size() ? coeffs_[j] : Complex{0.0, 0.0};
    }
    std::span<const Complex> span() const noexcept { return coeffs_; }
    const std::vector<Complex>& vec() const noexcept { return coeffs_; }

    auto begin() const noexcept { return coeffs_.begin(); }
    auto end() const noexcept { return coeffs_.end(); }

    double max_abs() const noexcept {
        double m = 0.0;
        for (const auto& c : coeffs_) m = std::max(m, std::abs(c));
        return m;
    }

private:
    std::vector<Complex> coeffs_;
};

/// Order-n Taylor polynomial of exp(integral of f); g[0] == 1.
struct TaylorPolynomial {
    CoeffSeq g;
    int n = 0;
};

/// Degree N = 2n+1 self-inversive polynomial: coeffs[k] == conj(coeffs[N-k]).
class CPolynomial {
public:
    CPolynomial(std::vector<Complex> coeffs, int n) : coeffs_(std::move(coeffs)), n_(n) {
        if (n_ < 1) throw InvalidArgument("CPolynomial requires n >= 1");
        if (coeffs_.size() != static_cast<std::size_t>(degree() + 1))
            throw InvalidArgument("CPolynomial coefficient count must be 2n+2");
        for (const auto& c : coeffs_)
            if (!is_finite(c)) throw InvalidArgument("non-finite CPolynomial coefficient");
    }

    int n() const noexcept { return n_; }
    int degree() const noexcept { return 2 * n_ + 1; }
    std::span<const Complex> coeffs() const noexcept { return coeffs_; }
    const Complex& operator[](std::size_t k) const { return coeffs_[k]; }

    double max_abs_coeff() const noexcept {
        double m = 0.0;
        for (const auto& c : coeffs_) m = std::max(m, std::abs(c));
        return m;
    }

    /// Exact coefficient-level check of the reflection symmetry.
    bool is_self_inversive() const noexcept {
        const int deg = degree();
        for (int k = 0; k <= deg; ++k)
            if (coeffs_[k] != std::conj(coeffs_[deg - k])) return false;
        return true;
    }

private:
    std::vector<Complex> coeffs_;
    int n_;
};

/// Sorted arguments in [0, 2pi) of the roots of a CPolynomial, with |P(e^{i theta})|.
struct CirclePhases {
    std::vector<double> phases;
    std::vector<double> residuals;

    std::size_t size() const noexcept { return phases.size(); }
    double max_residual() const noexcept {
        double m = 0.0;
        for (double r : residuals) m = std::max(m, r);
        return m;
    }
    /// Smallest gap between neighbouring phases, including the wrap-around gap.
    double min_separation() const noexcept {
        if (phases.size() < 2) return 2.0 * std::numbers::pi;
        double gap = 2.0 * std::numbers::pi - phases.back() + phases.front();
        for (std::size_t k = 1; k < phases.size(); ++k) gap = std::min(gap, phases[k] - phases[k - 1]);
        return gap;
    }
};

}  // namespace circlesum
