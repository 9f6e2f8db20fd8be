#pragma once

// Shared generators and independent reference computations for the unit tests.

#include <cmath>
#include <complex>
#include <numbers>
#include <random>
#include <vector>

#include "circlesum/types.hpp"

namespace circlesum::testing {

inline constexpr double two_pi = 2.0 * std::numbers::pi;

inline std::mt19937_64& rng() {
    static std::mt19937_64 gen(20261017);
    return gen;
}

inline double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng()); }

inline Complex unimodular() { return std::polar(1.0, uniform(0.0, two_pi)); }

/// Random coefficients with |c_j| <= scale (j+2)^{-1-sigma}.
inline std::vector<Complex> bounded_coeffs(std::size_t len, double sigma = 1.0, double scale = 1.0) {
    std::vector<Complex> c(len);
    for (std::size_t j = 0; j < len; ++j)
        c[j] = scale * uniform(0.0, 1.0) * std::pow(j + 2.0, -1.0 - sigma) * unimodular();
    return c;
}

inline std::vector<Complex> random_disk_coeffs(std::size_t len, double radius) {
    std::vector<Complex> c(len);
    for (auto& x : c) x = radius * std::sqrt(uniform(0.0, 1.0)) * unimodular();
    return c;
}

/// Power sum by direct std::pow, independent of the library's repeated squaring.
inline Complex naive_power_sum(const std::vector<Complex>& pts, int nu) {
    Complex acc{0.0, 0.0};
    for (const auto& p : pts) acc += std::pow(p, nu);
    return acc;
}

inline Complex naive_poly(const std::vector<Complex>& c, Complex z) {
    Complex acc{0.0, 0.0};
    for (std::size_t k = 0; k < c.size(); ++k) acc += c[k] * std::pow(z, static_cast<int>(k));
    return acc;
}

}  // namespace circlesum::testing
