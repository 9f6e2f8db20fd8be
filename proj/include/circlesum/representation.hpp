#pragma once

#include <span>
#include <vector>

#include "circlesum/types.hpp"

namespace circlesum {

/// Free parameters of the Cauchy-estimate tail bounds.
struct BoundParams {
    double r = 0.5;
    double eps = 0.25;
    double a_radius = 0.5;
};

/// Unit-weight power-sum representation of targets a_0..a_{n-1} by N = 2n+1
/// points on the unit circle: S_{j+1}(lambda) = a_j for j < n.
struct Representation {
    int n = 0;
    int N = 0;
    std::vector<Complex> lambdas;  ///< e^{-i theta_k}, ordered by root phase
    CirclePhases roots;            ///< phases theta_k of the roots of P
    CoeffSeq a;                    ///< targets
    double residual_head = 0.0;    ///< max_{j<n} |S_{j+1} - a_j|
    double newton_discrepancy = 0.0;  ///< max_{k<=2n} |S_k(roots) - S_k(Newton)| / (1 + |S_k|)
    int n0_used = 0;
};

/// Tolerance on residual_head for a target vector of size n with max modulus a_max.
double head_tolerance(double a_max, int n);

/// Builds the representation of order n. Throws RepresentTooSmall when the
/// order-n Taylor polynomial of exp(-integral sum a_j z^j) has zeros in the
/// closed disk; root-finding failures propagate.
Representation represent(const CoeffSeq& a, int n);

/// S_nu = sum lambda_k^nu, powers by repeated squaring.
Complex power_sum(std::span<const Complex> lambdas, int nu);

/// S_{j+1}(lambda) - a_j with a_j = 0 past the stored targets.
Complex tail_residual(const Representation& rep, int j);

/// True when |a_j| <= (j+2)^{-2} on every stored coefficient.
bool has_bounded_coefficients(const CoeffSeq& a);

/// r^{n+1} (r - eps)^{-j} / (2 eps (1 - r)), j >= n, 0 < eps < r < 1.
/// Valid for n beyond a non-constructive threshold.
double tail_bound_general(int n, int j, double r, double eps);
inline double tail_bound_general(int n, int j, const BoundParams& p) {
    return tail_bound_general(n, j, p.r, p.eps);
}

/// r^{n-j} / (1 - r^{n+1}) (15 n + 30 / (1 - r)), j >= n, 0 < r < 1.
/// Certified for every n >= 1 when |a_j| <= (j+2)^{-2}.
double tail_bound_bounded(int n, int j, double r);

enum class TailBoundKind { general, bounded };

struct TailBoundOptimum {
    double value = 0.0;
    double r = 0.0;
    double eps = 0.0;  ///< unused (0) for the bounded form
};

/// Minimises the selected tail bound over its free parameters: a coarse grid
/// (r step 0.05; eps at 10 fractions of r) refined by golden-section search.
TailBoundOptimum best_tail_bound(int n, int j, TailBoundKind kind);

}  // namespace circlesum
