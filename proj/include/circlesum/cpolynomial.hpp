#pragma once

#include "circlesum/types.hpp"

namespace circlesum {

namespace tolerance {
/// Root residual bound relative to max |coeff|.
inline constexpr double root_residual_rel = 1e-10;
/// Minimum accepted gap between neighbouring phases (radians).
inline constexpr double separation = 1e-6;
/// Boundary modulus band in which the closed-disk zero test is indeterminate.
inline constexpr double boundary = 1e-8;
/// Initial and final sign-change grid densities, in points per root.
inline constexpr int grid_factor_initial = 32;
inline constexpr int grid_factor_max = 1024;
}  // namespace tolerance

/// P(z) = s(z) + z^N conj(s)(1/z), N = 2n+1.
CPolynomial build_p(const TaylorPolynomial& s);

/// True iff s has no zeros in |z| <= 1.
///
/// Decided by the argument principle on |z| = 1 with adaptive subdivision. A
/// zero that sits on the circle to working precision gives false; a boundary
/// minimum inside the tolerance band raises BorderlineError.
bool disk_zero_free(const TaylorPolynomial& s);

/// Smallest n in [1, n_max] for which the order-n Taylor polynomial of
/// exp(integral f) is zero-free in the closed disk. Throws NotFoundError.
int n0(const CoeffSeq& f, int n_max);

/// Re(e^{-i N theta / 2} P(e^{i theta})); real-valued on the circle for a
/// self-inversive P, antiperiodic with period 2pi since N is odd.
double q_real(const CPolynomial& p, double theta);

/// All N roots of P on the unit circle, located by sign changes of q_real and
/// bracketed refinement. Throws RootCountError when the grid escalation cannot
/// isolate exactly N roots, NumericalError on residual or separation failure.
CirclePhases roots_on_circle(const CPolynomial& p);

}  // namespace circlesum
