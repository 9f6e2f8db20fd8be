#pragma once

// Verification engines that stay independent of the code paths they check:
// nothing here calls the circle root finder or the Taylor recurrence.

#include <span>
#include <vector>

#include "circlesum/types.hpp"

namespace circlesum::oracle {

/// Elementary symmetric values e_0 = 1, e_1..e_N of a point multiset.
std::vector<Complex> elementary_symmetric(std::span<const Complex> points);

/// S_1..S_m from elementary symmetric values via the Newton identities
/// S_k = e_1 S_{k-1} - e_2 S_{k-2} + ... + (-1)^{k-1} k e_k  (e_j = 0 for j > N).
std::vector<Complex> power_sums_from_elementary(std::span<const Complex> e, int m);

/// Power sums S_1..S_m of the reciprocals of the roots of P, read off its
/// coefficients (the reversed P is the monic polynomial with those roots).
std::vector<Complex> newton_power_sums(const CPolynomial& p, int m);

/// Taylor coefficients 0..n of exp(F), F the termwise antiderivative of f,
/// by summing F^m/m! with compensated accumulation. Limited to n <= 64.
CoeffSeq brute_exp_series(const CoeffSeq& f, int n);

inline constexpr int brute_exp_series_max_order = 64;

/// Checks |g_1| <= 2^{-1-sigma} and |g_k| < (k+1)^{-1-sigma}, k = 2..n, for the
/// Taylor coefficients g of exp(integral f). Rejects inputs that violate
/// |f_k| <= (k+2)^{-1-sigma} for k <= n.
bool coefficient_bound_check(const CoeffSeq& f, double sigma, int n);

/// sum_{k=1}^n 1/k^2.
double zeta2_partial(long n);

}  // namespace circlesum::oracle
