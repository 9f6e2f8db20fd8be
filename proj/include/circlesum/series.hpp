#pragma once

#include <span>

#include "circlesum/types.hpp"

namespace circlesum {

/// Coefficients g_0..g_n of exp(integral_0^z f), from k g_k = sum_{j<k} f_j g_{k-1-j}.
/// Coefficients of f beyond its length are taken as zero.
TaylorPolynomial exp_antiderivative_taylor(const CoeffSeq& f, int n);

/// Horner evaluation of sum p_k z^k.
Complex eval_poly(std::span<const Complex> p, Complex z) noexcept;

/// Value of the derivative polynomial at z.
Complex eval_deriv(std::span<const Complex> p, Complex z) noexcept;

inline Complex eval_poly(const CoeffSeq& p, Complex z) noexcept { return eval_poly(p.span(), z); }
inline Complex eval_deriv(const CoeffSeq& p, Complex z) noexcept { return eval_deriv(p.span(), z); }

}  // namespace circlesum
