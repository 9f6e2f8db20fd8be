#pragma once

#include <functional>
#include <span>
#include <string>
#include <vector>

#include "circlesum/representation.hpp"
#include "circlesum/types.hpp"

namespace circlesum {

/// Generator h(z) = sum h_j z^j analytic in the unit disk with |h_j| <= M.
///
/// Coefficients come from a callable so infinite series (the simple pole
/// 1/(z-1), the exponential) are available at any index.
class HSeries {
public:
    HSeries(std::function<Complex(int)> coeff, double bound, std::string name = "custom");

    /// Finite coefficient list, zeros past the end; bound is validated on the prefix.
    static HSeries from_coeffs(const CoeffSeq& coeffs, double bound);
    /// h(z) = 1/(z - 1): h_j = -1, M = 1.
    static HSeries simple_pole();
    /// h(z) = e^z: h_j = 1/j!, M = 1.
    static HSeries exponential();

    Complex coeff(int j) const { return coeff_(j); }
    double bound() const noexcept { return bound_; }
    const std::string& name() const noexcept { return name_; }

    /// Smallest cut with M |w|^{cut+1} / (1 - |w|) <= 1e-12.
    static int series_cut(double abs_w, double bound);

    struct Value {
        Complex value;
        double truncation_error;  ///< bound on the discarded tail
    };
    /// Truncated evaluation of h(w), |w| < 1.
    Value eval(Complex w) const;

private:
    std::function<Complex(int)> coeff_;
    double bound_;
    std::string name_;
};

// ---- simple partial fractions --------------------------------------------

/// sum_k 1/(z - e^{i theta_k}); equals P'(z)/P(z) for the polynomial with those roots.
Complex spf_eval(const CirclePhases& phases, Complex z);

/// (a + eps)^{n+1} / (2 eps (1 - a - eps)): sup bound on |z| <= a, valid for n
/// beyond a non-constructive threshold.
double spf_bound_disk(int n, double a_radius, double eps);
inline double spf_bound_disk(int n, const BoundParams& p) { return spf_bound_disk(n, p.a_radius, p.eps); }

/// 15 |z|^n / (1 - |z|^{n+1}) (n + 2 / (1 - |z|)): pointwise bound for every
/// n >= 1 when |f_j| <= (j+2)^{-2}.
double spf_bound_bounded(int n, double abs_z);

/// Number of leading Taylor coefficients of P'/P - f below 1e-8 in modulus.
/// Requires the order-n Taylor polynomial to be zero-free in the closed disk.
int spf_interpolation_order(const CoeffSeq& f, int n);

inline constexpr double order_tolerance = 1e-8;

/// Empirical threshold: smallest n <= n_max whose measured sup of |P'/P - f|
/// on |z| = a_radius (720 angles) is within spf_bound_disk. Advisory only.
int estimate_n1(const CoeffSeq& f, const BoundParams& p, int n_max);

/// Sup of |P'/P - f| over `angles` equispaced points on |z| = radius.
double spf_sup_error(const CoeffSeq& f, const CirclePhases& phases, double radius, int angles = 720);

// ---- exponential sums ------------------------------------------------------

/// sum_k lambda_k exp(lambda_k z).
Complex exp_sum_eval(std::span<const Complex> lambdas, Complex z);

/// (|z|^n/n!) (15/(1-r^{n+1})) (n + 2/(1-r)) (1 + |z| e^{|z|/r} / (r n + r)).
double exp_sum_bound(int n, Complex z, double r);

/// f(z) = sum p_j z^j / j! for a finite coefficient list.
Complex exp_generating_eval(const CoeffSeq& p, Complex z);

// ---- h-sums ----------------------------------------------------------------

/// Representation with targets f_j / h_j (j < f.size()).
Representation h_sum_build(const CoeffSeq& f, const HSeries& h, int n);

/// Representation for first-kind sums: targets a_{j-1} = f_j / h_j, j >= 1.
/// f_0 is ignored (it must vanish for the approximation to make sense).
Representation h1_sum_build(const CoeffSeq& f, const HSeries& h, int n);

/// sum_k lambda_k h(lambda_k z), |z| < 1.
HSeries::Value h_sum_eval(const HSeries& h, std::span<const Complex> lambdas, Complex z);

/// sum_k h(lambda_k z), |z| < 1, h_0 = 0.
HSeries::Value h1_sum_eval(const HSeries& h, std::span<const Complex> lambdas, Complex z);

/// |z|^n (5-|z|)^{n+1} / 4^{n-1} (2M/3) (3+|z|) / (1-|z|)^4.
double h_sum_bound(int n, double abs_z, double bound_m);

/// M / (r - eps - |z|) r^{n+1} / (1 - r) |z|^n / (2 eps (r - eps)^{n-1}), |z| < r - eps.
double h_sum_bound_raw(int n, double abs_z, double bound_m, double r, double eps);

/// (5|z| - |z|^2)^{n+1} / 4^{n-1} (2M/3) (3+|z|) / (1-|z|)^4.
double h1_sum_bound(int n, double abs_z, double bound_m);

}  // namespace circlesum
