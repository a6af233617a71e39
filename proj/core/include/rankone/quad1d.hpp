#pragma once

#include <functional>
#include <vector>

#include "rankone/common.hpp"

namespace rankone {

/// One-dimensional quadrature rule: sum_i w[i] f(x[i]).
struct Rule1D {
  std::vector<double> x;
  std::vector<double> w;

  std::size_t size() const { return x.size(); }

  template <typename F>
  auto integrate(F&& f) const {
    using R = decltype(f(0.0));
    R acc{};
    for (std::size_t i = 0; i < x.size(); ++i) acc += w[i] * f(x[i]);
    return acc;
  }

  /// Affine image of the rule on [a,b] (rule must live on [-1,1]).
  Rule1D mapped_to(double a, double b) const;
};

/// Gauss-Legendre on [-1,1].
Rule1D gauss_legendre(int order);

/// Gauss-Legendre mapped to [a,b].
Rule1D gauss_legendre(int order, double a, double b);

/// Gauss-Jacobi on [-1,1] with weight (1-x)^alpha (1+x)^beta, alpha,beta > -1.
Rule1D gauss_jacobi(int order, double alpha, double beta);

/// Gauss-Jacobi transplanted to [0,1] with weight x^a (1-x)^b.
Rule1D gauss_jacobi01(int order, double a, double b);

/// Generalized Gauss-Laguerre on (0,inf) with weight x^alpha e^-x, alpha > -1.
/// If deweighted, the weight function is folded into w so the rule integrates
/// plain f (including the x^alpha e^-x factor) -- usable only when f itself
/// carries comparable decay.
Rule1D gauss_laguerre(int order, double alpha, bool deweighted = false);

/// Uniform periodic (trapezoidal) rule on [0, 2*pi).
Rule1D periodic_trapezoid(int points);

/// tanh-sinh (double exponential) rule on (a,b); tolerates integrable
/// endpoint singularities.  level ~ 8..12.
Rule1D tanh_sinh(double a, double b, int level = 10);

/// Adaptive-ish integral of f over [a,b]: nested Gauss-Legendre refinement
/// until the change is below tol (relative to the running value).
double integrate_gl_refined(const std::function<double(double)>& f, double a,
                            double b, double tol, int initial_order = 32,
                            double* est_err = nullptr);

/// Integral over [0, inf) of an oscillatory integrand whose sign pattern is
/// set by an oscillator with known approximate zeros: integrates between
/// consecutive breakpoints and accelerates the partial-sum sequence with
/// iterated Aitken extrapolation.  Breakpoints must be increasing, starting
/// at 0.
double integrate_oscillatory(const std::function<double(double)>& f,
                             const std::vector<double>& breakpoints,
                             int per_interval_order = 24,
                             double* est_err = nullptr);

}  // namespace rankone
