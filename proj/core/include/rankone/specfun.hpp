#pragma once

#include "rankone/common.hpp"

namespace rankone {

/// Value plus a cheap error heuristic (last-increment or grid-refinement
/// based; not a rigorous bound).
struct SpecFunResult {
  double value = 0.0;
  double est_error = 0.0;
};

/// Gamma function for real x.  Lanczos approximation with reflection for
/// x < 1/2; throws PoleError at nonpositive integers.
double gamma_fn(double x);
SpecFunResult gamma_fn_r(double x);

/// log |Gamma(x)| for real x (poles still throw).
double lgamma_fn(double x);

/// Modified Bessel K_nu(x), x > 0.  Series/reflection path for small x,
/// cosh-integral path for large x; integer nu handled by the eps-limit of
/// the reflection formula, Richardson-extrapolated.
double bessel_k(double nu, double x);
SpecFunResult bessel_k_r(double nu, double x);

/// Modified Bessel I_nu(x), x >= 0, by its power series.
double bessel_i(double nu, double x);
SpecFunResult bessel_i_r(double nu, double x);

/// Bessel J_nu(x), x >= 0.  Power series for small x, Schlaefli integral
/// representation for large x.
double bessel_j(double nu, double x);
SpecFunResult bessel_j_r(double nu, double x);

/// Legendre function P^mu_nu(x) on the cut x >= 1, mu < 1/2, evaluated by
/// the Hobson integral representation
///   P^mu_nu(cosh t) = 2^mu (sinh t)^-mu / (sqrt(pi) Gamma(1/2-mu))
///                     * int_0^pi (cosh t + sinh t cos a)^(mu+nu) (sin a)^(-2mu) da
/// via Gauss-Jacobi in cos a, which absorbs the singular weight exactly.
double legendre_p(double mu, double nu, double x);
SpecFunResult legendre_p_r(double mu, double nu, double x);

/// Gauss hypergeometric F(a,b;c;x) for |x| < 1 by power series, with the
/// Euler transformation applied when it improves term decay.
double gauss_2f1(double a, double b, double c, double x);
SpecFunResult gauss_2f1_r(double a, double b, double c, double x);

namespace detail {

/// Gamma for complex argument (Lanczos; reflection for Re z < 1/2).
/// Used by the Mellin-multiplier form of the involution operator.
cplx gamma_cplx(cplx z);

/// Ratio Gamma(zn)/Gamma(zd) computed in log space; tolerates large |z|.
cplx gamma_ratio_cplx(cplx zn, cplx zd);

}  // namespace detail

}  // namespace rankone
