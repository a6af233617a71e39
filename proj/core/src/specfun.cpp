#include "rankone/specfun.hpp"

#include <cmath>
#include <limits>

#include "rankone/quad1d.hpp"

namespace rankone {

namespace {

// Lanczos, g = 7, 9 terms.
constexpr double kLanczosG = 7.0;
constexpr double kLanczos[9] = {
    0.99999999999980993,      676.5203681218851,     -1259.1392167224028,
    771.32342877765313,       -176.61502916214059,   12.507343278686905,
    -0.13857109526572012,     9.9843695780195716e-6, 1.5056327351493116e-7};

bool near_integer(double x, double tol = 1e-12) {
  return std::abs(x - std::round(x)) < tol;
}

// sin(pi x) with exact integer reduction; keeps full relative accuracy near
// integer x, where the plain std::sin(pi*x) call loses digits.
double sinpi(double x) {
  const double n = std::round(x);
  const double r = x - n;  // exact in fp
  const double s = std::sin(pi * r);
  return (std::fmod(std::abs(n), 2.0) == 1.0) ? -s : s;
}

template <typename T>
T lanczos_sum(T z) {
  T acc = T(kLanczos[0]);
  for (int i = 1; i < 9; ++i) acc += T(kLanczos[i]) / (z + T(i));
  return acc;
}

double gamma_positive(double x) {
  // x >= 0.5; switches to exp(log Gamma) where the direct product overflows.
  const double z = x - 1.0;
  const double t = z + kLanczosG + 0.5;
  const double s = lanczos_sum(z);
  if (x < 140.0)
    return std::sqrt(2.0 * pi) * std::pow(t, z + 0.5) * std::exp(-t) * s;
  const double lg =
      0.5 * std::log(2.0 * pi) + (z + 0.5) * std::log(t) - t + std::log(s);
  return std::exp(lg);
}

}  // namespace

double gamma_fn(double x) {
  if (x <= 0.0 && near_integer(x))
    throw PoleError("gamma: pole at nonpositive integer");
  if (x >= 0.5) return gamma_positive(x);
  // Reflection: Gamma(x) Gamma(1-x) = pi / sin(pi x).
  return pi / (sinpi(x) * gamma_positive(1.0 - x));
}

SpecFunResult gamma_fn_r(double x) {
  const double v = gamma_fn(x);
  return {v, std::abs(v) * 2e-14 * std::max(1.0, std::abs(x) / 10.0)};
}

double lgamma_fn(double x) {
  if (x <= 0.0 && near_integer(x))
    throw PoleError("lgamma: pole at nonpositive integer");
  if (x >= 0.5) {
    const double z = x - 1.0;
    const double t = z + kLanczosG + 0.5;
    return 0.5 * std::log(2.0 * pi) + (z + 0.5) * std::log(t) - t +
           std::log(lanczos_sum(z));
  }
  return std::log(pi) - std::log(std::abs(sinpi(x))) - lgamma_fn(1.0 - x);
}

// ---------------------------------------------------------------------------
// Modified Bessel I by its power series.

namespace {

double bessel_i_series(double nu, double x, double* last_rel = nullptr) {
  if (x == 0.0) {
    if (nu == 0.0) return 1.0;
    if (nu > 0.0) return 0.0;
    return std::numeric_limits<double>::infinity();
  }
  const double q = 0.25 * x * x;
  double term = std::exp(nu * std::log(0.5 * x)) / gamma_fn(nu + 1.0);
  double sum = term;
  for (int m = 0; m < 600; ++m) {
    term *= q / ((m + 1.0) * (m + nu + 1.0));
    sum += term;
    if (std::abs(term) < 1e-17 * std::abs(sum)) break;
  }
  if (last_rel) *last_rel = std::abs(term) / std::max(1e-300, std::abs(sum));
  return sum;
}

}  // namespace

double bessel_i(double nu, double x) {
  if (x < 0.0) throw DomainError("bessel_i: x must be >= 0");
  if (nu < 0.0 && near_integer(nu)) nu = -nu;  // I_{-n} = I_n
  return bessel_i_series(nu, x);
}

SpecFunResult bessel_i_r(double nu, double x) {
  if (x < 0.0) throw DomainError("bessel_i: x must be >= 0");
  if (nu < 0.0 && near_integer(nu)) nu = -nu;
  double rel = 0.0;
  const double v = bessel_i_series(nu, x, &rel);
  return {v, std::abs(v) * std::max(rel, 1e-15)};
}

// ---------------------------------------------------------------------------
// Modified Bessel K.

namespace {

// Reflection formula K_nu = pi/(2 sin pi nu) (I_{-nu} - I_nu); nu away from
// integers, small x.
double bessel_k_reflect(double nu, double x) {
  return 0.5 * pi / std::sin(pi * nu) *
         (bessel_i_series(-nu, x) - bessel_i_series(nu, x));
}

// K_nu(x) = int_0^inf exp(-x cosh t) cosh(nu t) dt.  The integrand is even
// and double-exponentially flat at the right end, so the plain trapezoid
// converges geometrically.
double bessel_k_integral(double nu, double x, int n_steps) {
  double T = 5.0;
  for (int it = 0; it < 4; ++it)
    T = std::acosh((x + 50.0 + std::abs(nu) * T) / x);
  const double h = T / n_steps;
  double acc = 0.5 * std::exp(-x);  // t = 0 term, cosh(0) = 1
  for (int i = 1; i <= n_steps; ++i) {
    const double t = i * h;
    acc += std::exp(-x * std::cosh(t)) * std::cosh(nu * t);
  }
  return acc * h;
}

double bessel_k_impl(double nu, double x, double* est = nullptr) {
  if (x <= 0.0) throw DomainError("bessel_k: x must be > 0");
  nu = std::abs(nu);  // K is even in the order
  if (x > 2.0) {
    const double v = bessel_k_integral(nu, x, 320);
    if (est) *est = std::abs(v - bessel_k_integral(nu, x, 160));
    return v;
  }
  const double m = std::round(nu);
  const double dist = std::abs(nu - m);
  if (dist > 5e-5) {
    const double v = bessel_k_reflect(nu, x);
    if (est) *est = std::abs(v) * 1e-13 / std::max(dist, 1e-4);
    return v;
  }
  // Near-integer order: symmetric eps-limit of the reflection formula,
  // Richardson-extrapolated in eps^2.  (eps below 1e-4 loses digits to the
  // sin(pi eps) cancellation, so the two-level extrapolation is used
  // instead of a smaller eps.)
  auto sym = [&](double eps) {
    return 0.5 * (bessel_k_reflect(nu + eps, x) + bessel_k_reflect(nu - eps, x));
  };
  const double a1 = sym(2e-4), a2 = sym(1e-4);
  const double v = (4.0 * a2 - a1) / 3.0;
  if (est) *est = std::abs(a2 - a1) / 3.0 + std::abs(v) * 1e-12;
  return v;
}

}  // namespace

double bessel_k(double nu, double x) { return bessel_k_impl(nu, x); }

SpecFunResult bessel_k_r(double nu, double x) {
  double est = 0.0;
  const double v = bessel_k_impl(nu, x, &est);
  return {v, est};
}

// ---------------------------------------------------------------------------
// Bessel J.

namespace {

double bessel_j_series(double nu, double x) {
  if (x == 0.0) {
    if (nu == 0.0) return 1.0;
    if (nu > 0.0) return 0.0;
    throw DomainError("bessel_j: negative order at x = 0");
  }
  const double q = 0.25 * x * x;
  double term = std::exp(nu * std::log(0.5 * x)) / gamma_fn(nu + 1.0);
  double sum = term;
  for (int m = 0; m < 400; ++m) {
    term *= -q / ((m + 1.0) * (m + nu + 1.0));
    sum += term;
    if (std::abs(term) < 1e-17 * std::abs(sum) && m > 4) break;
  }
  return sum;
}

// Schlaefli: J_nu(x) = 1/pi int_0^pi cos(nu a - x sin a) da
//                      - sin(nu pi)/pi int_0^inf e^{-nu t - x sinh t} dt.
double bessel_j_integral(double nu, double x) {
  const double osc =
      gauss_legendre(320, 0.0, pi).integrate([&](double a) {
        return std::cos(nu * a - x * std::sin(a));
      }) / pi;
  if (near_integer(nu)) return osc;
  double T = 1.0;
  for (int it = 0; it < 30; ++it) {
    if (nu * T + x * std::sinh(T) > 745.0) break;
    T += 0.5;
  }
  const double tail =
      std::sin(nu * pi) / pi *
      gauss_legendre(240, 0.0, T).integrate([&](double t) {
        const double e = -nu * t - x * std::sinh(t);
        return (e < -745.0) ? 0.0 : std::exp(e);
      });
  return osc - tail;
}

}  // namespace

double bessel_j(double nu, double x) {
  if (x < 0.0) throw DomainError("bessel_j: x must be >= 0");
  if (nu < 0.0 && near_integer(nu)) {
    const int n = static_cast<int>(std::llround(-nu));
    const double s = (n % 2 == 0) ? 1.0 : -1.0;
    return s * bessel_j(-nu, x);
  }
  return (x <= 12.0) ? bessel_j_series(nu, x) : bessel_j_integral(nu, x);
}

SpecFunResult bessel_j_r(double nu, double x) {
  const double v = bessel_j(nu, x);
  // Series loses ~max-term/|J| digits; integral path is near machine.
  const double est = (x <= 12.0)
                         ? std::max(1e-15, std::exp(x) * 1e-17)
                         : 1e-13 * std::max(1.0, std::abs(v));
  return {v, est * std::max(1.0, std::abs(v))};
}

// ---------------------------------------------------------------------------
// Legendre P^mu_nu on [1, inf).

namespace {

double legendre_p_impl(double mu, double nu, double x, int order) {
  if (x < 1.0) throw DomainError("legendre_p: x must be >= 1");
  if (mu >= 0.5) throw DomainError("legendre_p: requires mu < 1/2");
  if (x == 1.0) {
    if (mu == 0.0) return 1.0;
    if (mu < 0.0) return 0.0;
    throw PoleError("legendre_p: diverges at x = 1 for mu > 0");
  }
  const double tau = std::acosh(x);
  const double ch = x, sh = std::sinh(tau);
  // Hobson integral with c = cos(a): the (sin a)^(-2mu) weight and the da
  // Jacobian combine to the Jacobi weight (1-c^2)^(-mu-1/2), absorbed
  // exactly by the rule; the remaining factor is smooth on [-1,1].
  const double integral =
      gauss_jacobi(order, -mu - 0.5, -mu - 0.5).integrate([&](double c) {
        return std::pow(ch + sh * c, mu + nu);
      });
  return std::pow(2.0, mu) * std::pow(sh, -mu) /
         (std::sqrt(pi) * gamma_fn(0.5 - mu)) * integral;
}

}  // namespace

double legendre_p(double mu, double nu, double x) {
  return legendre_p_impl(mu, nu, x, 160);
}

SpecFunResult legendre_p_r(double mu, double nu, double x) {
  const double v = legendre_p_impl(mu, nu, x, 160);
  const double v2 = legendre_p_impl(mu, nu, x, 96);
  return {v, std::abs(v - v2) + std::abs(v) * 1e-14};
}

// ---------------------------------------------------------------------------
// Gauss hypergeometric.

namespace {

double gauss_2f1_series(double a, double b, double c, double x,
                        double* last_rel = nullptr) {
  double term = 1.0, sum = 1.0;
  for (int k = 0; k < 40000; ++k) {
    term *= (a + k) * (b + k) / ((c + k) * (k + 1.0)) * x;
    sum += term;
    if (term == 0.0) break;  // polynomial case terminated
    if (std::abs(term) < 1e-17 * std::abs(sum) && k > 3) break;
  }
  if (last_rel) *last_rel = std::abs(term) / std::max(1e-300, std::abs(sum));
  return sum;
}

}  // namespace

double gauss_2f1(double a, double b, double c, double x) {
  return gauss_2f1_r(a, b, c, x).value;
}

SpecFunResult gauss_2f1_r(double a, double b, double c, double x) {
  if (c <= 0.0 && near_integer(c))
    throw PoleError("gauss_2f1: c at a nonpositive integer");
  if (std::abs(x) >= 1.0)
    throw DomainError("gauss_2f1: requires |x| < 1");
  double rel = 0.0, v;
  if (a + b - c > 0.0) {
    // Euler transformation improves term decay when a+b-c > 0.
    v = std::pow(1.0 - x, c - a - b) *
        gauss_2f1_series(c - a, c - b, c, x, &rel);
  } else {
    v = gauss_2f1_series(a, b, c, x, &rel);
  }
  return {v, std::abs(v) * std::max(rel * 10.0, 1e-15)};
}

// ---------------------------------------------------------------------------
// Complex Gamma (Mellin multiplier support).

namespace detail {

namespace {

cplx sinpi_cplx(cplx z) {
  const double n = std::round(z.real());
  const cplx s = std::sin(pi * (z - n));
  return (std::fmod(std::abs(n), 2.0) == 1.0) ? -s : s;
}

cplx lgamma_cplx(cplx z) {
  if (z.real() < 0.5) {
    const cplx s = sinpi_cplx(z);
    if (std::abs(s) == 0.0) throw PoleError("gamma_cplx: pole");
    return std::log(pi) - std::log(s) - lgamma_cplx(1.0 - z);
  }
  const cplx zz = z - 1.0;
  const cplx t = zz + kLanczosG + 0.5;
  return 0.5 * std::log(2.0 * pi) + (zz + 0.5) * std::log(t) - t +
         std::log(lanczos_sum(zz));
}

}  // namespace

cplx gamma_cplx(cplx z) {
  if (z.real() < 0.5) {
    const cplx s = sinpi_cplx(z);
    if (std::abs(s) == 0.0) throw PoleError("gamma_cplx: pole");
    return pi / (s * gamma_cplx(1.0 - z));
  }
  const cplx zz = z - 1.0;
  const cplx t = zz + kLanczosG + 0.5;
  return std::sqrt(2.0 * pi) * std::pow(t, zz + 0.5) * std::exp(-t) *
         lanczos_sum(zz);
}

cplx gamma_ratio_cplx(cplx zn, cplx zd) {
  return std::exp(lgamma_cplx(zn) - lgamma_cplx(zd));
}

}  // namespace detail

}  // namespace rankone
