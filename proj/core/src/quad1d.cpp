#include "rankone/quad1d.hpp"

#include <Eigen/Dense>
#include <cmath>

namespace rankone {

namespace {

// Nodes/weights from the symmetric tridiagonal Jacobi matrix of a
// three-term recurrence (Golub-Welsch).  a[i], b[i] are the recurrence
// coefficients p_{i+1} = (x - a[i]) p_i - b[i] p_{i-1}, mu0 the weight mass.
Rule1D golub_welsch(const std::vector<double>& a, const std::vector<double>& b,
                    double mu0) {
  const int n = static_cast<int>(a.size());
  Eigen::MatrixXd J = Eigen::MatrixXd::Zero(n, n);
  for (int i = 0; i < n; ++i) {
    J(i, i) = a[i];
    if (i + 1 < n) {
      const double off = std::sqrt(b[i + 1]);
      J(i, i + 1) = off;
      J(i + 1, i) = off;
    }
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(J);
  Rule1D r;
  r.x.resize(n);
  r.w.resize(n);
  for (int i = 0; i < n; ++i) {
    r.x[i] = es.eigenvalues()(i);
    const double v0 = es.eigenvectors()(0, i);
    r.w[i] = mu0 * v0 * v0;
  }
  return r;
}

double lbeta(double p, double q) {
  return std::lgamma(p) + std::lgamma(q) - std::lgamma(p + q);
}

}  // namespace

Rule1D Rule1D::mapped_to(double a, double b) const {
  Rule1D r;
  r.x.resize(x.size());
  r.w.resize(w.size());
  const double mid = 0.5 * (a + b), half = 0.5 * (b - a);
  for (std::size_t i = 0; i < x.size(); ++i) {
    r.x[i] = mid + half * x[i];
    r.w[i] = half * w[i];
  }
  return r;
}

Rule1D gauss_legendre(int order) { return gauss_jacobi(order, 0.0, 0.0); }

Rule1D gauss_legendre(int order, double a, double b) {
  return gauss_legendre(order).mapped_to(a, b);
}

Rule1D gauss_jacobi(int order, double alpha, double beta) {
  if (order < 1) throw StructuralError("quadrature order must be >= 1");
  if (alpha <= -1.0 || beta <= -1.0)
    throw DomainError("Gauss-Jacobi exponents must be > -1");
  std::vector<double> a(order), b(order);
  const double ab = alpha + beta;
  for (int i = 0; i < order; ++i) {
    const double den = (2.0 * i + ab) * (2.0 * i + ab + 2.0);
    a[i] = (den == 0.0) ? 0.0 : (beta * beta - alpha * alpha) / den;
    if (i == 0) {
      b[i] = 0.0;
    } else if (i == 1) {
      b[i] = 4.0 * (1.0 + alpha) * (1.0 + beta) /
             ((ab + 2.0) * (ab + 2.0) * (ab + 3.0));
    } else {
      b[i] = 4.0 * i * (i + alpha) * (i + beta) * (i + ab) /
             ((2.0 * i + ab) * (2.0 * i + ab) * (2.0 * i + ab + 1.0) *
              (2.0 * i + ab - 1.0));
    }
  }
  const double mu0 = std::exp((ab + 1.0) * std::log(2.0) + lbeta(alpha + 1.0, beta + 1.0));
  return golub_welsch(a, b, mu0);
}

Rule1D gauss_jacobi01(int order, double a, double b) {
  // x = (1+t)/2 sends weight (1-t)^b (1+t)^a on [-1,1] to 2^(a+b+1) x^a (1-x)^b.
  Rule1D t = gauss_jacobi(order, b, a);
  Rule1D r;
  r.x.resize(t.size());
  r.w.resize(t.size());
  const double scale = std::pow(2.0, -(a + b + 1.0));
  for (std::size_t i = 0; i < t.size(); ++i) {
    r.x[i] = 0.5 * (1.0 + t.x[i]);
    r.w[i] = scale * t.w[i];
  }
  return r;
}

Rule1D gauss_laguerre(int order, double alpha, bool deweighted) {
  if (order < 1) throw StructuralError("quadrature order must be >= 1");
  if (alpha <= -1.0) throw DomainError("Gauss-Laguerre exponent must be > -1");
  std::vector<double> a(order), b(order);
  for (int i = 0; i < order; ++i) {
    a[i] = 2.0 * i + alpha + 1.0;
    b[i] = (i == 0) ? 0.0 : i * (i + alpha);
  }
  Rule1D r = golub_welsch(a, b, std::tgamma(alpha + 1.0));
  if (deweighted)
    for (std::size_t i = 0; i < r.size(); ++i)
      r.w[i] *= std::exp(r.x[i] - alpha * std::log(r.x[i]));
  return r;
}

Rule1D periodic_trapezoid(int points) {
  if (points < 1) throw StructuralError("quadrature order must be >= 1");
  Rule1D r;
  r.x.resize(points);
  r.w.resize(points);
  const double h = 2.0 * pi / points;
  for (int i = 0; i < points; ++i) {
    r.x[i] = i * h;
    r.w[i] = h;
  }
  return r;
}

Rule1D tanh_sinh(double a, double b, int level) {
  // x = mid + half*tanh(pi/2 sinh t); truncate where the Jacobian underflows.
  Rule1D r;
  const double mid = 0.5 * (a + b), half = 0.5 * (b - a);
  const double h = (level > 3) ? std::ldexp(1.0, 3 - level) : 1.0;
  const double tmax = 6.1;
  for (double t = -tmax; t <= tmax; t += h) {
    const double st = 0.5 * pi * std::sinh(t);
    const double x = std::tanh(st);
    const double jac = 0.5 * pi * std::cosh(t) / (std::cosh(st) * std::cosh(st));
    if (jac < 1e-300) continue;
    const double node = mid + half * x;
    if (node <= a || node >= b) continue;  // fell onto an endpoint in fp
    r.x.push_back(node);
    r.w.push_back(half * h * jac);
  }
  return r;
}

double integrate_gl_refined(const std::function<double(double)>& f, double a,
                            double b, double tol, int initial_order,
                            double* est_err) {
  double prev = gauss_legendre(initial_order, a, b).integrate(f);
  for (int order = 2 * initial_order; order <= 4096; order *= 2) {
    const double cur = gauss_legendre(order, a, b).integrate(f);
    const double diff = std::abs(cur - prev);
    if (diff <= tol * std::max(1.0, std::abs(cur))) {
      if (est_err) *est_err = diff;
      return cur;
    }
    prev = cur;
  }
  if (est_err) *est_err = std::abs(prev) * 1e-6;
  return prev;
}

double integrate_oscillatory(const std::function<double(double)>& f,
                             const std::vector<double>& breakpoints,
                             int per_interval_order, double* est_err) {
  if (breakpoints.size() < 4)
    throw StructuralError("integrate_oscillatory needs >= 4 breakpoints");
  const Rule1D base = gauss_legendre(per_interval_order);
  std::vector<double> partial;
  double acc = 0.0;
  for (std::size_t i = 0; i + 1 < breakpoints.size(); ++i) {
    acc += base.mapped_to(breakpoints[i], breakpoints[i + 1]).integrate(f);
    partial.push_back(acc);
  }
  // Iterated Aitken delta^2 on the tail of the partial-sum sequence.
  std::vector<double> s(partial.end() - std::min<std::size_t>(partial.size(), 24),
                        partial.end());
  while (s.size() >= 3) {
    std::vector<double> t;
    for (std::size_t i = 0; i + 2 < s.size(); ++i) {
      const double d1 = s[i + 1] - s[i], d2 = s[i + 2] - s[i + 1];
      const double den = d2 - d1;
      t.push_back(std::abs(den) < 1e-300 ? s[i + 2]
                                         : s[i + 2] - d2 * d2 / den);
    }
    if (t.size() >= 2 && std::abs(t.back() - t[t.size() - 2]) >
                             std::abs(s.back() - s[s.size() - 2]))
      break;  // acceleration stopped helping
    s = std::move(t);
    if (s.size() <= 2) break;
  }
  if (est_err)
    *est_err = (s.size() >= 2) ? std::abs(s.back() - s[s.size() - 2]) : 0.0;
  return s.back();
}

}  // namespace rankone
