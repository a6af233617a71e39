#include "rankone/grids.hpp"

#include <cmath>

namespace rankone {

namespace {

GridAxis axis_from_rule(const Rule1D& r) {
  GridAxis a;
  a.nodes = r.x;
  a.weights = r.w;
  // Barycentric weights, rescaled to avoid over/underflow.
  const std::size_t m = a.nodes.size();
  a.bary.assign(m, 1.0);
  if (m > 1) {
    double span = 0.0;
    for (double x : a.nodes) span = std::max(span, std::abs(x - a.nodes[0]));
    const double c = 4.0 / std::max(span, 1e-300);
    for (std::size_t i = 0; i < m; ++i) {
      double b = 1.0;
      for (std::size_t j = 0; j < m; ++j)
        if (j != i) b *= (a.nodes[i] - a.nodes[j]) * c;
      a.bary[i] = 1.0 / b;
    }
  }
  return a;
}

GridAxis axis_periodic(int points) {
  GridAxis a;
  const Rule1D r = periodic_trapezoid(points);
  a.nodes = r.x;
  a.weights = r.w;
  a.periodic = true;
  return a;
}

// Row-major tensor iteration over the axes.
template <typename F>
void for_each_tensor_index(const std::vector<GridAxis>& axes, F&& fn) {
  std::vector<std::size_t> idx(axes.size(), 0);
  while (true) {
    fn(idx);
    int k = static_cast<int>(axes.size()) - 1;
    while (k >= 0) {
      if (++idx[k] < axes[k].nodes.size()) break;
      idx[k] = 0;
      --k;
    }
    if (k < 0) break;
  }
}

std::size_t tensor_size(const std::vector<GridAxis>& axes) {
  std::size_t s = 1;
  for (const auto& a : axes) s *= a.nodes.size();
  return s;
}

// Assemble a grid given axes, the param -> point map and a per-node extra
// measure factor (on top of the product of axis weights).
GridPtr assemble(Domain domain, int n, std::vector<GridAxis> axes, int point_dim,
                 const std::function<void(const std::vector<double>&, Eigen::Ref<Eigen::VectorXd>)>& to_point,
                 const std::function<double(const std::vector<double>&)>& extra_factor,
                 std::function<std::vector<double>(const Eigen::VectorXd&)> to_params) {
  auto g = std::make_shared<Grid>();
  g->domain = domain;
  g->n = n;
  g->axes = std::move(axes);
  const std::size_t total = tensor_size(g->axes);
  g->pts.resize(total, point_dim);
  g->w.resize(total);
  std::vector<double> par(g->axes.size());
  std::size_t row = 0;
  Eigen::VectorXd pt(point_dim);
  for_each_tensor_index(g->axes, [&](const std::vector<std::size_t>& idx) {
    double wt = 1.0;
    for (std::size_t k = 0; k < idx.size(); ++k) {
      par[k] = g->axes[k].nodes[idx[k]];
      wt *= g->axes[k].weights[idx[k]];
    }
    to_point(par, pt);
    g->pts.row(row) = pt;
    g->w(row) = wt * extra_factor(par);
    ++row;
  });
  g->to_params = std::move(to_params);
  return g;
}

double one(const std::vector<double>&) { return 1.0; }

// Mapped Gauss-Legendre axis on R: x = L t / (1 - t^2).  The axis keeps the
// GL parameter t for interpolation (barycentric in x-space would see wildly
// nonuniform nodes); the weights carry the full dx measure.
GridAxis axis_mapped_real_line(int order, double L) {
  Rule1D gl = gauss_legendre(order);
  GridAxis a = axis_from_rule(gl);
  for (std::size_t i = 0; i < gl.size(); ++i) {
    const double t = gl.x[i], d = 1.0 - t * t;
    a.weights[i] = gl.w[i] * L * (1.0 + t * t) / (d * d);
  }
  return a;
}

double line_map(double t, double L) { return L * t / (1.0 - t * t); }

double line_map_inverse(double x, double L) {
  if (x == 0.0) return 0.0;
  return (-L + std::sqrt(L * L + 4.0 * x * x)) / (2.0 * x);
}

}  // namespace

GridPtr grid_real_sphere(int n, int order) {
  if (n == 2) {
    std::vector<GridAxis> axes{axis_periodic(std::max(4, 2 * order))};
    return assemble(
        Domain::RealSphere, n, std::move(axes), 2,
        [](const std::vector<double>& p, Eigen::Ref<Eigen::VectorXd> x) {
          x(0) = std::cos(p[0]);
          x(1) = std::sin(p[0]);
        },
        one,
        [](const Eigen::VectorXd& x) {
          double th = std::atan2(x(1), x(0));
          if (th < 0) th += 2.0 * pi;
          return std::vector<double>{th};
        });
  }
  if (n == 3) {
    std::vector<GridAxis> axes{axis_from_rule(gauss_legendre(order)),
                               axis_periodic(std::max(4, 2 * order))};
    return assemble(
        Domain::RealSphere, n, std::move(axes), 3,
        [](const std::vector<double>& p, Eigen::Ref<Eigen::VectorXd> x) {
          const double u = p[0], r = std::sqrt(std::max(0.0, 1.0 - u * u));
          x(0) = u;
          x(1) = r * std::cos(p[1]);
          x(2) = r * std::sin(p[1]);
        },
        one,
        [](const Eigen::VectorXd& x) {
          double th = std::atan2(x(2), x(1));
          if (th < 0) th += 2.0 * pi;
          return std::vector<double>{x(0), th};
        });
  }
  throw UnsupportedRangeError("grid_real_sphere: only n = 2, 3 supported");
}

GridPtr grid_unitary_sphere(int n, int order) {
  const int m_ang = std::max(4, 2 * order);
  if (n == 1) {
    // S^1 in C: omega = e^(i phi)
    std::vector<GridAxis> axes{axis_periodic(m_ang)};
    return assemble(
        Domain::UnitarySphere, n, std::move(axes), 2,
        [](const std::vector<double>& p, Eigen::Ref<Eigen::VectorXd> x) {
          x(0) = std::cos(p[0]);
          x(1) = std::sin(p[0]);
        },
        one,
        [](const Eigen::VectorXd& x) {
          double th = std::atan2(x(1), x(0));
          if (th < 0) th += 2.0 * pi;
          return std::vector<double>{th};
        });
  }
  if (n == 2) {
    // omega = (sqrt(s) e^(i p1), sqrt(1-s) e^(i p2)); d sigma = ds dp1 dp2 / 2
    std::vector<GridAxis> axes{axis_from_rule(gauss_legendre(order, 0.0, 1.0)),
                               axis_periodic(m_ang), axis_periodic(m_ang)};
    return assemble(
        Domain::UnitarySphere, n, std::move(axes), 4,
        [](const std::vector<double>& p, Eigen::Ref<Eigen::VectorXd> x) {
          const double r1 = std::sqrt(p[0]), r2 = std::sqrt(1.0 - p[0]);
          x(0) = r1 * std::cos(p[1]);
          x(1) = r1 * std::sin(p[1]);
          x(2) = r2 * std::cos(p[2]);
          x(3) = r2 * std::sin(p[2]);
        },
        [](const std::vector<double>&) { return 0.5; },
        [](const Eigen::VectorXd& x) {
          const double s = x(0) * x(0) + x(1) * x(1);
          double p1 = std::atan2(x(1), x(0)), p2 = std::atan2(x(3), x(2));
          if (p1 < 0) p1 += 2.0 * pi;
          if (p2 < 0) p2 += 2.0 * pi;
          return std::vector<double>{s, p1, p2};
        });
  }
  if (n == 3) {
    // Simplex radial coordinates s1 = u, s2 = (1-u)v, s3 = (1-u)(1-v);
    // d sigma = (1/4) (1-u) du dv dp1 dp2 dp3.
    std::vector<GridAxis> axes{axis_from_rule(gauss_jacobi01(order, 0.0, 1.0)),
                               axis_from_rule(gauss_legendre(order, 0.0, 1.0)),
                               axis_periodic(m_ang), axis_periodic(m_ang),
                               axis_periodic(m_ang)};
    return assemble(
        Domain::UnitarySphere, n, std::move(axes), 6,
        [](const std::vector<double>& p, Eigen::Ref<Eigen::VectorXd> x) {
          const double s1 = p[0], s2 = (1.0 - p[0]) * p[1],
                       s3 = (1.0 - p[0]) * (1.0 - p[1]);
          const double r[3] = {std::sqrt(s1), std::sqrt(s2), std::sqrt(s3)};
          for (int j = 0; j < 3; ++j) {
            x(2 * j) = r[j] * std::cos(p[2 + j]);
            x(2 * j + 1) = r[j] * std::sin(p[2 + j]);
          }
        },
        [](const std::vector<double>&) { return 0.25; },
        [](const Eigen::VectorXd& x) {
          const double s1 = x(0) * x(0) + x(1) * x(1);
          const double s2 = x(2) * x(2) + x(3) * x(3);
          std::vector<double> p(5);
          p[0] = s1;
          p[1] = (s1 < 1.0) ? s2 / (1.0 - s1) : 0.0;
          for (int j = 0; j < 3; ++j) {
            double th = std::atan2(x(2 * j + 1), x(2 * j));
            if (th < 0) th += 2.0 * pi;
            p[2 + j] = th;
          }
          return p;
        });
  }
  throw UnsupportedRangeError("grid_unitary_sphere: only n = 1, 2, 3 supported");
}

GridPtr grid_euclidean(int dim, int order, double scale) {
  std::vector<GridAxis> axes(dim, axis_mapped_real_line(order, scale));
  return assemble(
      Domain::Euclidean, dim, std::move(axes), dim,
      [dim, scale](const std::vector<double>& p, Eigen::Ref<Eigen::VectorXd> x) {
        for (int k = 0; k < dim; ++k) x(k) = line_map(p[k], scale);
      },
      one,
      [dim, scale](const Eigen::VectorXd& x) {
        std::vector<double> p(dim);
        for (int k = 0; k < dim; ++k) p[k] = line_map_inverse(x(k), scale);
        return p;
      });
}

GridPtr grid_gaussian_complex(int m, int order, double scale) {
  if (m == 0) {
    // Point measure: a single node with weight 1.
    auto g = std::make_shared<Grid>();
    g->domain = Domain::GaussianComplex;
    g->n = 0;
    g->pts.resize(1, 0);
    g->w.resize(1);
    g->w(0) = 1.0;
    g->to_params = [](const Eigen::VectorXd&) { return std::vector<double>{}; };
    return g;
  }
  const int m_ang = std::max(4, 2 * order);
  std::vector<GridAxis> axes;
  Rule1D lag = gauss_laguerre(order, 0.0, /*deweighted=*/true);
  for (int j = 0; j < m; ++j) {
    axes.push_back(axis_from_rule(lag));
    axes.push_back(axis_periodic(m_ang));
  }
  const double radial_factor = 1.0 / (2.0 * pi * scale);
  return assemble(
      Domain::GaussianComplex, m, std::move(axes), 2 * m,
      [m, scale](const std::vector<double>& p, Eigen::Ref<Eigen::VectorXd> x) {
        for (int j = 0; j < m; ++j) {
          const double r = std::sqrt(p[2 * j] / scale);
          x(2 * j) = r * std::cos(p[2 * j + 1]);
          x(2 * j + 1) = r * std::sin(p[2 * j + 1]);
        }
      },
      [m, radial_factor](const std::vector<double>&) {
        double f = 1.0;
        for (int j = 0; j < m; ++j) f *= radial_factor;
        return f;
      },
      [m, scale](const Eigen::VectorXd& x) {
        std::vector<double> p(2 * m);
        for (int j = 0; j < m; ++j) {
          p[2 * j] = scale * (x(2 * j) * x(2 * j) + x(2 * j + 1) * x(2 * j + 1));
          double th = std::atan2(x(2 * j + 1), x(2 * j));
          if (th < 0) th += 2.0 * pi;
          p[2 * j + 1] = th;
        }
        return p;
      });
}

GridPtr grid_radial_rho(int order, double alpha, bool deweighted) {
  std::vector<GridAxis> axes{axis_from_rule(gauss_laguerre(order, alpha, deweighted))};
  return assemble(
      Domain::RadialRho, 0, std::move(axes), 1,
      [](const std::vector<double>& p, Eigen::Ref<Eigen::VectorXd> x) { x(0) = p[0]; },
      one,
      [](const Eigen::VectorXd& x) { return std::vector<double>{x(0)}; });
}

GridPtr grid_heisenberg(int n, int order, double t_scale, double z_scale) {
  const int d = 2 * (n - 1) + 1;
  std::vector<GridAxis> axes;
  axes.push_back(axis_mapped_real_line(order, t_scale));
  for (int j = 0; j < 2 * (n - 1); ++j)
    axes.push_back(axis_mapped_real_line(order, z_scale));
  const double mu_norm = std::pow(pi, -(n - 1));  // d mu(z) = Leb / pi^(n-1)
  return assemble(
      Domain::Heisenberg, n, std::move(axes), d,
      [d, t_scale, z_scale](const std::vector<double>& p,
                            Eigen::Ref<Eigen::VectorXd> x) {
        x(0) = line_map(p[0], t_scale);
        for (int k = 1; k < d; ++k) x(k) = line_map(p[k], z_scale);
      },
      [mu_norm](const std::vector<double>&) { return mu_norm; },
      [d, t_scale, z_scale](const Eigen::VectorXd& x) {
        std::vector<double> p(d);
        p[0] = line_map_inverse(x(0), t_scale);
        for (int k = 1; k < d; ++k) p[k] = line_map_inverse(x(k), z_scale);
        return p;
      });
}

namespace {

GridPtr grid_ball_impl(Domain domain, int n, int real_dim, int order) {
  // Lebesgue measure in polar form: r^(d-1) dr x sphere rule.
  GridPtr sphere = (domain == Domain::RealBall) ? grid_real_sphere(n, order)
                                                : grid_unitary_sphere(n, order);
  Rule1D radial = gauss_jacobi01(order, real_dim - 1.0, 0.0);
  auto g = std::make_shared<Grid>();
  g->domain = domain;
  g->n = n;
  const Eigen::Index total = static_cast<Eigen::Index>(radial.size()) * sphere->size();
  g->pts.resize(total, real_dim);
  g->w.resize(total);
  Eigen::Index row = 0;
  for (std::size_t i = 0; i < radial.size(); ++i)
    for (Eigen::Index j = 0; j < sphere->size(); ++j) {
      g->pts.row(row) = radial.x[i] * sphere->pts.row(j);
      g->w(row) = radial.w[i] * sphere->w(j);
      ++row;
    }
  // Ball grids are used for quadrature only; no interpolation structure.
  g->to_params = nullptr;
  return g;
}

}  // namespace

GridPtr grid_real_ball(int n, int order) {
  return grid_ball_impl(Domain::RealBall, n, n, order);
}

GridPtr grid_unitary_ball(int n, int order) {
  return grid_ball_impl(Domain::UnitaryBall, n, 2 * n, order);
}

// ---------------------------------------------------------------------------
// Interpolation.

namespace {

cplx interp_axis(const Grid& grid, const std::vector<double>& par,
                 const Eigen::VectorXcd& values, std::size_t axis,
                 Eigen::Index offset, Eigen::Index stride) {
  const GridAxis& a = grid.axes[axis];
  const std::size_t m = a.nodes.size();
  Eigen::Index substride = stride / static_cast<Eigen::Index>(m);
  auto value_at = [&](std::size_t i) -> cplx {
    if (axis + 1 == grid.axes.size())
      return values(offset + static_cast<Eigen::Index>(i));
    return interp_axis(grid, par, values, axis + 1,
                       offset + static_cast<Eigen::Index>(i) * substride, substride);
  };
  const double x = par[axis];
  if (a.periodic) {
    // Trigonometric barycentric on the uniform grid.
    const bool even = (m % 2 == 0);
    cplx num = 0.0;
    double den = 0.0;
    for (std::size_t i = 0; i < m; ++i) {
      double d = 0.5 * (x - a.nodes[i]);
      if (std::abs(std::sin(d)) < 1e-14) return value_at(i);
      const double sign = (i % 2 == 0) ? 1.0 : -1.0;
      const double wgt = even ? sign / std::tan(d) : sign / std::sin(d);
      num += wgt * value_at(i);
      den += wgt;
    }
    return num / den;
  }
  cplx num = 0.0;
  double den = 0.0;
  for (std::size_t i = 0; i < m; ++i) {
    const double d = x - a.nodes[i];
    if (std::abs(d) < 1e-14 * std::max(1.0, std::abs(x))) return value_at(i);
    const double wgt = a.bary[i] / d;
    num += wgt * value_at(i);
    den += wgt;
  }
  return num / den;
}

}  // namespace

cplx interpolate_on_grid(const Grid& grid, const Eigen::VectorXcd& values,
                         const Eigen::VectorXd& pt) {
  if (!grid.to_params || grid.axes.empty())
    throw UnsupportedRangeError("grid does not support interpolation");
  const std::vector<double> par = grid.to_params(pt);
  return interp_axis(grid, par, values, 0, 0, grid.size());
}

cplx SampledFunction::eval(const Eigen::VectorXd& pt) const {
  if (callback) return callback(pt);
  return interpolate_on_grid(*grid, values, pt);
}

cplx SampledFunction::integrate() const {
  cplx acc = 0.0;
  for (Eigen::Index i = 0; i < grid->size(); ++i) acc += grid->w(i) * values(i);
  return acc;
}

SampledFunction sample(GridPtr grid, std::function<cplx(const Eigen::VectorXd&)> f) {
  SampledFunction s;
  s.grid = grid;
  s.values.resize(grid->size());
  for (Eigen::Index i = 0; i < grid->size(); ++i) s.values(i) = f(grid->point(i));
  s.callback = std::move(f);
  return s;
}

SampledFunction zero_function(GridPtr grid) {
  SampledFunction s;
  s.grid = std::move(grid);
  s.values = Eigen::VectorXcd::Zero(s.grid->size());
  s.callback = [](const Eigen::VectorXd&) { return cplx(0.0, 0.0); };
  return s;
}

Eigen::VectorXcd unflatten_complex(const Eigen::VectorXd& pt) {
  Eigen::VectorXcd z(pt.size() / 2);
  for (Eigen::Index j = 0; j < z.size(); ++j) z(j) = cplx(pt(2 * j), pt(2 * j + 1));
  return z;
}

Eigen::VectorXd flatten_complex(const Eigen::VectorXcd& z) {
  Eigen::VectorXd x(2 * z.size());
  for (Eigen::Index j = 0; j < z.size(); ++j) {
    x(2 * j) = z(j).real();
    x(2 * j + 1) = z(j).imag();
  }
  return x;
}

// ---------------------------------------------------------------------------
// Closed-form sphere moments.

double sphere_monomial_integral_unitary(int n, const std::vector<double>& alpha) {
  if (static_cast<int>(alpha.size()) != n)
    throw StructuralError("alpha must have length n");
  double num = 1.0, s = 0.0;
  for (double a : alpha) {
    if (a < 0) throw DomainError("exponents must be nonnegative");
    num *= std::tgamma(0.5 * a + 1.0);
    s += 0.5 * a;
  }
  return 2.0 * std::pow(pi, n) * num / std::tgamma(s + n);
}

double sphere_monomial_integral_unitary(int n, const MultiIndex& k) {
  if (static_cast<int>(k.size()) != n)
    throw StructuralError("multi-index must have length n");
  double num = k.factorial();
  double den = 1.0;
  for (int j = 2; j <= k.total() + n - 1; ++j) den *= j;
  return 2.0 * std::pow(pi, n) * num / den;
}

double sphere_monomial_integral_real(int n, const std::vector<double>& alpha) {
  if (static_cast<int>(alpha.size()) != n)
    throw StructuralError("alpha must have length n");
  double num = 1.0, s = 0.0;
  for (double a : alpha) {
    if (a < 0) throw DomainError("exponents must be nonnegative");
    num *= std::tgamma(0.5 * (a + 1.0));
    s += a;
  }
  return 2.0 * num / std::tgamma(0.5 * (s + n));
}

double real_sphere_volume(int n) {
  return 2.0 * std::pow(pi, 0.5 * n) / std::tgamma(0.5 * n);
}

double unitary_sphere_volume(int n) {
  double den = 1.0;
  for (int j = 2; j <= n - 1; ++j) den *= j;
  return 2.0 * std::pow(pi, n) / den;
}

}  // namespace rankone
