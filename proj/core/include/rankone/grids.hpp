#pragma once

#include <Eigen/Dense>
#include <functional>
#include <memory>
#include <vector>

#include "rankone/multi_index.hpp"
#include "rankone/quad1d.hpp"

namespace rankone {

enum class Domain {
  RealSphere,      // S^(n-1) in R^n, nodes are unit vectors
  UnitarySphere,   // S^(2n-1) in C^n, nodes flattened (re0,im0,re1,...)
  Euclidean,       // R^d, mapped Gauss-Legendre tensor rule
  GaussianComplex, // C^m with normalized measure d mu = Leb / pi^m
  RadialRho,       // (0,inf), generalized Gauss-Laguerre
  Heisenberg,      // R x C^(n-1): t then z flattened
  RealBall,        // |x| < 1 in R^n, Lebesgue
  UnitaryBall      // |z| < 1 in C^n, Lebesgue, flattened
};

/// One tensor factor of a grid: a 1-D rule plus what interpolation needs.
struct GridAxis {
  std::vector<double> nodes;
  std::vector<double> weights;  // quadrature weights of this factor alone
  bool periodic = false;        // uniform rule on [0, 2 pi)
  std::vector<double> bary;     // barycentric weights (non-periodic only)
};

/// Tensor-product quadrature grid on one of the supported domains.  `pts`
/// holds geometric coordinates (one node per row); `w` the full quadrature
/// weights including every measure factor.  `axes` describe the underlying
/// parameter tensor (axis 0 slowest), used for barycentric interpolation.
struct Grid {
  Domain domain;
  int n = 0;          // rank parameter (spheres/balls) or dimension tag
  Eigen::MatrixXd pts;
  Eigen::VectorXd w;
  std::vector<GridAxis> axes;
  std::function<std::vector<double>(const Eigen::VectorXd&)> to_params;

  Eigen::Index size() const { return pts.rows(); }
  Eigen::VectorXd point(Eigen::Index i) const { return pts.row(i); }
  double total_weight() const { return w.sum(); }
};

using GridPtr = std::shared_ptr<const Grid>;

/// Builders.  `order` is the base 1-D order; angular factors use 2*order
/// points.  Real spheres support n = 2, 3; unitary spheres n = 1, 2, 3.
GridPtr grid_real_sphere(int n, int order);
GridPtr grid_unitary_sphere(int n, int order);
GridPtr grid_euclidean(int dim, int order, double scale = 1.0);
GridPtr grid_gaussian_complex(int m, int order, double scale = 1.0);
GridPtr grid_radial_rho(int order, double alpha = 0.0, bool deweighted = true);
GridPtr grid_heisenberg(int n, int order, double t_scale = 1.0, double z_scale = 1.0);
GridPtr grid_real_ball(int n, int order);
GridPtr grid_unitary_ball(int n, int order);

/// Function sampled on a grid, optionally backed by a closed-form callback.
/// With a callback, off-grid evaluation is exact; otherwise barycentric
/// tensor interpolation on the grid axes is used.
struct SampledFunction {
  GridPtr grid;
  Eigen::VectorXcd values;
  std::function<cplx(const Eigen::VectorXd&)> callback;
  std::vector<Eigen::Index> masked;  // nodes hit by singular pullbacks

  bool has_callback() const { return static_cast<bool>(callback); }
  cplx eval(const Eigen::VectorXd& pt) const;

  /// Quadrature of values against the grid weights: sum_i w_i v_i.
  cplx integrate() const;
};

SampledFunction sample(GridPtr grid, std::function<cplx(const Eigen::VectorXd&)> f);
SampledFunction zero_function(GridPtr grid);

/// Barycentric interpolation of grid data at an arbitrary point.
cplx interpolate_on_grid(const Grid& grid, const Eigen::VectorXcd& values,
                         const Eigen::VectorXd& pt);

/// Complex vector view of a flattened node (re,im pairs).
Eigen::VectorXcd unflatten_complex(const Eigen::VectorXd& pt);
Eigen::VectorXd flatten_complex(const Eigen::VectorXcd& z);

/// Closed-form sphere moments.
/// Unitary sphere S^(2n-1): int prod |omega_i|^(alpha_i) d omega
///   = 2 pi^n prod Gamma(alpha_i/2 + 1) / Gamma(sum alpha_i/2 + n).
double sphere_monomial_integral_unitary(int n, const std::vector<double>& alpha);
/// Special case int |omega^k|^2 d omega = 2 pi^n k! / (|k|+n-1)!.
double sphere_monomial_integral_unitary(int n, const MultiIndex& k);
/// Real sphere S^(n-1): int prod |omega_i|^(a_i) d omega
///   = 2 prod Gamma((a_i+1)/2) / Gamma((sum a_i + n)/2).
double sphere_monomial_integral_real(int n, const std::vector<double>& alpha);

/// Volumes: |S^(n-1)| and |S^(2n-1)|.
double real_sphere_volume(int n);
double unitary_sphere_volume(int n);

}  // namespace rankone
