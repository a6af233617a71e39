#include "rankone/boundary.hpp"

namespace rankone {

namespace {

struct ModelBBlocks {
  cplx g11, g13, g31, g33;
  Eigen::RowVectorXcd g12, g32;
  Eigen::VectorXcd g21, g23;
  Eigen::MatrixXcd g22;
};

ModelBBlocks model_b_blocks(const GroupElement& g) {
  if (g.model != MatrixModel::b)
    throw StructuralError("expected a model-b element");
  const int n = g.n;
  ModelBBlocks b;
  b.g11 = g.m(0, 0);
  b.g13 = g.m(0, n);
  b.g31 = g.m(n, 0);
  b.g33 = g.m(n, n);
  b.g12 = g.m.block(0, 1, 1, n - 1);
  b.g32 = g.m.block(n, 1, 1, n - 1);
  b.g21 = g.m.block(1, 0, n - 1, 1);
  b.g23 = g.m.block(1, n, n - 1, 1);
  b.g22 = g.m.block(1, 1, n - 1, n - 1);
  return b;
}

constexpr double kSingularTol = 1e-13;

}  // namespace

Eigen::RowVectorXcd sphere_action(const Eigen::RowVectorXcd& omega,
                                  const GroupElement& g) {
  if (g.model != MatrixModel::a)
    throw StructuralError("sphere_action: element must be in model a");
  if (omega.size() != g.n)
    throw StructuralError("sphere_action: omega has wrong length");
  const ModelABlocks b = model_a_blocks(g);
  const cplx den = (omega * b.beta).value() + b.delta;
  if (std::abs(den) < kSingularTol)
    throw SingularPointError("sphere_action: vanishing denominator");
  return (omega * b.alpha + b.gamma) / den;
}

double cocycle_b(const Eigen::RowVectorXcd& omega, const GroupElement& g) {
  const ModelABlocks b = model_a_blocks(g);
  return std::abs((omega * b.beta).value() + b.delta);
}

BoundaryPoint<Eigen::VectorXd> unipotent_action_O(const Eigen::VectorXd& gamma,
                                                  const GroupElement& g) {
  if (g.family != Family::O)
    throw StructuralError("unipotent_action_O: family O expected");
  const ModelBBlocks b = model_b_blocks(g);
  const Eigen::RowVectorXcd gr = gamma.transpose().cast<cplx>();
  const double q = -0.5 * gamma.squaredNorm();
  const cplx den = q * b.g13 + (gr * b.g23).value() + b.g33;
  if (std::abs(den) < kSingularTol) return {};
  const Eigen::RowVectorXcd num = q * b.g12 + gr * b.g22 + b.g32;
  return {Eigen::VectorXd((num / den).real().transpose())};
}

double beta_O(const Eigen::VectorXd& gamma, const GroupElement& g) {
  const ModelBBlocks b = model_b_blocks(g);
  const Eigen::RowVectorXcd gr = gamma.transpose().cast<cplx>();
  const double q = -0.5 * gamma.squaredNorm();
  return std::abs(q * b.g13 + (gr * b.g23).value() + b.g33);
}

BoundaryPoint<HeisenbergElement> heisenberg_action_U(const HeisenbergElement& h,
                                                     const GroupElement& g) {
  const ModelBBlocks b = model_b_blocks(g);
  const Eigen::RowVectorXcd z = h.z.transpose();
  const cplx zeta = h.zeta();
  const cplx den = zeta * b.g13 + (z * b.g23).value() + b.g33;
  if (std::abs(den) < kSingularTol) return {};
  const cplx zeta_p = (zeta * b.g11 + (z * b.g21).value() + b.g31) / den;
  const Eigen::RowVectorXcd z_p = (zeta * b.g12 + z * b.g22 + b.g32) / den;
  HeisenbergElement out;
  out.t = zeta_p.imag();
  out.z = z_p.transpose();
  return {out};
}

double beta_U(const HeisenbergElement& h, const GroupElement& g) {
  const ModelBBlocks b = model_b_blocks(g);
  const Eigen::RowVectorXcd z = h.z.transpose();
  return std::abs(h.zeta() * b.g13 + (z * b.g23).value() + b.g33);
}

double kernel_R_U(const HeisenbergElement& h, const HeisenbergElement& hp) {
  // z z'^* = sum_i z_i conj(z'_i); Eigen's dot conjugates its first factor.
  return std::abs(h.zeta() + std::conj(hp.zeta()) + hp.z.dot(h.z));
}

}  // namespace rankone
