#include "rankone/group.hpp"

namespace rankone {

namespace {

void check_tags(const GroupElement& a, const GroupElement& b) {
  if (a.family != b.family || a.model != b.model || a.n != b.n)
    throw StructuralError("group elements have incompatible tags");
}

void check_square(const GroupElement& g) {
  if (g.m.rows() != g.dim() || g.m.cols() != g.dim())
    throw StructuralError("group element matrix has wrong order");
}

// Orthogonal change of basis with A^T s A = sigma; transition b <-> a.
Eigen::MatrixXcd transition_matrix(int n) {
  Eigen::MatrixXcd a = Eigen::MatrixXcd::Identity(n + 1, n + 1);
  const double r = 1.0 / std::sqrt(2.0);
  a(0, 0) = r;
  a(0, n) = -r;
  a(n, 0) = r;
  a(n, n) = r;
  return a;
}

}  // namespace

HeisenbergElement HeisenbergElement::mul(const HeisenbergElement& o) const {
  HeisenbergElement r;
  // Im(z o.z^*); Eigen's dot conjugates its first factor.
  r.t = t + o.t - (o.z.dot(z)).imag();
  r.z = z + o.z;
  return r;
}

Eigen::MatrixXcd model_form(MatrixModel model, int n) {
  Eigen::MatrixXcd f = Eigen::MatrixXcd::Identity(n + 1, n + 1);
  if (model == MatrixModel::a) {
    f(n, n) = -1.0;
  } else {
    f(0, 0) = 0.0;
    f(n, n) = 0.0;
    f(0, n) = 1.0;
    f(n, 0) = 1.0;
  }
  return f;
}

double membership_defect(const GroupElement& g) {
  check_square(g);
  const Eigen::MatrixXcd f = model_form(g.model, g.n);
  return (g.m * f * g.m.adjoint() - f).norm() / f.norm();
}

bool verify_membership(const GroupElement& g) {
  check_square(g);
  if (g.family == Family::O && g.m.imag().cwiseAbs().maxCoeff() > 1e-14)
    return false;
  return membership_defect(g) < 1e-10;
}

GroupElement model_transition(const GroupElement& g) {
  if (!verify_membership(g))
    throw DomainError("model_transition: input fails membership");
  const Eigen::MatrixXcd a = transition_matrix(g.n);
  GroupElement out = g;
  out.model = (g.model == MatrixModel::a) ? MatrixModel::b : MatrixModel::a;
  // b = A a A^T.  A is real orthogonal, so the inverse map is the transpose
  // conjugation.
  if (g.model == MatrixModel::a)
    out.m = a * g.m * a.transpose();
  else
    out.m = a.transpose() * g.m * a;
  if (out.family == Family::O) out.m = out.m.real().cast<cplx>();
  return out;
}

GroupElement multiply(const GroupElement& a, const GroupElement& b) {
  check_tags(a, b);
  GroupElement r = a;
  r.m = a.m * b.m;
  return r;
}

GroupElement inverse(const GroupElement& g) {
  const Eigen::MatrixXcd f = model_form(g.model, g.n);
  GroupElement r = g;
  r.m = f * g.m.adjoint() * f;
  return r;
}

GroupElement identity_element(Family family, int n, MatrixModel model) {
  GroupElement g;
  g.family = family;
  g.model = model;
  g.n = n;
  g.m = Eigen::MatrixXcd::Identity(n + 1, n + 1);
  return g;
}

GroupElement embed(const HeisenbergElement& h, int n, MatrixModel model) {
  if (h.z.size() != n - 1)
    throw StructuralError("Heisenberg z has wrong length for this n");
  GroupElement g = identity_element(Family::U, n, MatrixModel::b);
  g.m.block(1, 0, n - 1, 1) = -h.z.conjugate();
  g.m(n, 0) = h.zeta();
  g.m.block(n, 1, 1, n - 1) = h.z.transpose();
  if (model == MatrixModel::a) g = model_transition(g);
  return g;
}

GroupElement embed_unipotent(const Eigen::VectorXd& gamma, int n, MatrixModel model) {
  HeisenbergElement h;
  h.t = 0.0;
  h.z = gamma.cast<cplx>();
  GroupElement g = embed(h, n, MatrixModel::b);
  g.family = Family::O;
  g.m = g.m.real().cast<cplx>();
  if (model == MatrixModel::a) g = model_transition(g);
  return g;
}

GroupElement embed(const DiagonalElement& d, Family family, int n, MatrixModel model) {
  if (d.u.rows() != n - 1 || d.u.cols() != n - 1)
    throw StructuralError("diagonal block u has wrong order");
  if ((d.u * d.u.adjoint() - Eigen::MatrixXcd::Identity(n - 1, n - 1)).norm() > 1e-12)
    throw DomainError("diagonal block u is not unitary");
  if (std::abs(std::abs(d.epsilon) - 1.0) > 1e-12)
    throw DomainError("diagonal epsilon must have modulus 1");
  if (!(d.r > 0.0)) throw DomainError("diagonal r must be positive");
  if (family == Family::O) {
    if (std::abs(d.epsilon.imag()) > 1e-14 || d.u.imag().cwiseAbs().maxCoeff() > 1e-14)
      throw DomainError("family O diagonal data must be real");
  }
  const cplx eps_tot = d.epsilon * d.r;
  GroupElement g = identity_element(family, n, MatrixModel::b);
  g.m(0, 0) = 1.0 / std::conj(eps_tot);
  g.m.block(1, 1, n - 1, n - 1) = d.u;
  g.m(n, n) = eps_tot;
  if (model == MatrixModel::a) g = model_transition(g);
  return g;
}

GroupElement s_element(Family family, int n, MatrixModel model) {
  GroupElement g = identity_element(family, n, MatrixModel::b);
  g.m(0, 0) = 0.0;
  g.m(n, n) = 0.0;
  g.m(0, n) = 1.0;
  g.m(n, 0) = 1.0;
  if (model == MatrixModel::a) g = model_transition(g);
  return g;
}

void project_to_group(GroupElement& g, int sweeps) {
  const Eigen::MatrixXcd f = model_form(g.model, g.n);
  for (int i = 0; i < sweeps; ++i) {
    const Eigen::MatrixXcd e = g.m * f * g.m.adjoint() - f;
    g.m -= 0.5 * e * g.m.adjoint().inverse() * f;
  }
  if (g.family == Family::O) g.m = g.m.real().cast<cplx>();
}

Eigen::MatrixXcd random_unitary(int dim, std::mt19937_64& rng, bool real) {
  std::normal_distribution<double> nd;
  Eigen::MatrixXcd a(dim, dim);
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j)
      a(i, j) = real ? cplx(nd(rng), 0.0) : cplx(nd(rng), nd(rng));
  Eigen::HouseholderQR<Eigen::MatrixXcd> qr(a);
  Eigen::MatrixXcd q = qr.householderQ();
  // Fix the phase ambiguity so the distribution is Haar-ish.
  const Eigen::MatrixXcd r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (int j = 0; j < dim; ++j) {
    const cplx d = r(j, j);
    if (std::abs(d) > 0) q.col(j) *= d / std::abs(d);
  }
  return q;
}

HeisenbergElement random_heisenberg(int n, std::mt19937_64& rng, double scale) {
  std::normal_distribution<double> nd;
  HeisenbergElement h;
  h.t = scale * nd(rng);
  h.z.resize(n - 1);
  for (int i = 0; i < n - 1; ++i) h.z(i) = scale * cplx(nd(rng), nd(rng));
  return h;
}

DiagonalElement random_diagonal(Family family, int n, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> ud(-1.0, 1.0);
  DiagonalElement d;
  d.r = std::exp(ud(rng));
  d.u = random_unitary(n - 1, rng, family == Family::O);
  if (family == Family::O) {
    d.epsilon = (ud(rng) < 0.0) ? -1.0 : 1.0;
  } else {
    d.epsilon = std::polar(1.0, pi * ud(rng));
  }
  return d;
}

GroupElement random_element(Family family, int n, std::uint64_t seed,
                            MatrixModel model, const RandomElementOptions& opts) {
  if (n < 1 || (family == Family::O && n < 2))
    throw StructuralError("random_element: n out of range");
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> ud(0.0, 1.0);
  std::normal_distribution<double> nd;
  GroupElement g = identity_element(family, n, MatrixModel::b);
  for (int i = 0; i < opts.factors; ++i) {
    const double pick = ud(rng);
    GroupElement factor;
    if (!opts.restrict_to_parabolic && pick < 0.25) {
      factor = s_element(family, n);
    } else if (pick < 0.625) {
      if (family == Family::U) {
        factor = embed(random_heisenberg(n, rng, opts.scale), n);
      } else {
        Eigen::VectorXd gamma(n - 1);
        for (int j = 0; j < n - 1; ++j) gamma(j) = opts.scale * nd(rng);
        factor = embed_unipotent(gamma, n);
      }
    } else {
      factor = embed(random_diagonal(family, n, rng), family, n);
    }
    g = multiply(g, factor);
    if ((i + 1) % 20 == 0) project_to_group(g);
  }
  project_to_group(g);
  if (model == MatrixModel::a) g = model_transition(g);
  return g;
}

ModelABlocks model_a_blocks(const GroupElement& g) {
  if (g.model != MatrixModel::a)
    throw StructuralError("model_a_blocks: element not in model a");
  check_square(g);
  ModelABlocks b;
  const int n = g.n;
  b.alpha = g.m.topLeftCorner(n, n);
  b.beta = g.m.topRightCorner(n, 1);
  b.gamma = g.m.bottomLeftCorner(1, n);
  b.delta = g.m(n, n);
  return b;
}

}  // namespace rankone
