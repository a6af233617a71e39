#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <optional>
#include <random>

#include "rankone/common.hpp"

namespace rankone {

enum class Family { O, U };
enum class MatrixModel { a, b };

/// Element of O(n,1) or U(n,1) in one of the two matrix models.
///
/// Model a preserves the diagonal form sigma = diag(1,...,1,-1); model b
/// preserves the corner form s (antidiagonal 1s in the corners, identity in
/// the middle block).  Family O elements are stored in the same complex
/// container with vanishing imaginary parts.
struct GroupElement {
  Family family = Family::O;
  MatrixModel model = MatrixModel::b;
  int n = 2;
  Eigen::MatrixXcd m;

  int dim() const { return n + 1; }
};

/// Heisenberg element (t, z), z in C^(n-1); zeta = i t - z z^*/2.
struct HeisenbergElement {
  double t = 0.0;
  Eigen::VectorXcd z;

  cplx zeta() const { return cplx(0.0, t) - 0.5 * z.squaredNorm(); }
  HeisenbergElement mul(const HeisenbergElement& o) const;
  HeisenbergElement inverse() const { return {-t, -z}; }
};

/// Block-diagonal element diag(conj(eps_tot)^-1, u, eps_tot) with
/// eps_tot = epsilon * r: epsilon the D0 phase (|epsilon| = 1, real +-1 for
/// family O), u in U(n-1) (O(n-1) for family O), r > 0 the D1 dilation.
struct DiagonalElement {
  cplx epsilon{1.0, 0.0};
  Eigen::MatrixXcd u;
  double r = 1.0;
};

/// Defining form of the model: sigma (model a) or s (model b), order n+1.
Eigen::MatrixXcd model_form(MatrixModel model, int n);

/// Relative Frobenius defect of the defining identity g F g^* = F.
double membership_defect(const GroupElement& g);

/// True iff the defining form identity holds to 1e-10 relative Frobenius
/// (and, for family O, the entries are real to 1e-14).
bool verify_membership(const GroupElement& g);

/// Conjugation taking one matrix model to the other; involutive round trip.
GroupElement model_transition(const GroupElement& g);

/// Group operations.  multiply checks tag compatibility; inverse uses
/// g^-1 = F g^* F, exact for form-preserving g.
GroupElement multiply(const GroupElement& a, const GroupElement& b);
GroupElement inverse(const GroupElement& g);
GroupElement identity_element(Family family, int n, MatrixModel model);

/// Subgroup embeddings (natively in model b; transitioned on request).
GroupElement embed(const HeisenbergElement& h, int n, MatrixModel model = MatrixModel::b);
GroupElement embed_unipotent(const Eigen::VectorXd& gamma, int n,
                             MatrixModel model = MatrixModel::b);
GroupElement embed(const DiagonalElement& d, Family family, int n,
                   MatrixModel model = MatrixModel::b);
GroupElement s_element(Family family, int n, MatrixModel model = MatrixModel::b);

/// Newton projection back onto the form-preserving manifold; controls
/// roundoff drift in long generator products.
void project_to_group(GroupElement& g, int sweeps = 2);

struct RandomElementOptions {
  int factors = 40;
  bool restrict_to_parabolic = false;  // P-only: drop the s generator
  double scale = 1.0;                  // spread of the Heisenberg/Z draws
};

/// Deterministic pseudo-random element, built as a product of generators of
/// P and s: Heisenberg/Z draws with normal components, D0 via QR of a
/// Gaussian matrix, D1 with log r uniform in [-1,1], s with probability 1/4.
GroupElement random_element(Family family, int n, std::uint64_t seed,
                            MatrixModel model = MatrixModel::b,
                            const RandomElementOptions& opts = {});

HeisenbergElement random_heisenberg(int n, std::mt19937_64& rng, double scale = 1.0);
DiagonalElement random_diagonal(Family family, int n, std::mt19937_64& rng);

/// Haar-ish unitary (orthogonal for real = true) via QR of a Gaussian matrix.
Eigen::MatrixXcd random_unitary(int dim, std::mt19937_64& rng, bool real);

/// Model-a blocks alpha (n x n), beta (n x 1), gamma (1 x n), delta (1 x 1).
struct ModelABlocks {
  Eigen::MatrixXcd alpha;
  Eigen::VectorXcd beta;
  Eigen::RowVectorXcd gamma;
  cplx delta;
};
ModelABlocks model_a_blocks(const GroupElement& g);

}  // namespace rankone
