#pragma once

#include <optional>

#include "rankone/group.hpp"

namespace rankone {

/// Thrown when a boundary action hits its singular set and the caller asked
/// for a finite image.
class SingularPointError : public DomainError {
 public:
  using DomainError::DomainError;
};

/// Image of a boundary action: a finite point or the point at infinity
/// (the compactifying point of the absolute).
template <typename T>
struct BoundaryPoint {
  std::optional<T> value;
  bool at_infinity() const { return !value.has_value(); }
  const T& get() const {
    if (!value) throw SingularPointError("boundary point at infinity");
    return *value;
  }
};

/// Sphere action omega.g = (omega beta + delta)^-1 (omega alpha + gamma) for
/// g in model a; omega a unit row vector in R^n (family O) or C^n (family U).
Eigen::RowVectorXcd sphere_action(const Eigen::RowVectorXcd& omega,
                                  const GroupElement& g);

/// Multiplicative cocycle b(omega, g) = |omega beta + delta|.
double cocycle_b(const Eigen::RowVectorXcd& omega, const GroupElement& g);

/// O(n,1) action on the unipotent coordinates gamma in R^(n-1), model b.
BoundaryPoint<Eigen::VectorXd> unipotent_action_O(const Eigen::VectorXd& gamma,
                                                  const GroupElement& g);

/// beta(gamma, g) = | -|gamma|^2/2 g13 + gamma g23 + g33 |.
double beta_O(const Eigen::VectorXd& gamma, const GroupElement& g);

/// U(n,1) action on the Heisenberg group, model b: (zeta, z) -> (zeta', z').
BoundaryPoint<HeisenbergElement> heisenberg_action_U(const HeisenbergElement& h,
                                                     const GroupElement& g);

/// beta(h, g) = |zeta g13 + z g23 + g33|.
double beta_U(const HeisenbergElement& h, const GroupElement& g);

/// Invariant kernel R(h, h') = |zeta + conj(zeta') + z z'^*| on H x H.
double kernel_R_U(const HeisenbergElement& h, const HeisenbergElement& hp);

}  // namespace rankone
