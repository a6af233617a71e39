#include <doctest.h>

#include <random>

#include "rankone/group.hpp"

using namespace rankone;

namespace {

HeisenbergElement mk_h(double t, std::initializer_list<cplx> zs) {
  HeisenbergElement h;
  h.t = t;
  h.z.resize(static_cast<Eigen::Index>(zs.size()));
  Eigen::Index i = 0;
  for (cplx v : zs) h.z(i++) = v;
  return h;
}

}  // namespace

TEST_CASE("identity and s pass membership; broken form fails") {
  for (Family fam : {Family::O, Family::U}) {
    for (MatrixModel mdl : {MatrixModel::a, MatrixModel::b}) {
      GroupElement e = identity_element(fam, 3, mdl);
      CHECK(verify_membership(e));
      e.m(0, 0) += 1e-3;
      CHECK_FALSE(verify_membership(e));
    }
    CHECK(verify_membership(s_element(fam, 3)));
  }
}

TEST_CASE("s is an exact involution") {
  for (Family fam : {Family::O, Family::U}) {
    const GroupElement s = s_element(fam, 3);
    const GroupElement s2 = multiply(s, s);
    CHECK((s2.m - Eigen::MatrixXcd::Identity(4, 4)).norm() == 0.0);
  }
}

TEST_CASE("model transition: identity, s, and round trips") {
  const GroupElement e = identity_element(Family::U, 2, MatrixModel::b);
  CHECK((model_transition(e).m - e.m).norm() < 1e-15);

  // s in model a is diag(1,...,1,-1), i.e. the sigma form itself
  const GroupElement sa = model_transition(s_element(Family::O, 3));
  Eigen::MatrixXcd expect = Eigen::MatrixXcd::Identity(4, 4);
  expect(3, 3) = -1.0;
  CHECK((sa.m - expect).norm() < 1e-14);

  // b -> a -> b round trip
  for (std::uint64_t seed : {1u, 2u, 3u}) {
    const GroupElement g = random_element(Family::U, 2, seed);
    const GroupElement rt = model_transition(model_transition(g));
    CHECK((rt.m - g.m).norm() / g.m.norm() < 1e-12);
  }
  for (std::uint64_t seed : {4u, 5u}) {
    const GroupElement g = random_element(Family::O, 3, seed);
    const GroupElement rt = model_transition(model_transition(g));
    CHECK((rt.m - g.m).norm() / g.m.norm() < 1e-12);
  }
}

TEST_CASE("Heisenberg element in model a matches the explicit blocks") {
  // alpha = [[1+zeta/2, z/sqrt2],[-z^*/sqrt2, e]], beta = [-zeta/2; -z^*/sqrt2],
  // gamma = (zeta/2, z/sqrt2), delta = 1 - zeta/2
  const HeisenbergElement h = mk_h(0.7, {cplx(0.4, -0.2), cplx(-0.1, 0.9)});
  const GroupElement ga = embed(h, 3, MatrixModel::a);
  const ModelABlocks b = model_a_blocks(ga);
  const cplx zeta = h.zeta();
  const double r = std::sqrt(2.0);
  CHECK(std::abs(b.alpha(0, 0) - (1.0 + 0.5 * zeta)) < 1e-13);
  CHECK(std::abs(b.alpha(0, 1) - h.z(0) / r) < 1e-13);
  CHECK(std::abs(b.alpha(1, 0) + std::conj(h.z(0)) / r) < 1e-13);
  CHECK(std::abs(b.alpha(1, 1) - 1.0) < 1e-13);
  CHECK(std::abs(b.alpha(2, 2) - 1.0) < 1e-13);
  CHECK(std::abs(b.beta(0) + 0.5 * zeta) < 1e-13);
  CHECK(std::abs(b.beta(1) + std::conj(h.z(0)) / r) < 1e-13);
  CHECK(std::abs(b.gamma(0) - 0.5 * zeta) < 1e-13);
  CHECK(std::abs(b.gamma(1) - h.z(0) / r) < 1e-13);
  CHECK(std::abs(b.delta - (1.0 - 0.5 * zeta)) < 1e-13);
}

TEST_CASE("embeddings: trivial element, Z corner, homomorphism") {
  CHECK((embed(mk_h(0.0, {cplx(0, 0)}), 2).m -
         Eigen::MatrixXcd::Identity(3, 3)).norm() == 0.0);

  Eigen::VectorXd gamma(2);
  gamma << 1.0, 0.0;
  const GroupElement z = embed_unipotent(gamma, 3);
  CHECK(std::abs(z.m(3, 0) - cplx(-0.5, 0.0)) < 1e-15);  // corner -|gamma|^2/2
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j) CHECK(std::abs(z.m(i, j)) == 0.0);

  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 20; ++trial) {
    const HeisenbergElement h1 = random_heisenberg(3, rng);
    const HeisenbergElement h2 = random_heisenberg(3, rng);
    const GroupElement lhs = multiply(embed(h1, 3), embed(h2, 3));
    const GroupElement rhs = embed(h1.mul(h2), 3);
    CHECK((lhs.m - rhs.m).norm() < 1e-12 * rhs.m.norm());
  }
}

TEST_CASE("Heisenberg multiplication: associativity and inverse") {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 30; ++trial) {
    const auto h1 = random_heisenberg(3, rng), h2 = random_heisenberg(3, rng),
               h3 = random_heisenberg(3, rng);
    const auto lhs = h1.mul(h2).mul(h3);
    const auto rhs = h1.mul(h2.mul(h3));
    CHECK(std::abs(lhs.t - rhs.t) < 1e-12 * (1.0 + std::abs(lhs.t)));
    CHECK((lhs.z - rhs.z).norm() < 1e-12);
    const auto e = h1.mul(h1.inverse());
    CHECK(std::abs(e.t) < 1e-13);
    CHECK(e.z.norm() < 1e-13);
  }
}

TEST_CASE("diagonal embedding validates its inputs") {
  DiagonalElement d;
  d.u = Eigen::MatrixXcd::Identity(2, 2) * 1.1;  // not unitary
  d.epsilon = 1.0;
  d.r = 2.0;
  CHECK_THROWS_AS(embed(d, Family::U, 3), DomainError);
  d.u = Eigen::MatrixXcd::Identity(2, 2);
  CHECK(verify_membership(embed(d, Family::U, 3)));
  d.r = -1.0;
  CHECK_THROWS_AS(embed(d, Family::U, 3), DomainError);
}

TEST_CASE("random elements: determinism, membership, closure") {
  for (Family fam : {Family::O, Family::U}) {
    const int n = (fam == Family::O) ? 3 : 2;
    const GroupElement a1 = random_element(fam, n, 42);
    const GroupElement a2 = random_element(fam, n, 42);
    CHECK((a1.m - a2.m).norm() == 0.0);  // determinism
    for (std::uint64_t seed = 0; seed < 60; ++seed) {
      const GroupElement g = random_element(fam, n, seed);
      CHECK(verify_membership(g));
    }
    // group closure under products
    const GroupElement g1 = random_element(fam, n, 101);
    const GroupElement g2 = random_element(fam, n, 202);
    CHECK(verify_membership(multiply(g1, g2)));
    CHECK(verify_membership(inverse(g1)));
    CHECK((multiply(g1, inverse(g1)).m - Eigen::MatrixXcd::Identity(n + 1, n + 1))
              .norm() < 1e-10);
  }
}

TEST_CASE("P-restricted random elements are lower block triangular") {
  RandomElementOptions opts;
  opts.restrict_to_parabolic = true;
  const GroupElement g = random_element(Family::U, 3, 7, MatrixModel::b, opts);
  const int n = 3;
  // upper-triangular part of the (1, n-1, 1) block partition vanishes
  CHECK(std::abs(g.m(0, n)) < 1e-12);
  for (int j = 1; j < n; ++j) {
    CHECK(std::abs(g.m(0, j)) < 1e-12);
    CHECK(std::abs(g.m(j, n)) < 1e-12);
  }
}

TEST_CASE("U(1,1) degenerate case works") {
  const GroupElement g = random_element(Family::U, 1, 5);
  CHECK(verify_membership(g));
  CHECK(g.m.rows() == 2);
}
