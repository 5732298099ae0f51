#include <doctest.h>

#include <random>

#include "repkit/linalg.hpp"

using namespace repkit;

namespace {

CMat cmat(std::initializer_list<std::initializer_list<long>> rows) {
  CMat m(rows.size(), rows.begin()->size());
  int r = 0;
  for (const auto& row : rows) {
    int c = 0;
    for (long v : row) m(r, c++) = Scalar(v);
    ++r;
  }
  return m;
}

} // namespace

TEST_CASE("nullspace: exact examples") {
  CHECK(nullspace(CMat(CMat::Constant(3, 3, Scalar(0)))).cols() == 3);
  CHECK(nullspace(identity(2)).cols() == 0);
  CMat ns = nullspace(cmat({{1, 1}, {2, 2}}));
  REQUIRE(ns.cols() == 1);
  // spans (1,-1): the two coordinates are opposite
  CHECK(ns(0, 0) == -ns(1, 0));
  CHECK(!ns(0, 0).is_zero());
}

TEST_CASE("nullspace vectors are exactly annihilated") {
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<int> entry(-3, 3);
  for (int trial = 0; trial < 25; ++trial) {
    CMat m(3, 5);
    for (int r = 0; r < 3; ++r)
      for (int c = 0; c < 5; ++c) m(r, c) = Scalar(entry(rng));
    CMat ns = nullspace(m);
    CHECK(rank_of(m) + ns.cols() == 5);
    CHECK(is_zero(sparse_mul(m, ns)));
  }
}

TEST_CASE("nullspace: float mode respects the singular threshold") {
  FMat m(2, 2);
  m << 1.0, 1.0, 2.0, 2.0 + 1e-13;
  FMat ns = nullspace(m, 1e-9);
  REQUIRE(ns.cols() == 1);
  CHECK((m * ns).norm() <= 1e-9 * m.norm() * 10);
  FMat id = FMat::Identity(2, 2);
  CHECK(nullspace(id, 1e-9).cols() == 0);
}

TEST_CASE("eigenspaces: exact examples") {
  auto id_spaces = eigenspaces(identity(2));
  REQUIRE(id_spaces.size() == 1);
  CHECK(id_spaces[0].value == Scalar(1));
  CHECK(id_spaces[0].basis.cols() == 2);

  CMat diag = cmat({{1, 0}, {0, 2}});
  auto d_spaces = eigenspaces(diag);
  REQUIRE(d_spaces.size() == 2);
  CHECK(d_spaces[0].value == Scalar(1));
  CHECK(d_spaces[1].value == Scalar(2));

  // characteristic polynomial of [[0,1],[1,0]] is t^2 - 1, roots +1 and -1
  auto flip_spaces = eigenspaces(cmat({{0, 1}, {1, 0}}));
  REQUIRE(flip_spaces.size() == 2);
  CHECK(flip_spaces[0].value == Scalar(-1));
  CHECK(flip_spaces[1].value == Scalar(1));
  CHECK(flip_spaces[0].basis.cols() == 1);
  CHECK(flip_spaces[1].basis.cols() == 1);
}

TEST_CASE("eigenspaces: dimensions reassemble and failures are flagged") {
  CMat rot = cmat({{0, -1}, {1, 0}}); // eigenvalues +-i, caught by the Gaussian scan
  auto spaces = eigenspaces(rot);
  REQUIRE(spaces.size() == 2);
  CHECK(spaces[0].value * spaces[1].value == Scalar(1));

  CMat shear = cmat({{1, 1}, {0, 1}});
  CHECK_THROWS_AS((void)eigenspaces(shear), error); // not diagonalizable

  CMat sqrt2 = cmat({{0, 2}, {1, 0}}); // minimal polynomial t^2 - 2, no rational roots
  CHECK_THROWS_AS((void)eigenspaces(sqrt2), error);
}

TEST_CASE("eigenspaces: float clustering") {
  FMat m(3, 3);
  m << 2.0, 0.0, 0.0, 0.0, 2.0 + 1e-9, 0.0, 0.0, 0.0, 5.0;
  auto spaces = eigenspaces(m, 1e-6);
  REQUIRE(spaces.size() == 2);
  CHECK(spaces[0].basis.cols() == 2);
  CHECK(spaces[1].basis.cols() == 1);
}

TEST_CASE("kron") {
  CHECK(is_zero(CMat(kron<Scalar>(identity(2), identity(2)) - identity(4))));
  CMat d = kron<Scalar>(cmat({{1, 0}, {0, -1}}), identity(2));
  CMat expected = cmat({{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, -1, 0}, {0, 0, 0, -1}});
  CHECK(is_zero(CMat(d - expected)));

  // expansion by definition
  CMat k = kron<Scalar>(cmat({{0, 1}, {1, 0}}), cmat({{2, 0}, {0, 3}}));
  CMat hand = cmat({{0, 0, 2, 0}, {0, 0, 0, 3}, {2, 0, 0, 0}, {0, 3, 0, 0}});
  CHECK(is_zero(CMat(k - hand)));
}

TEST_CASE("kron mixed-product property") {
  std::mt19937_64 rng(17);
  std::uniform_int_distribution<int> entry(-2, 2);
  auto rand2 = [&] {
    CMat m(2, 2);
    for (int r = 0; r < 2; ++r)
      for (int c = 0; c < 2; ++c) m(r, c) = Scalar(entry(rng));
    return m;
  };
  for (int trial = 0; trial < 20; ++trial) {
    CMat a = rand2(), b = rand2(), c = rand2(), d = rand2();
    CMat lhs = sparse_mul(kron<Scalar>(a, b), kron<Scalar>(c, d));
    CMat rhs = kron<Scalar>(sparse_mul(a, c), sparse_mul(b, d));
    CHECK(is_zero(CMat(lhs - rhs)));
  }
}

TEST_CASE("solver, determinant and inverse") {
  CMat a = cmat({{2, 1}, {1, 1}});
  CHECK(det(a) == Scalar(1));
  CHECK(is_zero(CMat(sparse_mul(a, inverse(a)) - identity(2))));
  ExactSolver solver(a);
  CMat x = solver.solve(cmat({{3}, {2}}));
  CHECK(x(0, 0) == Scalar(1));
  CHECK(x(1, 0) == Scalar(1));
  // inconsistent system
  ExactSolver bad(cmat({{1, 1}, {2, 2}}));
  CHECK_THROWS_AS((void)bad.solve(cmat({{1}, {0}})), error);
}

TEST_CASE("minimal polynomial") {
  auto mu = minimal_polynomial(identity(3));
  REQUIRE(mu.size() == 2); // t - 1
  CHECK(mu[0] == Scalar(-1));
  CHECK(mu[1] == Scalar(1));
  auto mu2 = minimal_polynomial(cmat({{0, 1}, {1, 0}}));
  REQUIRE(mu2.size() == 3); // t^2 - 1
  CHECK(mu2[0] == Scalar(-1));
  CHECK(mu2[1] == Scalar(0));
  CHECK(mu2[2] == Scalar(1));
}
