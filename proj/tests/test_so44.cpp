#include <doctest.h>

#include "repkit/so44.hpp"

using namespace repkit;

namespace {

const LieAlgebraBasis& alg() {
  static LieAlgebraBasis a = build_so44();
  return a;
}

} // namespace

TEST_CASE("basis: dimension, defining relation, closure") {
  CHECK(alg().dim() == 28);
  CHECK(alg().basis().size() == 28);
  for (const auto& b : alg().basis())
    CHECK(LieAlgebraBasis::satisfies_defining_relation(b));
  // closure was validated during construction; expand rejects outsiders
  CMat outside = CMat::Constant(8, 8, Scalar(0));
  outside(0, 0) = Scalar(1);
  CHECK_THROWS_AS((void)alg().expand(outside), error);
}

TEST_CASE("bracket table: antisymmetry and Jacobi") {
  for (int i = 0; i < 28; ++i)
    for (int j = 0; j < i; ++j) {
      CMat lhs = LieAlgebraBasis::bracket(alg().basis()[i], alg().basis()[j]);
      CMat rhs = LieAlgebraBasis::bracket(alg().basis()[j], alg().basis()[i]);
      CHECK(is_zero(CMat(lhs + rhs)));
    }
  CHECK(alg().jacobi_holds());
}

TEST_CASE("k0 generators: so(3) relations with the doubled normalization") {
  K0Generators gens = k0_generators();
  for (int i = 0; i < 4; ++i) {
    const auto& [x, y, z] = gens.triples[i];
    // oracle: direct integer matrix products
    CHECK(is_zero(CMat(LieAlgebraBasis::bracket(x, y) - Scalar(2) * z)));
    CHECK(is_zero(CMat(LieAlgebraBasis::bracket(y, z) - Scalar(2) * x)));
    CHECK(is_zero(CMat(LieAlgebraBasis::bracket(z, x) - Scalar(2) * y)));
  }
  // distinct summands commute
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      if (i == j) continue;
      for (int a = 0; a < 3; ++a)
        for (int b = 0; b < 3; ++b)
          CHECK(is_zero(
              LieAlgebraBasis::bracket(gens.triples[i][a], gens.triples[j][b])));
    }
  // so(3)_3 repeats the so(3)_1 pattern inside the C block
  const CMat& x1 = gens.triples[0][0];
  const CMat& x3 = gens.triples[2][0];
  for (int r = 0; r < 4; ++r)
    for (int c = 0; c < 4; ++c) CHECK(x3(4 + r, 4 + c) == x1(r, c));
  for (int r = 0; r < 4; ++r)
    for (int c = 0; c < 4; ++c) CHECK(x3(r, c).is_zero());
}

TEST_CASE("conj_map") {
  AlgebraMap id = conj_map(alg(), identity(8), "id");
  CHECK(is_zero(CMat(id.matrix - identity(28))));
  // conjugation by a matrix that does not stabilize the algebra fails
  CMat bad = identity(8);
  bad(0, 1) = Scalar(1);
  CHECK_THROWS_AS((void)conj_map(alg(), bad, "bad"), error);
}

TEST_CASE("the five maps are automorphisms") {
  std::vector<AlgebraMap> maps{map_x12(alg()), map_x34(alg()), map_swap(alg()),
                               map_cartan(alg()), phi_1234(alg())};
  for (const auto& m : maps) {
    CAPTURE(m.name);
    auto report = verify_automorphism(alg(), m);
    CHECK(report.ok());
    // automorphisms preserve the defining relation
    for (int k = 0; k < 28; ++k) {
      CMat image = alg().from_coords(CVec(m.matrix.col(k)));
      CHECK(LieAlgebraBasis::satisfies_defining_relation(image));
    }
  }
}

TEST_CASE("a perturbed map is not an automorphism") {
  AlgebraMap broken = map_x12(alg());
  broken.matrix.col(12) = -broken.matrix.col(12); // flip one B-block image
  auto report = verify_automorphism(alg(), broken);
  CHECK(!report.ok());
  CHECK(!report.violations.empty());
}

TEST_CASE("induced permutations") {
  auto perm = [&](const AlgebraMap& m) { return induced_permutation(alg(), m); };
  CHECK(perm(map_x12(alg())) == std::array<int, 4>{1, 0, 2, 3});
  CHECK(perm(map_x34(alg())) == std::array<int, 4>{0, 1, 3, 2});
  CHECK(perm(map_swap(alg())) == std::array<int, 4>{2, 3, 0, 1});
  CHECK(perm(map_cartan(alg())) == std::array<int, 4>{0, 1, 2, 3});
  CHECK(perm(phi_1234(alg())) == std::array<int, 4>{1, 2, 3, 0});
  // a map that smears a summand across blocks is flagged
  CMat smear = identity(28);
  smear(6, 0) = Scalar(1); // A-block generator picks up a C-block component
  AlgebraMap broken{"smear", std::move(smear)};
  CHECK_THROWS_AS((void)induced_permutation(alg(), broken), error);
}

TEST_CASE("the cyclic map phi_1234") {
  AlgebraMap phi = phi_1234(alg());
  K0Generators gens = k0_generators();
  // X_i -> X_{i+1} cyclically, and likewise for Y and Z
  for (int i = 0; i < 4; ++i)
    for (int k = 0; k < 3; ++k) {
      CVec image = CVec(phi.matrix * alg().expand(gens.triples[i][k]));
      CVec target = alg().expand(gens.triples[(i + 1) % 4][k]);
      CHECK(is_zero(CMat(image - target)));
    }
  // the first listed B pair: identity block maps to minus identity block
  CMat b_identity = CMat::Constant(8, 8, Scalar(0));
  for (int k = 0; k < 4; ++k) {
    b_identity(k, 4 + k) = Scalar(1);
    b_identity(4 + k, k) = Scalar(1);
  }
  CVec image = CVec(phi.matrix * alg().expand(b_identity));
  CHECK(is_zero(CMat(image + alg().expand(b_identity))));
  // invertible
  CHECK(!det(phi.matrix).is_zero());
  // the linear-map order is finite (reported, not pinned)
  CHECK(map_order(phi) > 0);
}

TEST_CASE("s4 generation") {
  CHECK(s4_generation_check({{1, 0, 2, 3}, {1, 2, 3, 0}}) == 24);
  CHECK(s4_generation_check({{0, 1, 2, 3}}) == 1);
  // without the 4-cycle the three involutions only give a group of order 8
  CHECK(s4_generation_check({{1, 0, 2, 3}, {0, 1, 3, 2}, {2, 3, 0, 1}}) == 8);
  // the five constructed maps generate the full S4
  std::vector<std::array<int, 4>> perms;
  for (const auto& m : {map_x12(alg()), map_x34(alg()), map_swap(alg()),
                        map_cartan(alg()), phi_1234(alg())})
    perms.push_back(induced_permutation(alg(), m));
  CHECK(s4_generation_check(perms) == 24);
}

TEST_CASE("cartan involution fixes k0 and negates p0") {
  AlgebraMap cartan = map_cartan(alg());
  // A- and C-block coordinates (0..11) fixed, B-block (12..27) negated
  for (int k = 0; k < 28; ++k) {
    CVec e = CVec::Constant(28, Scalar(0));
    e(k) = Scalar(1);
    CVec image = CVec(cartan.matrix * e);
    for (int r = 0; r < 28; ++r) {
      Scalar expected = r == k ? (k < 12 ? Scalar(1) : Scalar(-1)) : Scalar(0);
      CHECK(image(r) == expected);
    }
  }
}
