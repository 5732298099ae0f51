#include <doctest.h>

#include <set>

#include "repkit/fixtures.hpp"
#include "repkit/rep.hpp"

using namespace repkit;

namespace {

// the 2-dimensional irrep of Q8, realized by inducing the i-valued character
// of the cyclic subgroup <x>
MatrixRep q8_2dim_irrep() {
  auto q8 = build_group("Q8");
  Subgroup z4 = Subgroup::generated(q8, {*q8->index_of("x")});
  MatrixRep chi = cyclic_character(z4, *q8->index_of("x"), Scalar::i());
  return induce(chi);
}

} // namespace

TEST_CASE("conjugate_rep") {
  MatrixRep rho = fixture_rep("q8-nontrivial");
  auto q8 = rho.parent();
  // conjugation by the identity and by central elements changes nothing
  for (const char* label : {"1", "-1"}) {
    MatrixRep conj = conjugate_rep(rho, *q8->index_of(label));
    for (int e : rho.domain().elements()) CHECK(conj.at(e)(0, 0) == rho.at(e)(0, 0));
  }
  // conjugating an irreducible rep of the full group preserves the character
  MatrixRep two = q8_2dim_irrep();
  MatrixRep two_x = conjugate_rep(two, *q8->index_of("x"));
  auto chi1 = character(two), chi2 = character(two_x);
  // the character is a class function, so conjugation permutes nothing
  for (size_t k = 0; k < chi1.size(); ++k) CHECK(chi1[k] == chi2[k]);
  CHECK(!intertwiners(two, two_x).empty());
  // conjugation leaving the subgroup is an error
  auto d4 = build_group("D4");
  Subgroup refl = Subgroup(d4, {d4->identity(), *d4->index_of("s")});
  MatrixRep sgn = cyclic_character(refl, *d4->index_of("s"), Scalar(-1));
  CHECK_THROWS_AS((void)conjugate_rep(sgn, *d4->index_of("r^1")), error);
}

TEST_CASE("induce: dimensions and block structure") {
  MatrixRep triv = fixture_rep("q8-trivial");
  MatrixRep ind = induce(triv);
  CHECK(ind.dim() == 4); // [Q8 : Z2] * 1
  REQUIRE(ind.induced());
  CHECK(ind.induced()->transversal.size() == 4);

  // ind_G^G rho = rho
  MatrixRep two = q8_2dim_irrep();
  MatrixRep again = induce(two);
  CHECK(again.dim() == two.dim());
  for (int e = 0; e < two.parent()->order(); ++e)
    CHECK(is_zero(CMat(again.at(e) - two.at(e))));

  // ind_e^{Z2} trivial = 2-dim regular rep
  auto z2 = cyclic_group(2);
  MatrixRep reg = induce(trivial_rep<Scalar>(Subgroup::trivial(z2)));
  CHECK(reg.dim() == 2);
  CHECK(reg.at(1)(0, 0).is_zero()); // the non-identity acts by the swap
  CHECK(reg.at(1)(1, 0) == Scalar(1));
}

TEST_CASE("induced character matches the character formula exactly") {
  for (const auto& model : frobenius_suite()) {
    CAPTURE(model.name);
    MatrixRep ind = induce(model.rep);
    auto chi = character(ind);
    auto formula = induced_character_formula(model.rep);
    for (size_t k = 0; k < chi.size(); ++k) CHECK(chi[k] == formula[k]);
    // the induced character vanishes off elements conjugate into the subgroup
    auto g = model.rep.parent();
    CosetTransversal t = cosets(g, model.rep.domain());
    for (int e = 0; e < g->order(); ++e) {
      bool meets = false;
      for (int r : t.reps)
        if (model.rep.domain().contains(g->conj(r, e))) meets = true;
      if (!meets) CHECK(chi[e].is_zero());
    }
  }
}

TEST_CASE("intertwiners and irreducibility") {
  MatrixRep two = q8_2dim_irrep();
  CHECK(intertwiners(two, two).size() == 1); // Schur
  CHECK(is_irreducible(two));

  auto z2 = cyclic_group(2);
  MatrixRep triv = trivial_rep<Scalar>(Subgroup::full(z2));
  MatrixRep sgn = cyclic_character(Subgroup::full(z2), 1, Scalar(-1));
  CHECK(intertwiners(triv, sgn).empty());
  CHECK(is_irreducible(triv));

  MatrixRep ind = induce(fixture_rep("q8-nontrivial"));
  CHECK(intertwiners(ind, ind).size() == 4); // End of 2 copies of the 2-dim irrep
  CHECK(!is_irreducible(ind));
}

TEST_CASE("decompose: quaternion trivial case") {
  MatrixRep ind = induce(fixture_rep("q8-trivial"));
  auto report = decompose(ind);
  REQUIRE(report.components.size() == 4);
  CHECK(report.classes.size() == 4); // pairwise inequivalent
  std::set<std::vector<std::string>> patterns;
  for (const auto& comp : report.components) {
    CHECK(comp.basis.cols() == 1);
    std::vector<std::string> sig;
    for (int r = 0; r < 4; ++r) sig.push_back(comp.basis(r, 0).str());
    patterns.insert(sig);
  }
  // sign patterns of the paper's four one-dimensional pieces, up to order
  std::set<std::vector<std::string>> expected = {
      {"1", "1", "1", "1"},
      {"1", "1", "-1", "-1"},
      {"1", "-1", "1", "-1"},
      {"1", "-1", "-1", "1"}};
  CHECK(patterns == expected);
}

TEST_CASE("decompose: quaternion nontrivial case") {
  MatrixRep ind = induce(fixture_rep("q8-nontrivial"));
  auto report = decompose(ind);
  REQUIRE(report.components.size() == 2);
  CHECK(report.classes.size() == 1); // equivalent pair
  for (const auto& comp : report.components) {
    CHECK(comp.basis.cols() == 2);
    MatrixRep sub = restrict_to_subspace(ind, comp.basis);
    CHECK(is_irreducible(sub));
  }
  // an explicit intertwiner between the two components, verified exactly
  MatrixRep a = restrict_to_subspace(ind, report.components[0].basis);
  MatrixRep b = restrict_to_subspace(ind, report.components[1].basis);
  auto hom = intertwiners(a, b);
  REQUIRE(hom.size() == 1);
  for (int e = 0; e < 8; ++e)
    CHECK(is_zero(CMat(b.at(e) * hom[0] - hom[0] * a.at(e))));
}

TEST_CASE("decompose: irreducible input and determinism") {
  MatrixRep two = q8_2dim_irrep();
  auto report = decompose(two);
  CHECK(report.components.size() == 1);
  CHECK(report.classes.size() == 1);

  MatrixRep ind = induce(fixture_rep("q8-nontrivial"));
  DecomposeOptions opts;
  opts.seed = 99;
  auto r1 = decompose(ind, opts);
  auto r2 = decompose(ind, opts);
  REQUIRE(r1.components.size() == r2.components.size());
  for (size_t k = 0; k < r1.components.size(); ++k)
    CHECK(is_zero(CMat(r1.components[k].basis - r2.components[k].basis)));
}

TEST_CASE("decompose: components are invariant and exhaustive") {
  for (const char* name : {"q8-trivial", "q8-nontrivial", "z4-over-z2", "d4-z4-i"}) {
    CAPTURE(name);
    MatrixRep ind = induce(fixture_rep(name));
    auto report = decompose(ind);
    int total = 0;
    for (const auto& comp : report.components) {
      total += static_cast<int>(comp.basis.cols());
      // restriction succeeding means rho(g) B stays inside span(B) exactly
      MatrixRep sub = restrict_to_subspace(ind, comp.basis);
      CHECK(is_irreducible(sub));
    }
    CHECK(total == ind.dim());
  }
}

TEST_CASE("frobenius_check") {
  auto [lhs, rhs] = frobenius_check(fixture_rep("q8-nontrivial"));
  CHECK(lhs == 4);
  CHECK(rhs == 4);

  MatrixRep two = q8_2dim_irrep(); // G = G0: both sides are 1
  auto [l2, r2] = frobenius_check(two);
  CHECK(l2 == 1);
  CHECK(r2 == 1);

  auto [l3, r3] = frobenius_check(fixture_rep("z4-over-z2"));
  CHECK(l3 == 2);
  CHECK(r3 == 2);
}

TEST_CASE("cyclic_decompose") {
  auto z4 = cyclic_group(4);
  Subgroup z2(z4, {0, 2});
  MatrixRep chi = cyclic_character(z2, 2, Scalar(-1));
  CMat s(1, 1);
  s(0, 0) = -Scalar::i(); // normalized: chi(g^2) S^2 = (-1)(-1) = 1
  auto projectors = cyclic_decompose(chi, 1, s, 2);
  REQUIRE(projectors.size() == 2);
  CMat sum = CMat::Constant(2, 2, Scalar(0));
  for (const auto& p : projectors) {
    CHECK(is_zero(CMat(sparse_mul(p, p) - p))); // idempotent
    sum += p;
  }
  CHECK(is_zero(CMat(sum - identity(2))));
  CHECK(is_zero(sparse_mul(projectors[0], projectors[1])));
  // each projector has rank 1
  CHECK(rank_of(projectors[0]) == 1);
  CHECK(rank_of(projectors[1]) == 1);

  // n = 1: the single identity projector
  MatrixRep full = cyclic_character(Subgroup::full(z4), 1, Scalar::i());
  auto single = cyclic_decompose(full, 0, identity(1), 1);
  REQUIRE(single.size() == 1);
  CHECK(is_zero(CMat(single[0] - identity(1))));

  // an unnormalized S violates the hypothesis
  CMat bad(1, 1);
  bad(0, 0) = Scalar(1);
  CHECK_THROWS_AS((void)cyclic_decompose(chi, 1, bad, 2), error);
}

TEST_CASE("g2_irreducibility_check") {
  for (const auto& model : g2_suite()) {
    CAPTURE(model.name);
    auto res = g2_irreducibility_check(model.rep);
    CHECK(res.ok);
  }
  // S3 over Z3 with a faithful character: G2 = Z3 and the induced rep is the
  // 2-dimensional irrep
  auto res = g2_irreducibility_check(fixture_rep("s3-z3-omega"));
  CHECK(res.g2_elements.size() == 3);
  CHECK(res.component_count == 1);
  // D4 over Z4 with the i-valued character: conjugation flips the character
  auto res2 = g2_irreducibility_check(fixture_rep("d4-z4-i"));
  CHECK(res2.g2_elements.size() == 4);
}

TEST_CASE("character inner product multiplicities") {
  MatrixRep ind = induce(fixture_rep("q8-nontrivial"));
  MatrixRep two = q8_2dim_irrep();
  CHECK(character_inner_product(ind, two) == Scalar(2));
  CHECK(character_inner_product(two, two) == Scalar(1));
  MatrixRep triv_ind = induce(fixture_rep("q8-trivial"));
  CHECK(character_inner_product(triv_ind, two).is_zero());
}

TEST_CASE("float mode: validation, induction and decomposition") {
  auto q8 = build_group("Q8");
  Subgroup z = center(q8);
  std::vector<FMat> mats(2);
  mats[z.pos(*q8->index_of("1"))] = FMat::Identity(1, 1);
  mats[z.pos(*q8->index_of("-1"))] = -FMat::Identity(1, 1);
  FloatRep sgn(z, std::move(mats), 1e-9);
  FloatRep ind = induce(sgn);
  CHECK(ind.dim() == 4);
  CHECK(intertwiners(ind, ind, 1e-9).size() == 4);
  DecomposeOptions opts;
  opts.tol = 1e-9;
  auto report = decompose(ind, opts);
  CHECK(report.components.size() == 2);
  CHECK(report.classes.size() == 1);
  for (const auto& comp : report.components) CHECK(comp.basis.cols() == 2);
}
