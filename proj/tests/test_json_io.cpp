#include <doctest.h>

#include "repkit/fixtures.hpp"
#include "repkit/json_io.hpp"

using namespace repkit;

TEST_CASE("scalar JSON forms") {
  // exact Gaussian form
  Json g = scalar_to_json(Scalar(mpq_class(1, 2), mpq_class(-3, 4)));
  CHECK(g["re"] == "1/2");
  CHECK(g["im"] == "-3/4");
  auto back = scalar_from_json(g);
  CHECK(std::get<Scalar>(back) == Scalar(mpq_class(1, 2), mpq_class(-3, 4)));

  // tagged root form for values outside Q(i)
  Scalar v = Scalar(mpq_class(2, 3)) * Scalar::root_of_unity(8, 3);
  Json r = scalar_to_json(v);
  REQUIRE(r.contains("root"));
  CHECK(r["root"]["N"] == 8);
  CHECK(r["root"]["k"] == 3);
  CHECK(std::get<Scalar>(scalar_from_json(r)) == v);

  // float form round-trips as float
  Json f = scalar_to_json(CD(0.5, -1.25));
  auto fb = scalar_from_json(f);
  CHECK(std::get<CD>(fb) == CD(0.5, -1.25));

  CHECK_THROWS_AS((void)scalar_from_json(Json{{"re", "1/2"}, {"im", 3.0}}), error);
  CHECK_THROWS_AS((void)scalar_from_json(Json{{"re", "x/y"}, {"im", "0"}}), error);
}

TEST_CASE("matrix JSON rejects mixed modes") {
  Json rows = Json::array();
  rows.push_back(Json::array({Json{{"re", "1"}, {"im", "0"}}, Json{{"re", 1.0}, {"im", 0.0}}}));
  CHECK_THROWS_AS((void)matrix_from_json(rows), error);
}

TEST_CASE("group JSON round trip") {
  auto q8 = build_group("Q8");
  Json j = group_to_json(*q8);
  GroupPtr back = group_from_json(j);
  CHECK(back->order() == 8);
  CHECK(back->labels() == q8->labels());
  for (int a = 0; a < 8; ++a)
    for (int b = 0; b < 8; ++b) CHECK(back->mul(a, b) == q8->mul(a, b));
  // malformed tables are input errors
  Json bad = j;
  bad["table"][0][0] = 99;
  CHECK_THROWS_AS((void)group_from_json(bad), error);
}

TEST_CASE("rep JSON round trip keeps the subgroup and matrices") {
  MatrixRep rho = fixture_rep("q8-nontrivial");
  Json j = rep_to_json(rho);
  CHECK(j.contains("subgroup"));
  auto back = rep_from_json(j);
  REQUIRE(std::holds_alternative<MatrixRep>(back));
  const auto& b = std::get<MatrixRep>(back);
  CHECK(b.dim() == 1);
  CHECK(b.domain().size() == 2);
  for (int e : b.domain().elements()) CHECK(b.at(e)(0, 0) == rho.at(e)(0, 0));
}

TEST_CASE("cocycle table JSON round trip") {
  MatrixRep sgn = fixture_rep("q8-nontrivial");
  auto fam = build_family(sgn, Subgroup::full(sgn.parent()));
  CocycleTable t = beta_table(fam);
  Json j = table_to_json(t);
  CocycleTable back = table_from_json(j);
  CHECK(back.n == t.n);
  CHECK(back.m == t.m);
  CHECK(back.exp == t.exp);
}

TEST_CASE("decomposition report JSON carries lambda families") {
  MatrixRep ind = induce(fixture_rep("q8-nontrivial"));
  auto report = decompose(ind);
  Json j = report_to_json(report);
  CHECK(j["dim"] == 4);
  REQUIRE(j["components"].size() == 2);
  CHECK(j["components"][0].contains("lambda"));
  CHECK(j["classes"].size() == 1);
}

TEST_CASE("structure constants JSON shape") {
  LieAlgebraBasis alg = build_so44();
  Json j = structure_constants_to_json(alg);
  CHECK(j["dim"] == 28);
  CHECK(j["basis"].size() == 28);
  CHECK(j["brackets"].contains("0,1"));
}

TEST_CASE("text rendering is non-empty and stable") {
  Json j{{"a", 1}, {"b", Json::array({1, 2})}};
  std::string t1 = render_text(j), t2 = render_text(j);
  CHECK(t1 == t2);
  CHECK(t1.find("a: 1") != std::string::npos);
}
