#include <doctest.h>

#include <random>

#include "repkit/scalar.hpp"

using namespace repkit;

namespace {

Scalar random_gaussian(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> num(-6, 6), den(1, 5);
  return Scalar(mpq_class(num(rng), den(rng)), mpq_class(num(rng), den(rng)));
}

} // namespace

TEST_CASE("field laws hold exactly for random Gaussian rationals") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    Scalar a = random_gaussian(rng), b = random_gaussian(rng), c = random_gaussian(rng);
    CHECK((a + b) + c == a + (b + c));
    CHECK(a + b == b + a);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    if (!a.is_zero()) CHECK(a * a.inverse() == Scalar(1));
  }
}

TEST_CASE("roots of unity have exact order for N up to 24") {
  for (int n = 1; n <= 24; ++n) {
    Scalar z = Scalar::root_of_unity(n, 1);
    Scalar acc(1);
    for (int k = 1; k < n; ++k) {
      acc *= z;
      CHECK(acc != Scalar(1)); // xi_n^k != 1 for 0 < k < n
    }
    acc *= z;
    CHECK(acc == Scalar(1)); // xi_n^n = 1
  }
}

TEST_CASE("mixed-conductor arithmetic stays exact") {
  Scalar w = Scalar::root_of_unity(3, 1);
  CHECK(w + w * w == Scalar(-1)); // 1 + w + w^2 = 0
  CHECK((w + w * w).is_rational());
  Scalar s = w - w * w; // i sqrt(3), lives in Q(zeta_12)
  CHECK(!s.is_gaussian());
  CHECK(s * s == Scalar(-3));
  CHECK(s * s.inverse() == Scalar(1));
  Scalar mixed = Scalar::root_of_unity(8, 1) * Scalar::root_of_unity(3, 1);
  CHECK(mixed == Scalar::root_of_unity(24, 11)); // 3/24 + 8/24
}

TEST_CASE("conjugation is a field automorphism fixing the rationals") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 50; ++trial) {
    Scalar a = random_gaussian(rng) * Scalar::root_of_unity(6, trial % 6);
    Scalar b = random_gaussian(rng);
    CHECK((a * b).conj() == a.conj() * b.conj());
    CHECK((a + b).conj() == a.conj() + b.conj());
    Scalar norm = a * a.conj();
    CHECK(norm == norm.conj());
  }
  CHECK(Scalar::i().conj() == -Scalar::i());
}

TEST_CASE("root-of-unity detection") {
  Scalar v = Scalar(mpq_class(3, 2)) * Scalar::root_of_unity(8, 3);
  auto form = v.as_root_times_gaussian();
  REQUIRE(form.has_value());
  CHECK(form->N == 8);
  CHECK(form->k == 3);
  CHECK(form->coef_re == mpq_class(3, 2));
  CHECK(form->coef_im == 0);

  CHECK(Scalar(-1).root_exponent(2) == 1);
  CHECK(Scalar::i().root_exponent(4) == 1);
  CHECK(Scalar(mpq_class(1, 2)).root_exponent(4) == std::nullopt);
}

TEST_CASE("principal roots") {
  CHECK(principal_nth_root(Scalar(4), 2) == Scalar(2));
  CHECK(principal_nth_root(Scalar(-1), 2) == Scalar::i());
  CHECK(principal_nth_root(Scalar(1), 3) == Scalar(1));
  // principal cube root of -8: 2 * xi_6
  CHECK(principal_nth_root(Scalar(-8), 3) == Scalar(2) * Scalar::root_of_unity(6, 1));
  CHECK_THROWS_AS((void)principal_nth_root(Scalar(2) + Scalar::i(), 2), error);
  CHECK_THROWS_AS((void)principal_nth_root(Scalar(3), 2), error);
}

TEST_CASE("total order is consistent") {
  Scalar a(1), b = Scalar::i();
  CHECK(Scalar::compare(a, a) == 0);
  CHECK(Scalar::compare(a, b) == -Scalar::compare(b, a));
}
