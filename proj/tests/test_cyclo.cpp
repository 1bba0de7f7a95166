#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "emcg/cyclo.hpp"

using namespace emcg;

TEST_CASE("prime gate") {
  CHECK(is_odd_prime_at_least_5(5));
  CHECK(is_odd_prime_at_least_5(13));
  CHECK_FALSE(is_odd_prime_at_least_5(2));
  CHECK_FALSE(is_odd_prime_at_least_5(3));
  CHECK_FALSE(is_odd_prime_at_least_5(9));
  CHECK_THROWS_AS(CycloElement(4), std::invalid_argument);
}

TEST_CASE("root of unity basics") {
  for (long p : {5L, 7L, 11L, 13L}) {
    CHECK(CycloElement::q_pow(p, p) == CycloElement::one(p));
    CHECK(CycloElement::q_pow(p, -1) == CycloElement::q_pow(p, p - 1));
    CHECK(CycloElement::q_pow(p, 1).pow(p) == CycloElement::one(p));
    // A = -q^{(p+1)/2} has order 2p
    CHECK(CycloElement::a_pow(p, 2) == CycloElement::q_pow(p, 1));
    CHECK(CycloElement::a_pow(p, 2 * p) == CycloElement::one(p));
    CHECK(CycloElement::a_pow(p, p) != CycloElement::one(p));
  }
}

TEST_CASE("ring axioms on sampled elements") {
  const long p = 7;
  auto e = [&](long a, long b, long c) {
    CycloElement x = CycloElement::q_pow(p, a) + CycloElement::q_pow(p, b);
    return x + CycloElement::kappa_pow(p, 1) * CycloElement::from_integer(p, c);
  };
  CycloElement x = e(1, 3, 2), y = e(2, 5, -1), z = e(0, 4, 3);
  CHECK(x * y == y * x);
  CHECK((x * y) * z == x * (y * z));
  CHECK(x * (y + z) == x * y + x * z);
  CHECK(x * CycloElement::one(p) == x);
  CHECK(x + CycloElement::zero(p) == x);
  CHECK(x - x == CycloElement::zero(p));
}

TEST_CASE("kappa powers") {
  for (long p : {5L, 7L, 11L, 13L}) {
    CycloElement k = CycloElement::kappa_pow(p, 1);
    CHECK(k * k == CycloElement::a_pow(p, -6 - p * (p + 1) / 2));
    CHECK(k * k == CycloElement::kappa_squared(p));
    CHECK(CycloElement::kappa_pow(p, 3) == k * k * k);
    CHECK(CycloElement::kappa_pow(p, -1) * k == CycloElement::one(p));
  }
  // p=5: kappa^4 = q^{-21} = q^4
  CHECK(CycloElement::kappa_pow(5, 4) == CycloElement::q_pow(5, 4));
}

TEST_CASE("twist eigenvalues") {
  CHECK(palette_max(5) == 3);
  for (long p : {5L, 7L, 11L, 13L}) {
    CHECK(mu_twist(p, 0) == CycloElement::one(p));
    // color 2: (-A)^8 = q^4 for every p
    CHECK(mu_twist(p, 2) == CycloElement::q_pow(p, 4));
  }
  CHECK(mu_twist(5, 1) == CycloElement::a_pow(5, 3).negate());
  CHECK_THROWS_AS(mu_twist(5, 4), std::invalid_argument);
  CHECK_THROWS_AS(mu_twist(5, -1), std::invalid_argument);
}

TEST_CASE("scalar relations") {
  // c=0: tt6 = q^{-6-p(p+1)/2}
  for (long p : {5L, 7L, 11L, 13L}) {
    ScalarRelations r0 = scalar_relations(p, 0);
    CHECK(r0.tt6 == CycloElement::q_pow(p, -6 - p * (p + 1) / 2));
    CHECK(r0.half == CycloElement::one(p));
    for (long c = 0; c <= palette_max(p); ++c) {
      ScalarRelations r = scalar_relations(p, c);
      CHECK(r.tt3 * r.tt3 == r.tt6);
      CHECK(r.tt3 == CycloElement::kappa_squared(p) * r.half);
      CHECK(r.tt6 ==
            CycloElement::q_pow(p, -6 + 2 * c * (c + 1) - p * (p + 1) / 2));
    }
  }
  CHECK(scalar_relations(5, 0).tt6 == CycloElement::q_pow(5, 4));
  CHECK_THROWS_AS(scalar_relations(5, 4), std::invalid_argument);
}

TEST_CASE("reduction mod h") {
  for (long p : {5L, 7L, 11L, 13L}) {
    auto q1 = CycloElement::q_pow(p, 1).reduce_mod_h();
    CHECK(q1.base == 1);
    CHECK(q1.kappa == 0);
    auto k2 = CycloElement::kappa_squared(p).reduce_mod_h();
    long expected = (p * (p + 1) / 2) % 2 == 0 ? 1 : p - 1;
    CHECK(k2.base == expected);
    CHECK(k2.kappa == 0);
  }
  // p=5: kappa^2 = A^9 = -q^2, so q -> 1 gives -1 = 4 in F_5
  CHECK(CycloElement::kappa_squared(5).reduce_mod_h().base == 4);
}
