#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "emcg/mcg.hpp"
#include "emcg/parse.hpp"

using namespace emcg;

namespace {

MatZ mat2(long a, long b, long c, long d) {
  MatZ m(2, 2);
  m(0, 0) = a;
  m(0, 1) = b;
  m(1, 0) = c;
  m(1, 1) = d;
  return m;
}

}  // namespace

TEST_CASE("transvection examples genus 1") {
  SymplecticSpace sp(1);
  CurveClass zero(sp, VecZ::Zero(2));
  CHECK(transvection(zero).matrix() == MatZ::Identity(2, 2));

  VecZ m = VecZ::Zero(2), l = VecZ::Zero(2);
  m(0) = 1;
  l(1) = 1;
  // T_m: m -> m, l -> l + m; columns in basis (m, l)
  CHECK(transvection(CurveClass(sp, m)).matrix() == mat2(1, 1, 0, 0) + mat2(0, 0, 0, 1));
  CHECK(transvection(CurveClass(sp, m)).matrix() == mat2(1, 1, 0, 1));
  CHECK(transvection(CurveClass(sp, l)).matrix() == mat2(1, 0, -1, 1));
}

TEST_CASE("curve classes must be primitive unless permissive") {
  SymplecticSpace sp(1);
  VecZ v = VecZ::Zero(2);
  v(0) = 2;
  CHECK_THROWS_AS(CurveClass(sp, v), std::invalid_argument);
  CHECK_NOTHROW(CurveClass(sp, v, /*permissive=*/true));
}

TEST_CASE("T_alpha equals T_minus_alpha") {
  SymplecticSpace sp(2);
  std::mt19937_64 rng(17);
  for (int t = 0; t < 40; ++t) {
    VecZ alpha = random_primitive_class(sp, rng);
    CHECK(transvection(CurveClass(sp, alpha)).matrix() ==
          transvection(CurveClass(sp, VecZ(-alpha))).matrix());
  }
}

TEST_CASE("mapping class inverse and identity") {
  SymplecticSpace sp(2);
  for (std::uint64_t s = 0; s < 20; ++s) {
    MappingClass f(sp, random_symplectic(sp, s, 8));
    CHECK((f * f.inverse()).is_identity());
    CHECK((f.inverse() * f).is_identity());
  }
  MatZ bad = MatZ::Identity(4, 4);
  bad(0, 0) = 2;
  CHECK_THROWS_AS(MappingClass(sp, bad), std::invalid_argument);
}

TEST_CASE("word action examples") {
  SymplecticSpace sp(1);
  CHECK(word_action(TwistWord(sp)).is_identity());

  TwistWord mlm = parse_word(sp, "m1 l1 m1");
  TwistWord lml = parse_word(sp, "l1 m1 l1");
  CHECK(word_action(mlm).matrix() == word_action(lml).matrix());

  TwistWord relator = parse_word(sp, "(m1 l1)^6 0^-1");
  CHECK(word_action(relator).is_identity());
}

TEST_CASE("word action of inverse word") {
  SymplecticSpace sp(2);
  std::mt19937_64 rng(23);
  for (int t = 0; t < 30; ++t) {
    TwistWord w = random_word(sp, rng, 8);
    CHECK((word_action(w) * word_action(w.inverse())).is_identity());
    CHECK(word_action(w.concat(w.inverse())).is_identity());
  }
}

TEST_CASE("word action is multiplicative under concat") {
  SymplecticSpace sp(2);
  std::mt19937_64 rng(29);
  for (int t = 0; t < 30; ++t) {
    TwistWord a = random_word(sp, rng, 5);
    TwistWord b = random_word(sp, rng, 5);
    CHECK(word_action(a.concat(b)).matrix() ==
          MatZ(word_action(a).matrix() * word_action(b).matrix()));
  }
}

TEST_CASE("exponent sums") {
  SymplecticSpace sp(1);
  CHECK(exponent_sum(TwistWord(sp)) == 0);
  CHECK(exponent_sum(parse_word(sp, "(m1 l1)^6 0^-1")) == 11);
  CHECK(exponent_sum(parse_word(sp, "(m1 l1)^3")) == 6);
}

TEST_CASE("braid relation at higher genus") {
  SymplecticSpace sp(2);
  // adjacent curves with intersection number one satisfy the braid relation
  TwistWord aba = parse_word(sp, "m1 l1 m1");
  TwistWord bab = parse_word(sp, "l1 m1 l1");
  CHECK(word_action(aba).matrix() == word_action(bab).matrix());
}
