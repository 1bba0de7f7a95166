#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "emcg/parse.hpp"

using namespace emcg;

namespace {

bool same_word(const TwistWord& a, const TwistWord& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a.letters()[i].exponent != b.letters()[i].exponent) return false;
    if (a.letters()[i].curve.vec() != b.letters()[i].curve.vec()) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("letter names map to standard basis classes") {
  SymplecticSpace sp(2);
  TwistWord w = parse_word(sp, "m1 l2 m2^-1");
  REQUIRE(w.size() == 3);
  VecZ m1 = VecZ::Zero(4), l2 = VecZ::Zero(4), m2 = VecZ::Zero(4);
  m1(0) = 1;
  m2(1) = 1;
  l2(3) = 1;
  CHECK(w.letters()[0].curve.vec() == m1);
  CHECK(w.letters()[0].exponent == 1);
  CHECK(w.letters()[1].curve.vec() == l2);
  CHECK(w.letters()[2].curve.vec() == m2);
  CHECK(w.letters()[2].exponent == -1);
}

TEST_CASE("named word examples") {
  SymplecticSpace sp1(1);
  TwistWord mlm = parse_word(sp1, "m1 l1 m1");
  CHECK(mlm.size() == 3);
  CHECK(exponent_sum(mlm) == 3);

  TwistWord relator = parse_word(sp1, "(m1 l1)^6 0^-1");
  CHECK(relator.size() == 13);
  CHECK(exponent_sum(relator) == 11);
  CHECK(relator.letters().back().curve.is_zero());
  CHECK(relator.letters().back().exponent == -1);

  SymplecticSpace sp2(2);
  TwistWord alpha = parse_word(sp2, "[1,1;1,2]");
  REQUIRE(alpha.size() == 1);
  VecZ expected(4);
  expected << 1, 1, 1, 2;
  CHECK(alpha.letters()[0].curve.vec() == expected);
}

TEST_CASE("groups and exponents expand") {
  SymplecticSpace sp(1);
  CHECK(same_word(parse_word(sp, "(m1 l1)^2"), parse_word(sp, "m1 l1 m1 l1")));
  CHECK(same_word(parse_word(sp, "m1^-2"), parse_word(sp, "m1^-1 m1^-1")));
  CHECK(same_word(parse_word(sp, "(m1 l1)^-1"),
                  parse_word(sp, "l1^-1 m1^-1")));
  CHECK(parse_word(sp, "").empty());
}

TEST_CASE("round trip through the printer") {
  SymplecticSpace sp1(1);
  SymplecticSpace sp2(2);
  const char* samples[] = {"m1 l1 m1", "(m1 l1)^6 0^-1", "m1^-1 0 l1"};
  for (const char* text : samples) {
    TwistWord w = parse_word(sp1, text);
    CHECK(same_word(parse_word(sp1, print_word(w)), w));
    CHECK(print_word(parse_word(sp1, print_word(w))) == print_word(w));
  }
  TwistWord w2 = parse_word(sp2, "[1,1;1,2] m2 l1^-1");
  CHECK(same_word(parse_word(sp2, print_word(w2)), w2));
}

TEST_CASE("round trip on random words") {
  std::mt19937_64 rng(43);
  for (int genus = 1; genus <= 3; ++genus) {
    SymplecticSpace sp(genus);
    for (int t = 0; t < 20; ++t) {
      TwistWord w = random_word(sp, rng, 6);
      CHECK(same_word(parse_word(sp, print_word(w)), w));
    }
  }
}

TEST_CASE("errors carry positions") {
  SymplecticSpace sp(1);
  CHECK_THROWS_AS(parse_word(sp, "m2"), ParseError);     // out of range
  CHECK_THROWS_AS(parse_word(sp, "x1"), ParseError);     // unknown letter
  CHECK_THROWS_AS(parse_word(sp, "(m1"), ParseError);    // unbalanced
  CHECK_THROWS_AS(parse_word(sp, "m1^"), ParseError);    // missing exponent
  CHECK_THROWS_AS(parse_word(sp, "[1,2"), ParseError);   // unbalanced class
  CHECK_THROWS_AS(parse_word(sp, "[1;2;3]"), ParseError);
  try {
    parse_word(sp, "m1 x1");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.position >= 3);
  }
}

TEST_CASE("non-primitive classes are rejected unless permissive") {
  SymplecticSpace sp(1);
  CHECK_THROWS(parse_word(sp, "[2;4]"));
  CHECK_NOTHROW(parse_word(sp, "[2;4]", /*permissive=*/true));
}
