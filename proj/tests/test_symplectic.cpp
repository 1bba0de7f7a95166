#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "emcg/symplectic.hpp"

using namespace emcg;

namespace {

VecQ basis_vec(const SymplecticSpace& sp, std::initializer_list<long> coeffs) {
  VecQ v = VecQ::Zero(sp.dim());
  Eigen::Index i = 0;
  for (long c : coeffs) v(i++) = Rational(c);
  return v;
}

}  // namespace

TEST_CASE("intersection form conventions") {
  SymplecticSpace sp(2);
  CHECK(sp.dim() == 4);
  // m_i . l_i = +1, l_i . m_i = -1, everything else 0
  VecQ m1 = basis_vec(sp, {1, 0, 0, 0});
  VecQ m2 = basis_vec(sp, {0, 1, 0, 0});
  VecQ l1 = basis_vec(sp, {0, 0, 1, 0});
  CHECK(sp.pair(m1, l1) == Rational(1));
  CHECK(sp.pair(l1, m1) == Rational(-1));
  CHECK(sp.pair(m1, m2) == Rational(0));
  CHECK(sp.pair(m1, m1) == Rational(0));
  CHECK_THROWS_AS(SymplecticSpace(0), std::invalid_argument);
}

TEST_CASE("is_lagrangian") {
  SymplecticSpace sp1(1);
  CHECK(is_lagrangian(sp1, Subspace::span(basis_vec(sp1, {1, 0}))));
  MatQ both = MatQ::Identity(2, 2);
  CHECK_FALSE(is_lagrangian(sp1, Subspace::span(both)));

  SymplecticSpace sp2(2);
  MatQ gens = MatQ::Zero(4, 2);
  gens.col(0) = basis_vec(sp2, {1, 0, 0, 1});  // m1 + l2
  gens.col(1) = basis_vec(sp2, {0, 1, 1, 0});  // m2 + l1
  CHECK(is_lagrangian(sp2, Subspace::span(gens)));
  // flipping one sign breaks isotropy
  gens.col(1) = basis_vec(sp2, {0, 1, -1, 0});
  CHECK_FALSE(is_lagrangian(sp2, Subspace::span(gens)));
}

TEST_CASE("maslov examples genus 1") {
  SymplecticSpace sp(1);
  Lagrangian lm(sp, Subspace::span(basis_vec(sp, {1, 0})));
  Lagrangian ll(sp, Subspace::span(basis_vec(sp, {0, 1})));
  Lagrangian lml(sp, Subspace::span(basis_vec(sp, {1, 1})));

  CHECK(maslov(lm, lm, ll) == 0);
  CHECK(maslov(lm, ll, ll) == 0);
  CHECK(maslov(lm, lml, ll) == 1);
  CHECK(maslov(lml, lm, ll) == -1);
}

TEST_CASE("maslov vanishes when two arguments coincide") {
  for (int genus = 1; genus <= 3; ++genus) {
    SymplecticSpace sp(genus);
    for (std::uint64_t s = 0; s < 20; ++s) {
      Lagrangian a = random_lagrangian(sp, 101 + s);
      Lagrangian b = random_lagrangian(sp, 201 + s);
      CHECK(maslov(a, a, b) == 0);
      CHECK(maslov(a, b, b) == 0);
      CHECK(maslov(a, b, a) == 0);
    }
  }
}

TEST_CASE("maslov antisymmetry on random triples") {
  SymplecticSpace sp(2);
  for (std::uint64_t s = 0; s < 30; ++s) {
    Lagrangian a = random_lagrangian(sp, 3 * s);
    Lagrangian b = random_lagrangian(sp, 3 * s + 1);
    Lagrangian c = random_lagrangian(sp, 3 * s + 2);
    long base = maslov(a, b, c);
    CHECK(maslov(b, c, a) == base);
    CHECK(maslov(c, a, b) == base);
    CHECK(maslov(b, a, c) == -base);
    CHECK(maslov(a, c, b) == -base);
    CHECK(maslov(c, b, a) == -base);
  }
}

TEST_CASE("adapt_lagrangian standard case") {
  SymplecticSpace sp(2);
  Lagrangian std_l = Lagrangian::standard(sp);
  CHECK(adapt_lagrangian(std_l) == MatZ::Identity(4, 4));
}

TEST_CASE("adapt_lagrangian postconditions") {
  SymplecticSpace sp1(1);
  Lagrangian ll(sp1, Subspace::span(VecQ(MatQ::Identity(2, 2).col(1))));
  MatZ m = adapt_lagrangian(ll);
  CHECK(is_symplectic_matrix(sp1, m));
  // first g columns span lambda
  CHECK(Subspace::span(to_rational(MatZ(m.leftCols(1)))) == ll.subspace());

  SymplecticSpace sp2(2);
  MatQ gens = MatQ::Zero(4, 2);
  gens.col(0) = basis_vec(sp2, {1, 0, 0, 1});
  gens.col(1) = basis_vec(sp2, {0, 1, 1, 0});
  Lagrangian lam(sp2, Subspace::span(gens));
  MatZ m2 = adapt_lagrangian(lam);
  CHECK(is_symplectic_matrix(sp2, m2));
  CHECK(Subspace::span(to_rational(MatZ(m2.leftCols(2)))) == lam.subspace());
}

TEST_CASE("adapt_lagrangian on random lagrangians") {
  for (int genus = 1; genus <= 4; ++genus) {
    SymplecticSpace sp(genus);
    for (std::uint64_t s = 0; s < 25; ++s) {
      Lagrangian lam = random_lagrangian(sp, 7000 + s);
      MatZ m = adapt_lagrangian(lam);
      CHECK(is_symplectic_matrix(sp, m));
      CHECK(Subspace::span(to_rational(MatZ(m.leftCols(genus)))) ==
            lam.subspace());
    }
  }
}

TEST_CASE("random_symplectic") {
  SymplecticSpace sp(2);
  CHECK(random_symplectic(sp, 42, 0) == MatZ::Identity(4, 4));
  for (std::uint64_t s = 0; s < 20; ++s)
    CHECK(is_symplectic_matrix(sp, random_symplectic(sp, s, 8)));
  CHECK(random_symplectic(sp, 9, 8) == random_symplectic(sp, 9, 8));
}

TEST_CASE("random_lagrangian is lagrangian and deterministic") {
  SymplecticSpace sp(3);
  for (std::uint64_t s = 0; s < 20; ++s) {
    Lagrangian lam = random_lagrangian(sp, s);
    CHECK(is_lagrangian(sp, lam.subspace()));
  }
  CHECK(random_lagrangian(sp, 5) == random_lagrangian(sp, 5));
}

TEST_CASE("transvection_matrix preserves the form") {
  SymplecticSpace sp(2);
  std::mt19937_64 rng(13);
  for (int t = 0; t < 30; ++t) {
    VecZ alpha = random_primitive_class(sp, rng);
    CHECK(is_symplectic_matrix(sp, transvection_matrix(sp, alpha)));
  }
}
