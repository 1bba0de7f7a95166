#ifndef EMCG_SYMPLECTIC_HPP
#define EMCG_SYMPLECTIC_HPP

#include <random>
#include <stdexcept>

#include "emcg/linalg.hpp"
#include "emcg/rational.hpp"

namespace emcg {

/// H_1(Sigma_g; Q) with the intersection form J = [[0, I], [-I, 0]] in the
/// ordered basis (m_1..m_g, l_1..l_g), so m_i . l_i = +1.
class SymplecticSpace {
 public:
  explicit SymplecticSpace(int genus) : genus_(genus) {
    if (genus < 1) throw std::invalid_argument("genus must be positive");
  }

  int genus() const { return genus_; }
  Eigen::Index dim() const { return 2 * static_cast<Eigen::Index>(genus_); }

  MatZ form() const {
    const Eigen::Index g = genus_;
    MatZ j = MatZ::Zero(2 * g, 2 * g);
    for (Eigen::Index i = 0; i < g; ++i) {
      j(i, g + i) = 1;
      j(g + i, i) = -1;
    }
    return j;
  }

  Rational pair(const VecQ& x, const VecQ& y) const {
    if (x.size() != dim() || y.size() != dim())
      throw std::invalid_argument("pair: dimension mismatch");
    const Eigen::Index g = genus_;
    Rational acc = 0;
    for (Eigen::Index i = 0; i < g; ++i)
      acc += x(i) * y(g + i) - x(g + i) * y(i);
    return acc;
  }

  Integer pair(const VecZ& x, const VecZ& y) const {
    const Eigen::Index g = genus_;
    Integer acc = 0;
    for (Eigen::Index i = 0; i < g; ++i)
      acc += x(i) * y(g + i) - x(g + i) * y(i);
    return acc;
  }

  bool operator==(const SymplecticSpace& o) const { return genus_ == o.genus_; }
  bool operator!=(const SymplecticSpace& o) const { return !(*this == o); }

 private:
  int genus_;
};

inline bool is_isotropic(const SymplecticSpace& space, const Subspace& u) {
  const MatQ& b = u.basis();
  for (Eigen::Index i = 0; i < b.cols(); ++i)
    for (Eigen::Index j = i + 1; j < b.cols(); ++j)
      if (space.pair(VecQ(b.col(i)), VecQ(b.col(j))) != 0) return false;
  return true;
}

inline bool is_lagrangian(const SymplecticSpace& space, const Subspace& u) {
  if (u.ambient_dim() != space.dim())
    throw std::invalid_argument("is_lagrangian: ambient dimension mismatch");
  return u.dim() == space.genus() && is_isotropic(space, u);
}

class Lagrangian {
 public:
  Lagrangian(const SymplecticSpace& space, Subspace sub)
      : space_(space), sub_(std::move(sub)) {
    if (!is_lagrangian(space_, sub_))
      throw std::invalid_argument("subspace is not lagrangian");
  }

  static Lagrangian standard(const SymplecticSpace& space) {
    MatQ gens = MatQ::Zero(space.dim(), space.genus());
    for (Eigen::Index i = 0; i < space.genus(); ++i) gens(i, i) = 1;
    return Lagrangian(space, Subspace::span(gens));
  }

  const SymplecticSpace& space() const { return space_; }
  const Subspace& subspace() const { return sub_; }

  Lagrangian transformed(const MatZ& m) const {
    return Lagrangian(space_, Subspace::span(MatQ(to_rational(m) * sub_.basis())));
  }

  bool operator==(const Lagrangian& o) const {
    return space_ == o.space_ && sub_ == o.sub_;
  }
  bool operator!=(const Lagrangian& o) const { return !(*this == o); }

 private:
  SymplecticSpace space_;
  Subspace sub_;
};

/// Maslov index of an ordered lagrangian triple: the signature of the form
/// (a1+a2) (.) (b1+b2) = a2 . b1 on (l1 + l2) cap l3. Decompositions are
/// particular solutions of the stacked system; the Gram matrix is
/// symmetrized before taking the signature (signature-neutral on the
/// quotient, covered by the decomposition-independence tests).
inline long maslov(const Lagrangian& l1, const Lagrangian& l2,
                   const Lagrangian& l3) {
  const SymplecticSpace& sp = l1.space();
  if (l2.space() != sp || l3.space() != sp)
    throw std::invalid_argument("maslov: mismatched spaces");
  Subspace w = l1.subspace().sum(l2.subspace()).intersect(l3.subspace());
  const Eigen::Index r = w.dim();
  if (r == 0) return 0;
  const Eigen::Index d1 = l1.subspace().dim(), d2 = l2.subspace().dim();
  MatQ stacked(sp.dim(), d1 + d2);
  stacked.leftCols(d1) = l1.subspace().basis();
  stacked.rightCols(d2) = l2.subspace().basis();
  MatQ part1(sp.dim(), r), part2(sp.dim(), r);
  for (Eigen::Index i = 0; i < r; ++i) {
    auto c = solve(stacked, VecQ(w.basis().col(i)));
    if (!c) throw std::logic_error("maslov: decomposition must exist");
    part1.col(i) = l1.subspace().basis() * c->head(d1);
    part2.col(i) = l2.subspace().basis() * c->tail(d2);
  }
  MatQ gram(r, r);
  for (Eigen::Index i = 0; i < r; ++i)
    for (Eigen::Index j = 0; j < r; ++j)
      gram(i, j) = sp.pair(VecQ(part2.col(i)), VecQ(part1.col(j)));
  MatQ sym = (gram + MatQ(gram.transpose())) / Rational(2);
  return signature(sym).sigma();
}

inline bool is_symplectic_matrix(const SymplecticSpace& space, const MatZ& m) {
  if (m.rows() != space.dim() || m.cols() != space.dim()) return false;
  MatZ j = space.form();
  return MatZ(m.transpose() * j * m) == j;
}

/// Integer-primitive generator set for lambda: basis of the saturated
/// lattice lambda cap Z^{2g}, computed as the integer kernel of an integer
/// matrix whose rational kernel is lambda.
inline MatZ saturated_lattice_basis(const Lagrangian& lambda) {
  const Eigen::Index n = lambda.space().dim();
  const Eigen::Index g = lambda.space().genus();
  // Rows spanning the annihilator of lambda under the standard dot product,
  // scaled to integers.
  MatQ b = lambda.subspace().basis();
  MatQ ann = kernel(MatQ(b.transpose()));  // n x (n-g), columns
  MatZ rows(n - g, n);
  for (Eigen::Index c = 0; c < ann.cols(); ++c) {
    Integer lcm = 1;
    for (Eigen::Index i = 0; i < n; ++i) {
      Integer den = ann(i, c).get_den();
      lcm = lcm / gcd(lcm, den) * den;
    }
    for (Eigen::Index i = 0; i < n; ++i) {
      Rational scaled = ann(i, c) * Rational(lcm);
      rows(c, i) = scaled.get_num();
    }
  }
  MatZ lattice = integer_kernel(rows);
  if (lattice.cols() != g) throw std::logic_error("saturation rank mismatch");
  return lattice;
}

/// Integral symplectic matrix whose first g columns span lambda. The
/// standard lagrangian maps to the identity. Completion: solve the
/// Diophantine pairing system for dual columns, then shear away their
/// mutual pairings.
inline MatZ adapt_lagrangian(const Lagrangian& lambda) {
  const SymplecticSpace& sp = lambda.space();
  const Eigen::Index g = sp.genus();
  const Eigen::Index n = sp.dim();
  if (lambda == Lagrangian::standard(sp)) return MatZ::Identity(n, n);
  MatZ v = saturated_lattice_basis(lambda);
  // Pairing matrix P with P(i, :) = <v_i, .> as a linear functional.
  MatZ pairing(g, n);
  MatZ j = sp.form();
  pairing = MatZ(v.transpose() * j);
  MatZ w(n, g);
  for (Eigen::Index i = 0; i < g; ++i) {
    VecZ e = VecZ::Zero(g);
    e(i) = 1;
    auto x = integer_solve(pairing, e);
    if (!x) throw std::logic_error("adapt_lagrangian: pairing system unsolvable");
    w.col(i) = *x;
  }
  // Kill <w_i, w_j> (skew, integral) by w_j += s_ij v_i for i < j.
  for (Eigen::Index i = 0; i < g; ++i)
    for (Eigen::Index jj = i + 1; jj < g; ++jj) {
      Integer s = sp.pair(VecZ(w.col(i)), VecZ(w.col(jj)));
      if (s != 0) w.col(jj) += s * v.col(i);
    }
  MatZ m(n, n);
  m.leftCols(g) = v;
  m.rightCols(g) = w;
  if (!is_symplectic_matrix(sp, m))
    throw std::logic_error("adapt_lagrangian: completion not symplectic");
  return m;
}

// ---- seeded generators for randomized suites ----

inline VecZ random_primitive_class(const SymplecticSpace& space,
                                   std::mt19937_64& rng) {
  std::uniform_int_distribution<int> entry(-2, 2);
  const Eigen::Index n = space.dim();
  for (;;) {
    VecZ v(n);
    Integer g = 0;
    for (Eigen::Index i = 0; i < n; ++i) {
      v(i) = entry(rng);
      g = gcd(g, v(i));
    }
    if (g == 0) continue;
    if (g != 1)
      for (Eigen::Index i = 0; i < n; ++i) v(i) /= g;
    return v;
  }
}

/// Symplectic transvection x -> x + (x . alpha) alpha as a matrix, i.e.
/// T_alpha(x) = x - (x . alpha) alpha with the sign baked into the outer
/// product below (see the mcg module for the pinned convention).
inline MatZ transvection_matrix(const SymplecticSpace& space, const VecZ& alpha) {
  MatZ t = MatZ::Identity(space.dim(), space.dim());
  t += alpha * MatZ(alpha.transpose() * space.form());
  return t;
}

/// Product of `length` random transvections; transvections generate
/// Sp(2g, Z), so long products sample the group. Deterministic per seed.
inline MatZ random_symplectic(const SymplecticSpace& space, std::uint64_t seed,
                              int length) {
  if (length < 0) throw std::invalid_argument("length must be >= 0");
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> coin(0, 1);
  MatZ m = MatZ::Identity(space.dim(), space.dim());
  for (int i = 0; i < length; ++i) {
    VecZ alpha = random_primitive_class(space, rng);
    MatZ t = transvection_matrix(space, alpha);
    if (coin(rng)) {
      // inverse transvection: flip the outer-product sign
      t = 2 * MatZ::Identity(space.dim(), space.dim()) - t;
    }
    m = MatZ(m * t);
  }
  return m;
}

inline Lagrangian random_lagrangian(const SymplecticSpace& space,
                                    std::uint64_t seed, int length = 6) {
  MatZ m = random_symplectic(space, seed, length);
  return Lagrangian::standard(space).transformed(m);
}

}  // namespace emcg

#endif  // EMCG_SYMPLECTIC_HPP
