#ifndef EMCG_MCG_HPP
#define EMCG_MCG_HPP

#include <stdexcept>
#include <utility>
#include <vector>

#include "emcg/symplectic.hpp"

namespace emcg {

/// Homology class of a simple closed curve in the (m, l) basis; zero or
/// primitive unless the permissive flag admits arbitrary classes.
class CurveClass {
 public:
  CurveClass(const SymplecticSpace& space, VecZ v, bool permissive = false)
      : space_(space), v_(std::move(v)) {
    if (v_.size() != space.dim())
      throw std::invalid_argument("curve class: wrong vector length");
    if (!permissive && !v_.isZero()) {
      Integer g = 0;
      for (Eigen::Index i = 0; i < v_.size(); ++i) g = gcd(g, v_(i));
      if (g != 1)
        throw std::invalid_argument(
            "curve class is not primitive (not realizable by a simple closed "
            "curve); pass permissive to admit it");
    }
  }

  const SymplecticSpace& space() const { return space_; }
  const VecZ& vec() const { return v_; }
  bool is_zero() const { return v_.isZero(); }

 private:
  SymplecticSpace space_;
  VecZ v_;
};

/// The homology action of a mapping class: an integral matrix preserving
/// the intersection form.
class MappingClass {
 public:
  MappingClass(const SymplecticSpace& space, MatZ m)
      : space_(space), m_(std::move(m)) {
    if (!is_symplectic_matrix(space_, m_))
      throw std::invalid_argument("mapping class matrix is not symplectic");
  }

  static MappingClass identity(const SymplecticSpace& space) {
    return MappingClass(space, MatZ::Identity(space.dim(), space.dim()));
  }

  const SymplecticSpace& space() const { return space_; }
  const MatZ& matrix() const { return m_; }

  MappingClass operator*(const MappingClass& o) const {
    if (space_ != o.space_) throw std::invalid_argument("genus mismatch");
    return MappingClass(space_, MatZ(m_ * o.m_));
  }

  MappingClass inverse() const {
    // f^-1 = J^-1 f^T J for symplectic f (J^-1 = -J).
    MatZ j = space_.form();
    return MappingClass(space_, MatZ(-j * MatZ(m_.transpose()) * j));
  }

  bool is_identity() const {
    return m_ == MatZ::Identity(space_.dim(), space_.dim());
  }

  bool operator==(const MappingClass& o) const {
    return space_ == o.space_ && m_ == o.m_;
  }
  bool operator!=(const MappingClass& o) const { return !(*this == o); }

 private:
  SymplecticSpace space_;
  MatZ m_;
};

/// Dehn twist action on homology: T_alpha(x) = x - (x . alpha) alpha.
/// The sign is pinned by the n_lambda consistency oracle (g=1, lambda=<m>:
/// n_lambda(T_m) = 0 and n_lambda(T_l) = 1), asserted in the tests.
inline MappingClass transvection(const CurveClass& alpha) {
  return MappingClass(alpha.space(),
                      transvection_matrix(alpha.space(), alpha.vec()));
}

struct Letter {
  CurveClass curve;
  int exponent;  // +1 or -1
};

/// A word prod_i D(alpha_i)^{eps_i}; letter 1 is applied last.
class TwistWord {
 public:
  explicit TwistWord(const SymplecticSpace& space) : space_(space) {}
  TwistWord(const SymplecticSpace& space, std::vector<Letter> letters)
      : space_(space), letters_(std::move(letters)) {
    for (const Letter& l : letters_) {
      if (l.curve.space() != space_)
        throw std::invalid_argument("twist word: genus mismatch");
      if (l.exponent != 1 && l.exponent != -1)
        throw std::invalid_argument("twist word: exponent must be +1 or -1");
    }
  }

  const SymplecticSpace& space() const { return space_; }
  const std::vector<Letter>& letters() const { return letters_; }
  bool empty() const { return letters_.empty(); }
  std::size_t size() const { return letters_.size(); }

  void append(CurveClass curve, int exponent) {
    if (curve.space() != space_)
      throw std::invalid_argument("twist word: genus mismatch");
    if (exponent != 1 && exponent != -1)
      throw std::invalid_argument("twist word: exponent must be +1 or -1");
    letters_.push_back(Letter{std::move(curve), exponent});
  }

  TwistWord inverse() const {
    TwistWord w(space_);
    for (auto it = letters_.rbegin(); it != letters_.rend(); ++it)
      w.append(it->curve, -it->exponent);
    return w;
  }

  TwistWord concat(const TwistWord& o) const {
    TwistWord w(space_, letters_);
    for (const Letter& l : o.letters_) w.append(l.curve, l.exponent);
    return w;
  }

 private:
  SymplecticSpace space_;
  std::vector<Letter> letters_;
};

inline long exponent_sum(const TwistWord& w) {
  long e = 0;
  for (const Letter& l : w.letters()) e += l.exponent;
  return e;
}

/// D(w) = prod D(alpha_i)^{eps_i}, letter 1 leftmost and applied last.
inline MappingClass word_action(const TwistWord& w) {
  MappingClass result = MappingClass::identity(w.space());
  for (const Letter& l : w.letters()) {
    MappingClass t = transvection(l.curve);
    result = result * (l.exponent == 1 ? t : t.inverse());
  }
  return result;
}

inline TwistWord random_word(const SymplecticSpace& space, std::mt19937_64& rng,
                             int length) {
  std::uniform_int_distribution<int> coin(0, 1);
  TwistWord w(space);
  for (int i = 0; i < length; ++i)
    w.append(CurveClass(space, random_primitive_class(space, rng)),
             coin(rng) ? 1 : -1);
  return w;
}

}  // namespace emcg

#endif  // EMCG_MCG_HPP
