#ifndef EMCG_LINALG_HPP
#define EMCG_LINALG_HPP

#include <optional>
#include <stdexcept>
#include <tuple>
#include <utility>
#include <vector>

#include "emcg/rational.hpp"

namespace emcg {

struct RrefResult {
  MatQ mat;
  std::vector<Eigen::Index> pivots;  // pivot column per pivot row, in order
};

/// Reduced row echelon form by exact Gauss-Jordan elimination.
inline RrefResult rref(MatQ m) {
  RrefResult out;
  Eigen::Index row = 0;
  for (Eigen::Index col = 0; col < m.cols() && row < m.rows(); ++col) {
    Eigen::Index piv = -1;
    for (Eigen::Index r = row; r < m.rows(); ++r)
      if (m(r, col) != 0) {
        piv = r;
        break;
      }
    if (piv < 0) continue;
    if (piv != row) m.row(piv).swap(m.row(row));
    m.row(row) /= m(row, col);
    for (Eigen::Index r = 0; r < m.rows(); ++r)
      if (r != row && m(r, col) != 0) m.row(r) -= m(r, col) * m.row(row);
    out.pivots.push_back(col);
    ++row;
  }
  out.mat = std::move(m);
  return out;
}

inline Eigen::Index rank(const MatQ& m) {
  return static_cast<Eigen::Index>(rref(m).pivots.size());
}

/// One particular solution of M x = b, if any.
inline std::optional<VecQ> solve(const MatQ& m, const VecQ& b) {
  if (m.rows() != b.size()) throw std::invalid_argument("solve: size mismatch");
  MatQ aug(m.rows(), m.cols() + 1);
  aug.leftCols(m.cols()) = m;
  aug.col(m.cols()) = b;
  RrefResult r = rref(aug);
  VecQ x = VecQ::Zero(m.cols());
  for (std::size_t i = 0; i < r.pivots.size(); ++i) {
    if (r.pivots[i] == m.cols()) return std::nullopt;  // inconsistent row
    x(r.pivots[i]) = r.mat(static_cast<Eigen::Index>(i), m.cols());
  }
  return x;
}

/// Column basis of the kernel of M, one column per free variable.
inline MatQ kernel(const MatQ& m) {
  RrefResult r = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (Eigen::Index c : r.pivots) is_pivot[static_cast<std::size_t>(c)] = true;
  Eigen::Index nfree = m.cols() - static_cast<Eigen::Index>(r.pivots.size());
  MatQ k = MatQ::Zero(m.cols(), nfree);
  Eigen::Index out = 0;
  for (Eigen::Index c = 0; c < m.cols(); ++c) {
    if (is_pivot[static_cast<std::size_t>(c)]) continue;
    k(c, out) = 1;
    for (std::size_t i = 0; i < r.pivots.size(); ++i)
      k(r.pivots[i], out) = -r.mat(static_cast<Eigen::Index>(i), c);
    ++out;
  }
  return k;
}

/// A linear subspace of Q^n stored as a canonical reduced column echelon
/// basis, so equal subspaces compare equal as matrices.
class Subspace {
 public:
  explicit Subspace(Eigen::Index ambient_dim)
      : ambient_(ambient_dim), basis_(ambient_dim, 0) {}

  /// Span of the columns of `gens` (need not be independent).
  static Subspace span(const MatQ& gens) {
    Subspace s(gens.rows());
    RrefResult r = rref(gens.transpose());
    s.basis_.resize(gens.rows(), static_cast<Eigen::Index>(r.pivots.size()));
    for (std::size_t i = 0; i < r.pivots.size(); ++i)
      s.basis_.col(static_cast<Eigen::Index>(i)) =
          r.mat.row(static_cast<Eigen::Index>(i)).transpose();
    return s;
  }

  static Subspace span(const VecQ& v) {
    MatQ m(v.size(), 1);
    m.col(0) = v;
    return span(m);
  }

  Eigen::Index ambient_dim() const { return ambient_; }
  Eigen::Index dim() const { return basis_.cols(); }
  const MatQ& basis() const { return basis_; }

  bool contains(const VecQ& v) const {
    if (v.size() != ambient_) throw std::invalid_argument("contains: ambient mismatch");
    if (dim() == 0) return v.isZero();
    return solve(basis_, v).has_value();
  }

  Subspace sum(const Subspace& other) const {
    check_ambient(other);
    MatQ gens(ambient_, dim() + other.dim());
    gens.leftCols(dim()) = basis_;
    gens.rightCols(other.dim()) = other.basis_;
    return span(gens);
  }

  /// U cap V via the kernel of the stacked system [B_U | -B_V].
  Subspace intersect(const Subspace& other) const {
    check_ambient(other);
    if (dim() == 0 || other.dim() == 0) return Subspace(ambient_);
    MatQ stacked(ambient_, dim() + other.dim());
    stacked.leftCols(dim()) = basis_;
    stacked.rightCols(other.dim()) = -other.basis_;
    MatQ k = kernel(stacked);
    MatQ gens = basis_ * k.topRows(dim());
    return span(gens);
  }

  bool operator==(const Subspace& o) const {
    return ambient_ == o.ambient_ && basis_.rows() == o.basis_.rows() &&
           basis_.cols() == o.basis_.cols() && basis_ == o.basis_;
  }
  bool operator!=(const Subspace& o) const { return !(*this == o); }

 private:
  void check_ambient(const Subspace& o) const {
    if (ambient_ != o.ambient_)
      throw std::invalid_argument("subspace: ambient dimension mismatch");
  }
  Eigen::Index ambient_;
  MatQ basis_;
};

inline Subspace image(const MatQ& m) { return Subspace::span(m); }

struct Signature {
  long positives = 0;
  long negatives = 0;
  long zeros = 0;
  long sigma() const { return positives - negatives; }
};

/// Signature of a symmetric matrix by exact congruence diagonalization
/// (simultaneous row/column operations). Zero diagonal pivots are repaired
/// with the row_i + row_j substitution on a nonzero off-diagonal entry.
inline Signature signature(MatQ s) {
  if (s.rows() != s.cols()) throw std::invalid_argument("signature: not square");
  if (s != MatQ(s.transpose())) throw std::invalid_argument("signature: not symmetric");
  const Eigen::Index n = s.rows();
  Signature sig;
  for (Eigen::Index i = 0; i < n; ++i) {
    if (s(i, i) == 0) {
      // Prefer a later diagonal pivot; otherwise manufacture one.
      Eigen::Index d = -1;
      for (Eigen::Index j = i + 1; j < n; ++j)
        if (s(j, j) != 0) {
          d = j;
          break;
        }
      if (d >= 0) {
        s.row(i).swap(s.row(d));
        s.col(i).swap(s.col(d));
      } else {
        Eigen::Index a = -1, b = -1;
        for (Eigen::Index j = i; j < n && a < 0; ++j)
          for (Eigen::Index k = j + 1; k < n; ++k)
            if (s(j, k) != 0) {
              a = j;
              b = k;
              break;
            }
        if (a < 0) break;  // remaining block is zero
        s.row(a) += s.row(b);
        s.col(a) += s.col(b);  // now s(a,a) = 2*s_ab != 0
        if (a != i) {
          s.row(i).swap(s.row(a));
          s.col(i).swap(s.col(a));
        }
      }
    }
    const Rational pivot = s(i, i);
    if (pivot > 0)
      ++sig.positives;
    else
      ++sig.negatives;
    for (Eigen::Index j = i + 1; j < n; ++j) {
      if (s(j, i) == 0) continue;
      const Rational factor = s(j, i) / pivot;
      s.row(j) -= factor * s.row(i);
      s.col(j) -= factor * s.col(i);
    }
  }
  sig.zeros = n - sig.positives - sig.negatives;
  return sig;
}

/// Sign of det(M) by fraction-free-ish elimination; the 0x0 matrix gives +1.
inline int det_sign(MatQ m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("det_sign: not square");
  const Eigen::Index n = m.rows();
  int sign = 1;
  for (Eigen::Index i = 0; i < n; ++i) {
    Eigen::Index piv = -1;
    for (Eigen::Index r = i; r < n; ++r)
      if (m(r, i) != 0) {
        piv = r;
        break;
      }
    if (piv < 0) return 0;
    if (piv != i) {
      m.row(piv).swap(m.row(i));
      sign = -sign;
    }
    if (m(i, i) < 0) sign = -sign;
    for (Eigen::Index r = i + 1; r < n; ++r)
      if (m(r, i) != 0) m.row(r) -= (m(r, i) / m(i, i)) * m.row(i);
  }
  return sign;
}

// ---- integer lattice helpers (used for symplectic basis adaptation) ----

/// Column-style Hermite reduction: returns U with M*U in column echelon
/// form (unimodular U). Only the transform is consumed by callers.
inline std::pair<MatZ, MatZ> hermite_columns(MatZ m) {
  const Eigen::Index rows = m.rows(), cols = m.cols();
  MatZ u = MatZ::Identity(cols, cols);
  Eigen::Index col = 0;
  for (Eigen::Index row = 0; row < rows && col < cols; ++row) {
    // gcd out the row across columns col..cols-1
    bool any = false;
    for (Eigen::Index c = col; c < cols; ++c)
      if (m(row, c) != 0) any = true;
    if (!any) continue;
    for (;;) {
      Eigen::Index best = -1;
      for (Eigen::Index c = col; c < cols; ++c)
        if (m(row, c) != 0 &&
            (best < 0 || abs(m(row, c)) < abs(m(row, best))))
          best = c;
      if (best != col) {
        m.col(best).swap(m.col(col));
        u.col(best).swap(u.col(col));
      }
      bool done = true;
      for (Eigen::Index c = col + 1; c < cols; ++c) {
        if (m(row, c) == 0) continue;
        Integer q = m(row, c) / m(row, col);  // truncated division is fine here
        m.col(c) -= q * m.col(col);
        u.col(c) -= q * u.col(col);
        if (m(row, c) != 0) done = false;
      }
      if (done) break;
    }
    if (m(row, col) < 0) {
      m.col(col) = -m.col(col);
      u.col(col) = -u.col(col);
    }
    ++col;
  }
  return {std::move(m), std::move(u)};
}

/// Basis of {x in Z^n : M x = 0}. HNF-based, so the lattice is saturated.
inline MatZ integer_kernel(const MatZ& m) {
  auto [h, u] = hermite_columns(m);
  Eigen::Index r = 0;
  for (Eigen::Index c = 0; c < h.cols(); ++c)
    if (!h.col(c).isZero()) ++r;
  return u.rightCols(h.cols() - r);
}

/// One integer solution of M x = b, if any. Solutions (x, t) of the
/// homogeneous system M x = t b are combined so the t-coordinate hits
/// gcd of the attainable values; b is reachable iff that gcd is 1.
inline std::optional<VecZ> integer_solve(const MatZ& m, const VecZ& b) {
  if (b.isZero()) return VecZ(VecZ::Zero(m.cols()));
  MatZ aug(m.rows(), m.cols() + 1);
  aug.leftCols(m.cols()) = m;
  aug.col(m.cols()) = -b;
  MatZ k = integer_kernel(aug);
  if (k.cols() == 0) return std::nullopt;
  MatZ lastrow = k.row(m.cols());
  auto [h, u] = hermite_columns(lastrow);
  MatZ combined = k * u;
  if (combined(m.cols(), 0) != 1) return std::nullopt;
  return VecZ(combined.col(0).head(m.cols()));
}

}  // namespace emcg

#endif  // EMCG_LINALG_HPP
