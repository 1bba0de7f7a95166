#ifndef EMCG_SURGERY_HPP
#define EMCG_SURGERY_HPP

#include <stdexcept>
#include <utility>
#include <vector>

#include "emcg/extension.hpp"
#include "emcg/mcg.hpp"

namespace emcg {

/// Layer pairing of curve classes expressed in a basis where lambda is the
/// meridian span: P(outer, inner) = sum_i a_i(outer) b_i(inner) with
/// class = sum a_i m_i + b_i l_i. Satisfies P(x,x) = sum a_i b_i and
/// P(x,y) - P(y,x) = x . y.
inline Integer seifert_pairing(const SymplecticSpace& space, const VecZ& outer,
                               const VecZ& inner) {
  const Eigen::Index g = space.genus();
  Integer acc = 0;
  for (Eigen::Index i = 0; i < g; ++i) acc += outer(i) * inner(g + i);
  return acc;
}

struct FramedLinkMatrix {
  MatZ matrix;           // symmetric; letters 1..n first, then unlink 1..g
  Eigen::Index letters;  // number of letter components
  Eigen::Index unlinks;  // 0 when the unlink is omitted
  MatZ adaptation;       // basis change used for the well-placed embedding
};

/// Linking matrix of L(w) (without unlink) or L^0_lambda(w) (with unlink).
/// Classes are first moved by M^-1 with M = adapt_lagrangian(lambda), the
/// computational stand-in for placing Sigma in S^3 with lambda as the
/// meridian span. Diagonal of letter i: sum_k a_k b_k - eps_i; letter i is
/// outer to letter j when i < j; the unlink sits outermost with zero
/// framings and reads off b-coefficients.
inline FramedLinkMatrix linking_matrix(const TwistWord& w,
                                       const Lagrangian& lambda,
                                       bool with_unlink) {
  const SymplecticSpace& sp = w.space();
  if (lambda.space() != sp)
    throw std::invalid_argument("linking_matrix: genus mismatch");
  const Eigen::Index g = sp.genus();
  const Eigen::Index n = static_cast<Eigen::Index>(w.size());

  MatZ adapt = adapt_lagrangian(lambda);
  // M^-1 = -J M^T J for symplectic M.
  MatZ j = sp.form();
  MatZ inv = MatZ(-j * MatZ(adapt.transpose()) * j);

  std::vector<VecZ> cls;
  cls.reserve(static_cast<std::size_t>(n));
  for (const Letter& l : w.letters()) cls.push_back(VecZ(inv * l.curve.vec()));

  FramedLinkMatrix out;
  out.letters = n;
  out.unlinks = with_unlink ? g : 0;
  out.adaptation = adapt;
  const Eigen::Index total = n + out.unlinks;
  out.matrix = MatZ::Zero(total, total);

  for (Eigen::Index i = 0; i < n; ++i) {
    out.matrix(i, i) =
        seifert_pairing(sp, cls[static_cast<std::size_t>(i)],
                        cls[static_cast<std::size_t>(i)]) -
        w.letters()[static_cast<std::size_t>(i)].exponent;
    for (Eigen::Index jj = i + 1; jj < n; ++jj) {
      Integer lk = seifert_pairing(sp, cls[static_cast<std::size_t>(i)],
                                   cls[static_cast<std::size_t>(jj)]);
      out.matrix(i, jj) = lk;
      out.matrix(jj, i) = lk;
    }
  }
  if (with_unlink) {
    for (Eigen::Index k = 0; k < g; ++k)
      for (Eigen::Index i = 0; i < n; ++i) {
        // pushed-off meridian m_k against letter i: b_k(class)
        Integer lk = cls[static_cast<std::size_t>(i)](g + k);
        out.matrix(n + k, i) = lk;
        out.matrix(i, n + k) = lk;
      }
  }
  return out;
}

inline long sigma_word(const TwistWord& w, const Lagrangian& lambda,
                       bool with_unlink) {
  FramedLinkMatrix l = linking_matrix(w, lambda, with_unlink);
  return signature(to_rational(l.matrix)).sigma();
}

/// n^0_lambda(w) = sigma(L^0_lambda(w)).
inline long n0_lambda(const TwistWord& w, const Lagrangian& lambda) {
  return sigma_word(w, lambda, true);
}

/// n_lambda(w) = e(w) + sigma(L^0_lambda(w)).
inline long n_lambda_word(const TwistWord& w, const Lagrangian& lambda) {
  return exponent_sum(w) + n0_lambda(w, lambda);
}

/// Phase exponent n - n^0_lambda(w) a TQFT representation would apply.
inline long kappa_exponent(const TwistWord& w, const Lagrangian& lambda,
                           long n) {
  return n - n0_lambda(w, lambda);
}

/// e(w) + sigma(L^0_lambda(w)) == n_lambda(D(w)) (mod 4): the surgery
/// route and the algebraic route agree.
inline bool verify_surgery_congruence(const TwistWord& w,
                                      const Lagrangian& lambda) {
  long lhs = n_lambda_word(w, lambda);
  long rhs = n_lambda(lambda, word_action(w));
  return mod_positive(lhs - rhs, 4) == 0;
}

/// W(w) = prod (W C(alpha_i))^{eps_i} evaluated as an extended element:
/// equals C(D(w), n_lambda(w)) by the surgery formula, but computed by
/// composing single-twist lifts so the two routes stay independent.
inline ExtendedElement compose_word(const TwistWord& w,
                                    const Lagrangian& lambda) {
  ExtendedElement acc = ExtendedElement::identity(lambda);
  for (const Letter& l : w.letters()) {
    // weight of W(alpha) = 1 + w(C(alpha)) = 0 or 1 by the single-twist rule
    long weight =
        lambda.subspace().contains(to_rational(l.curve.vec())) ? 0 : 1;
    ExtendedElement lift(lambda, transvection(l.curve), weight);
    if (l.exponent == 1) {
      acc = acc.compose(lift);
    } else {
      // inverse of (f, n): (f^-1, -n - m_lambda(f, f^-1))
      MappingClass finv = lift.mapping_class().inverse();
      long m = maslov_cocycle(lambda, lift.mapping_class(), finv);
      acc = acc.compose(ExtendedElement(lambda, finv, -lift.weight() - m));
    }
  }
  return acc;
}

}  // namespace emcg

#endif  // EMCG_SURGERY_HPP
