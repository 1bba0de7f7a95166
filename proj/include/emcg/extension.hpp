#ifndef EMCG_EXTENSION_HPP
#define EMCG_EXTENSION_HPP

#include <stdexcept>
#include <utility>

#include "emcg/mcg.hpp"

namespace emcg {

/// Maslov cocycle m_lambda(g, f) = mu(lambda, g(lambda), (g f)(lambda)).
inline long maslov_cocycle(const Lagrangian& lambda, const MappingClass& g,
                           const MappingClass& f) {
  if (g.space() != lambda.space() || f.space() != lambda.space())
    throw std::invalid_argument("maslov_cocycle: genus mismatch");
  Lagrangian gl = lambda.transformed(g.matrix());
  Lagrangian gfl = lambda.transformed(MatZ(g.matrix() * f.matrix()));
  return maslov(lambda, gl, gfl);
}

/// Turaev's form a (star_f) b = (f-1)^{-1}(a) . b on (f-1)H_1.
struct StarFormData {
  Subspace domain;  // (f-1)H_1, or its restriction
  MatQ gram;        // form in the domain's canonical basis
  StarFormData() : domain(0) {}
};

inline StarFormData star_f(const MappingClass& f) {
  const SymplecticSpace& sp = f.space();
  MatQ fm1 = to_rational(f.matrix()) - MatQ::Identity(sp.dim(), sp.dim());
  StarFormData data;
  data.domain = image(fm1);
  const Eigen::Index r = data.domain.dim();
  data.gram.resize(r, r);
  for (Eigen::Index i = 0; i < r; ++i) {
    auto x = solve(fm1, VecQ(data.domain.basis().col(i)));
    if (!x) throw std::logic_error("star_f: preimage must exist");
    for (Eigen::Index j = 0; j < r; ++j)
      data.gram(i, j) = sp.pair(*x, VecQ(data.domain.basis().col(j)));
  }
  return data;
}

inline int star_f_det_sign(const MappingClass& f) {
  return det_sign(star_f(f).gram);
}

/// star_{f,lambda}: restriction of star_f to lambda cap (f-1)H_1; symmetric,
/// possibly degenerate.
inline StarFormData star_f_lambda(const MappingClass& f,
                                  const Lagrangian& lambda) {
  const SymplecticSpace& sp = f.space();
  if (lambda.space() != sp)
    throw std::invalid_argument("star_f_lambda: genus mismatch");
  MatQ fm1 = to_rational(f.matrix()) - MatQ::Identity(sp.dim(), sp.dim());
  StarFormData data;
  data.domain = lambda.subspace().intersect(image(fm1));
  const Eigen::Index r = data.domain.dim();
  data.gram.resize(r, r);
  for (Eigen::Index i = 0; i < r; ++i) {
    auto x = solve(fm1, VecQ(data.domain.basis().col(i)));
    if (!x) throw std::logic_error("star_f_lambda: preimage must exist");
    for (Eigen::Index j = 0; j < r; ++j)
      data.gram(i, j) = sp.pair(*x, VecQ(data.domain.basis().col(j)));
  }
  return data;
}

inline long star_f_lambda_signature(const MappingClass& f,
                                    const Lagrangian& lambda) {
  return signature(star_f_lambda(f, lambda).gram).sigma();
}

/// Turaev's symmetric form star_{f,g} on (f-1)V cap (g-1)V:
/// a star b = ((f-1)^{-1}a + (g-1)^{-1}a + a) . b.
inline StarFormData star_fg(const MappingClass& f, const MappingClass& g) {
  const SymplecticSpace& sp = f.space();
  if (g.space() != sp) throw std::invalid_argument("star_fg: genus mismatch");
  MatQ fm1 = to_rational(f.matrix()) - MatQ::Identity(sp.dim(), sp.dim());
  MatQ gm1 = to_rational(g.matrix()) - MatQ::Identity(sp.dim(), sp.dim());
  StarFormData data;
  data.domain = image(fm1).intersect(image(gm1));
  const Eigen::Index r = data.domain.dim();
  data.gram.resize(r, r);
  for (Eigen::Index i = 0; i < r; ++i) {
    VecQ a = data.domain.basis().col(i);
    auto x = solve(fm1, a);
    auto y = solve(gm1, a);
    if (!x || !y) throw std::logic_error("star_fg: preimage must exist");
    VecQ lhs = *x + *y + a;
    for (Eigen::Index j = 0; j < r; ++j)
      data.gram(i, j) = sp.pair(lhs, VecQ(data.domain.basis().col(j)));
  }
  return data;
}

/// phi(f, g) = Signature(star_{f,g}); Meyer's tau is defined as -phi.
inline long turaev_phi(const MappingClass& f, const MappingClass& g) {
  return signature(star_fg(f, g).gram).sigma();
}

inline long meyer_tau(const MappingClass& f, const MappingClass& g) {
  return -turaev_phi(f, g);
}

inline Eigen::Index coinvariant_dim(const MappingClass& f) {
  const Eigen::Index n = f.space().dim();
  MatQ fm1 = to_rational(f.matrix()) - MatQ::Identity(n, n);
  return rank(fm1);
}

/// Turaev's 1-cochain k(f) = dim((f-1)H_1) + sgn[det(star_f)] - 1.
inline long turaev_k(const MappingClass& f) {
  return static_cast<long>(coinvariant_dim(f)) + star_f_det_sign(f) - 1;
}

/// Walker's 1-cochain j_lambda(f) = -Signature(star_{f,lambda}).
inline long walker_j(const Lagrangian& lambda, const MappingClass& f) {
  return -star_f_lambda_signature(f, lambda);
}

/// n_lambda(f) = Sig(star_{f,lambda}) - dim((f-1)H_1) - sgn[det star_f] + 1;
/// n_lambda = -j_lambda - k by construction.
inline long n_lambda(const Lagrangian& lambda, const MappingClass& f) {
  long n = star_f_lambda_signature(f, lambda) -
           static_cast<long>(coinvariant_dim(f)) - star_f_det_sign(f) + 1;
  if (n != -walker_j(lambda, f) - turaev_k(f))
    throw std::logic_error("n_lambda != -j_lambda - k");
  return n;
}

/// A pair (f, n) in the extended mapping class group for a fixed lagrangian.
class ExtendedElement {
 public:
  ExtendedElement(Lagrangian context, MappingClass f, long n)
      : context_(std::move(context)), f_(std::move(f)), n_(n) {
    if (f_.space() != context_.space())
      throw std::invalid_argument("extended element: genus mismatch");
  }

  static ExtendedElement identity(const Lagrangian& context) {
    return ExtendedElement(context, MappingClass::identity(context.space()), 0);
  }

  const Lagrangian& context() const { return context_; }
  const MappingClass& mapping_class() const { return f_; }
  long weight() const { return n_; }

  /// (g, n) o (f, m) = (g f, n + m + m_lambda(g, f)).
  ExtendedElement compose(const ExtendedElement& other) const {
    if (context_ != other.context_)
      throw std::invalid_argument("extended elements from different contexts");
    long cocycle = maslov_cocycle(context_, f_, other.f_);
    return ExtendedElement(context_, f_ * other.f_, n_ + other.n_ + cocycle);
  }

  bool operator==(const ExtendedElement& o) const {
    return context_ == o.context_ && f_ == o.f_ && n_ == o.n_;
  }
  bool operator!=(const ExtendedElement& o) const { return !(*this == o); }

 private:
  Lagrangian context_;
  MappingClass f_;
  long n_;
};

enum class MembershipLevel { full, plus, plusplus };

inline long mod_positive(long a, long m) { return ((a % m) + m) % m; }

/// plusplus iff n == n_lambda(f) mod 4; plus iff mod 2. The independent
/// Definition 7.2 criterion n == genus + dim(lambda cap f(lambda)) mod 2
/// must agree with the mod-2 test and is asserted here.
inline MembershipLevel membership(const Lagrangian& lambda,
                                  const ExtendedElement& e) {
  long nl = n_lambda(lambda, e.mapping_class());
  long diff = e.weight() - nl;
  Lagrangian fl = lambda.transformed(e.mapping_class().matrix());
  long dim_cap = lambda.subspace().intersect(fl.subspace()).dim();
  long crit72 = lambda.space().genus() + dim_cap;
  bool plus_direct = mod_positive(e.weight() - crit72, 2) == 0;
  bool plus_mod2 = mod_positive(diff, 2) == 0;
  if (plus_direct != plus_mod2)
    throw std::logic_error("membership: mod-2 criteria disagree");
  if (mod_positive(diff, 4) == 0) return MembershipLevel::plusplus;
  if (plus_mod2) return MembershipLevel::plus;
  return MembershipLevel::full;
}

}  // namespace emcg

#endif  // EMCG_EXTENSION_HPP
