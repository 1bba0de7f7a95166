#ifndef EMCG_RATIONAL_HPP
#define EMCG_RATIONAL_HPP

#include <gmpxx.h>

#include <Eigen/Core>

#include <string>

namespace Eigen {

// mpq_class as an Eigen scalar. Exact arithmetic only; no sqrt/epsilon.
template <>
struct NumTraits<mpq_class> : GenericNumTraits<mpq_class> {
  typedef mpq_class Real;
  typedef mpq_class NonInteger;
  typedef mpq_class Nested;

  static inline Real epsilon() { return 0; }
  static inline Real dummy_precision() { return 0; }
  static inline int digits10() { return 0; }

  enum {
    IsInteger = 0,
    IsSigned = 1,
    IsComplex = 0,
    RequireInitialization = 1,
    ReadCost = 6,
    AddCost = 150,
    MulCost = 100
  };
};

}  // namespace Eigen

namespace emcg {

using Rational = mpq_class;
using Integer = mpz_class;

using MatQ = Eigen::Matrix<Rational, Eigen::Dynamic, Eigen::Dynamic>;
using VecQ = Eigen::Matrix<Rational, Eigen::Dynamic, 1>;
using MatZ = Eigen::Matrix<Integer, Eigen::Dynamic, Eigen::Dynamic>;
using VecZ = Eigen::Matrix<Integer, Eigen::Dynamic, 1>;

inline MatQ to_rational(const MatZ& m) {
  MatQ r(m.rows(), m.cols());
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j) r(i, j) = Rational(m(i, j));
  return r;
}

inline VecQ to_rational(const VecZ& v) {
  VecQ r(v.size());
  for (Eigen::Index i = 0; i < v.size(); ++i) r(i) = Rational(v(i));
  return r;
}

inline std::string to_string(const Rational& x) { return x.get_str(); }

}  // namespace emcg

#endif  // EMCG_RATIONAL_HPP
