#ifndef WITTSIG_LINALG_HPP
#define WITTSIG_LINALG_HPP

#include <Eigen/Core>

#include "wittsig/cyclotomic.hpp"
#include "wittsig/ratfunc.hpp"

namespace Eigen {

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
    AddCost = 100,
    MulCost = 100
  };
};

template <>
struct NumTraits<wittsig::CyclotomicNumber> : GenericNumTraits<wittsig::CyclotomicNumber> {
  typedef wittsig::CyclotomicNumber Real;
  typedef wittsig::CyclotomicNumber NonInteger;
  typedef wittsig::CyclotomicNumber Nested;
  static inline Real epsilon() { return Real(); }
  static inline Real dummy_precision() { return Real(); }
  static inline int digits10() { return 0; }
  enum {
    IsInteger = 0,
    IsSigned = 1,
    IsComplex = 0,  // conjugation is explicit; Eigen's conj must stay trivial
    RequireInitialization = 1,
    ReadCost = 20,
    AddCost = 1000,
    MulCost = 5000
  };
};

template <>
struct NumTraits<wittsig::RationalFunction> : GenericNumTraits<wittsig::RationalFunction> {
  typedef wittsig::RationalFunction Real;
  typedef wittsig::RationalFunction NonInteger;
  typedef wittsig::RationalFunction Nested;
  static inline Real epsilon() { return Real(); }
  static inline Real dummy_precision() { return Real(); }
  static inline int digits10() { return 0; }
  enum {
    IsInteger = 0,
    IsSigned = 1,
    IsComplex = 0,
    RequireInitialization = 1,
    ReadCost = 20,
    AddCost = 5000,
    MulCost = 20000
  };
};

}  // namespace Eigen

namespace wittsig {

using MatQ = Eigen::Matrix<Rational, Eigen::Dynamic, Eigen::Dynamic>;
using MatC = Eigen::Matrix<CyclotomicNumber, Eigen::Dynamic, Eigen::Dynamic>;
using MatR = Eigen::Matrix<RationalFunction, Eigen::Dynamic, Eigen::Dynamic>;
using VecC = Eigen::Matrix<CyclotomicNumber, Eigen::Dynamic, 1>;

// Entrywise conjugate of the transpose. Eigen's adjoint() would not conjugate
// these scalars (IsComplex = 0), so conjugation is always spelled out.
MatC conj_transpose(const MatC& a);
MatR bar_transpose(const MatR& a);

bool mats_equal(const MatC& a, const MatC& b);
bool mats_equal(const MatR& a, const MatR& b);

MatC identity_matc(Eigen::Index n, long m);
MatC lift_matrix(const MatC& a, long m2);
MatC galois_matrix(const MatC& a, long k);

// Exact Gaussian elimination over the cyclotomic field.
CyclotomicNumber det(const MatC& a);
MatC gauss_inverse(const MatC& a);  // throws SingularFormError
// Columns form a basis of the right kernel (n x dim).
MatC kernel_basis(const MatC& a);

// Determinant over Q(zeta_m)(t) via fraction-free elimination on a cleared
// Laurent matrix.
RationalFunction det(const MatR& a);

}  // namespace wittsig

#endif
