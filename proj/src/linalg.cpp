#include "wittsig/linalg.hpp"

#include <vector>

#include "wittsig/errors.hpp"

namespace wittsig {

MatC conj_transpose(const MatC& a) {
  MatC r(a.cols(), a.rows());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j) r(j, i) = conjugate(a(i, j));
  return r;
}

MatR bar_transpose(const MatR& a) {
  MatR r(a.cols(), a.rows());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j) r(j, i) = bar(a(i, j));
  return r;
}

bool mats_equal(const MatC& a, const MatC& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      if (!(a(i, j) == b(i, j))) return false;
  return true;
}

bool mats_equal(const MatR& a, const MatR& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      if (!(a(i, j) == b(i, j))) return false;
  return true;
}

MatC identity_matc(Eigen::Index n, long m) {
  MatC r = MatC::Zero(n, n);
  for (Eigen::Index i = 0; i < n; ++i) r(i, i) = CyclotomicNumber::one(m);
  return r;
}

MatC lift_matrix(const MatC& a, long m2) {
  MatC r(a.rows(), a.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j) r(i, j) = lift_to_compositum(a(i, j), m2);
  return r;
}

MatC galois_matrix(const MatC& a, long k) {
  MatC r(a.rows(), a.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j) r(i, j) = galois_apply(a(i, j), k);
  return r;
}

CyclotomicNumber det(const MatC& a) {
  if (a.rows() != a.cols()) throw ValidationError("determinant of non-square matrix");
  const Eigen::Index n = a.rows();
  if (n == 0) return CyclotomicNumber(Rational(1));
  MatC w = a;
  CyclotomicNumber result(Rational(1));
  for (Eigen::Index col = 0; col < n; ++col) {
    Eigen::Index piv = col;
    while (piv < n && w(piv, col).is_zero()) ++piv;
    if (piv == n) return CyclotomicNumber(Rational(0));
    if (piv != col) {
      w.row(piv).swap(w.row(col));
      result = -result;
    }
    result *= w(col, col);
    const CyclotomicNumber inv_p = inverse(w(col, col));
    for (Eigen::Index i = col + 1; i < n; ++i) {
      if (w(i, col).is_zero()) continue;
      const CyclotomicNumber f = w(i, col) * inv_p;
      for (Eigen::Index j = col; j < n; ++j) w(i, j) -= f * w(col, j);
    }
  }
  return result;
}

MatC gauss_inverse(const MatC& a) {
  if (a.rows() != a.cols()) throw ValidationError("inverse of non-square matrix");
  const Eigen::Index n = a.rows();
  MatC w = a;
  MatC inv = identity_matc(n, 1);
  for (Eigen::Index col = 0; col < n; ++col) {
    Eigen::Index piv = col;
    while (piv < n && w(piv, col).is_zero()) ++piv;
    if (piv == n) throw SingularFormError("matrix inverse: singular matrix");
    if (piv != col) {
      w.row(piv).swap(w.row(col));
      inv.row(piv).swap(inv.row(col));
    }
    const CyclotomicNumber inv_p = inverse(w(col, col));
    for (Eigen::Index j = 0; j < n; ++j) {
      w(col, j) = inv_p * w(col, j);
      inv(col, j) = inv_p * inv(col, j);
    }
    for (Eigen::Index i = 0; i < n; ++i) {
      if (i == col || w(i, col).is_zero()) continue;
      const CyclotomicNumber f = w(i, col);
      for (Eigen::Index j = 0; j < n; ++j) {
        w(i, j) -= f * w(col, j);
        inv(i, j) -= f * inv(col, j);
      }
    }
  }
  return inv;
}

MatC kernel_basis(const MatC& a) {
  const Eigen::Index rows = a.rows(), cols = a.cols();
  MatC w = a;
  std::vector<Eigen::Index> pivot_col_of_row;
  std::vector<bool> is_pivot(static_cast<size_t>(cols), false);
  Eigen::Index row = 0;
  for (Eigen::Index col = 0; col < cols && row < rows; ++col) {
    Eigen::Index piv = row;
    while (piv < rows && w(piv, col).is_zero()) ++piv;
    if (piv == rows) continue;
    if (piv != row) w.row(piv).swap(w.row(row));
    const CyclotomicNumber inv_p = inverse(w(row, col));
    for (Eigen::Index j = col; j < cols; ++j) w(row, j) = inv_p * w(row, j);
    for (Eigen::Index i = 0; i < rows; ++i) {
      if (i == row || w(i, col).is_zero()) continue;
      const CyclotomicNumber f = w(i, col);
      for (Eigen::Index j = col; j < cols; ++j) w(i, j) -= f * w(row, j);
    }
    pivot_col_of_row.push_back(col);
    is_pivot[static_cast<size_t>(col)] = true;
    ++row;
  }
  const Eigen::Index rank = row;
  const Eigen::Index dim = cols - rank;
  MatC basis = MatC::Zero(cols, dim);
  Eigen::Index out = 0;
  for (Eigen::Index free_col = 0; free_col < cols; ++free_col) {
    if (is_pivot[static_cast<size_t>(free_col)]) continue;
    basis(free_col, out) = CyclotomicNumber(Rational(1));
    for (Eigen::Index r = 0; r < rank; ++r) {
      const CyclotomicNumber& v = w(r, free_col);
      if (!v.is_zero()) basis(pivot_col_of_row[static_cast<size_t>(r)], out) = -v;
    }
    ++out;
  }
  return basis;
}

RationalFunction det(const MatR& a) {
  if (a.rows() != a.cols()) throw ValidationError("determinant of non-square matrix");
  const Eigen::Index n = a.rows();
  if (n == 0) return RationalFunction(Rational(1));
  // Clear each row to a common Laurent denominator, then run fraction-free
  // Bareiss elimination over the Laurent ring.
  std::vector<std::vector<LaurentPoly>> w(static_cast<size_t>(n),
                                          std::vector<LaurentPoly>(static_cast<size_t>(n)));
  RationalFunction den_product(Rational(1));
  for (Eigen::Index i = 0; i < n; ++i) {
    LaurentPoly row_den = a(i, 0).den();
    for (Eigen::Index j = 1; j < n; ++j) {
      // lcm(d1, d2) = d1 d2 / gcd.
      const LaurentPoly& dj = a(i, j).den();
      LaurentPoly g = poly_gcd(row_den, dj);
      row_den = poly_exact_div(row_den * dj, g);
    }
    for (Eigen::Index j = 0; j < n; ++j)
      w[static_cast<size_t>(i)][static_cast<size_t>(j)] =
          a(i, j).num() * poly_exact_div(row_den, a(i, j).den());
    den_product *= RationalFunction(row_den);
  }
  int sign_flips = 0;
  LaurentPoly prev_pivot = LaurentPoly::constant(CyclotomicNumber(Rational(1)));
  for (Eigen::Index col = 0; col < n; ++col) {
    Eigen::Index piv = col;
    while (piv < n && w[static_cast<size_t>(piv)][static_cast<size_t>(col)].is_zero()) ++piv;
    if (piv == n) return RationalFunction(Rational(0));
    if (piv != col) {
      std::swap(w[static_cast<size_t>(piv)], w[static_cast<size_t>(col)]);
      ++sign_flips;
    }
    const LaurentPoly& p = w[static_cast<size_t>(col)][static_cast<size_t>(col)];
    for (Eigen::Index i = col + 1; i < n; ++i) {
      for (Eigen::Index j = col + 1; j < n; ++j) {
        LaurentPoly v = w[static_cast<size_t>(i)][static_cast<size_t>(j)] * p -
                        w[static_cast<size_t>(i)][static_cast<size_t>(col)] *
                            w[static_cast<size_t>(col)][static_cast<size_t>(j)];
        w[static_cast<size_t>(i)][static_cast<size_t>(j)] = laurent_exact_div(v, prev_pivot);
      }
      w[static_cast<size_t>(i)][static_cast<size_t>(col)] = LaurentPoly(prev_pivot.conductor());
    }
    prev_pivot = p;
  }
  RationalFunction result(w[static_cast<size_t>(n - 1)][static_cast<size_t>(n - 1)]);
  if (sign_flips % 2) result = -result;
  return result / den_product;
}

}  // namespace wittsig
