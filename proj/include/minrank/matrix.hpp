#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "minrank/scalar.hpp"

namespace minrank {

// {0,*} support signature of a matrix or sequence.
struct ZeroPattern {
  std::size_t length = 0;
  std::vector<bool> nonzero;  // nonzero[i] == true means '*'

  bool operator==(const ZeroPattern& o) const = default;
  auto operator<=>(const ZeroPattern& o) const = default;

  std::string to_string() const {
    std::string s;
    s.reserve(length);
    for (bool b : nonzero) s.push_back(b ? '*' : '0');
    return s;
  }
};

// Dense row-major matrix over a scalar domain D (GF, Rationals, Reals).
template <class D>
class Matrix {
 public:
  using Scalar = typename D::Scalar;

  Matrix(D dom, std::size_t rows, std::size_t cols)
      : dom_(std::move(dom)), rows_(rows), cols_(cols),
        a_(rows * cols, dom_.zero()) {}

  static Matrix identity(D dom, std::size_t n) {
    Matrix m(dom, n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = m.dom_.one();
    return m;
  }

  static Matrix constant(D dom, std::size_t rows, std::size_t cols, Scalar v) {
    Matrix m(std::move(dom), rows, cols);
    for (auto& x : m.a_) x = v;
    return m;
  }

  const D& domain() const { return dom_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Scalar& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  const Scalar& operator()(std::size_t i, std::size_t j) const {
    return a_[i * cols_ + j];
  }

  bool operator==(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_ || !(dom_ == o.dom_)) return false;
    for (std::size_t t = 0; t < a_.size(); ++t)
      if (!dom_.eq(a_[t], o.a_[t])) return false;
    return true;
  }

  std::size_t nonzero_count() const {
    std::size_t s = 0;
    for (const auto& x : a_)
      if (!dom_.is_zero(x)) ++s;
    return s;
  }

 private:
  D dom_;
  std::size_t rows_, cols_;
  std::vector<Scalar> a_;
};

// Rank by exact Gaussian elimination; exact domains only.
template <class D>
std::size_t mat_rank(const Matrix<D>& m) {
  static_assert(D::exact, "mat_rank requires an exact domain; use real_rank");
  const D& dom = m.domain();
  Matrix<D> w = m;
  std::size_t rank = 0;
  for (std::size_t col = 0; col < m.cols() && rank < m.rows(); ++col) {
    std::size_t piv = rank;
    while (piv < m.rows() && dom.is_zero(w(piv, col))) ++piv;
    if (piv == m.rows()) continue;
    for (std::size_t j = 0; j < m.cols(); ++j) std::swap(w(rank, j), w(piv, j));
    auto pivinv = dom.inv(w(rank, col));
    for (std::size_t i = rank + 1; i < m.rows(); ++i) {
      if (dom.is_zero(w(i, col))) continue;
      auto f = dom.mul(w(i, col), pivinv);
      for (std::size_t j = col; j < m.cols(); ++j)
        w(i, j) = dom.sub(w(i, j), dom.mul(f, w(rank, j)));
    }
    ++rank;
  }
  return rank;
}

// Rank of a float matrix by elimination with partial pivoting; a pivot
// counts as zero when |pivot| <= tol * max_abs_entry (1 for the zero matrix).
inline std::size_t real_rank(const Matrix<Reals>& m, double tol) {
  if (tol < 0) throw std::invalid_argument("real_rank: tol must be >= 0");
  double maxabs = 0.0;
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (!std::isfinite(m(i, j)))
        throw std::invalid_argument("real_rank: non-finite input");
      maxabs = std::max(maxabs, std::fabs(m(i, j)));
    }
  if (maxabs == 0.0) maxabs = 1.0;
  const double cutoff = tol * maxabs;

  Matrix<Reals> w = m;
  std::size_t rank = 0;
  for (std::size_t col = 0; col < m.cols() && rank < m.rows(); ++col) {
    std::size_t piv = rank;
    for (std::size_t i = rank + 1; i < m.rows(); ++i)
      if (std::fabs(w(i, col)) > std::fabs(w(piv, col))) piv = i;
    if (std::fabs(w(piv, col)) <= cutoff) continue;
    for (std::size_t j = 0; j < m.cols(); ++j) std::swap(w(rank, j), w(piv, j));
    for (std::size_t i = rank + 1; i < m.rows(); ++i) {
      double f = w(i, col) / w(rank, col);
      for (std::size_t j = col; j < m.cols(); ++j) w(i, j) -= f * w(rank, j);
    }
    ++rank;
  }
  return rank;
}

namespace detail {

// Greedy scan in index order; keeps a row iff it enlarges the span.
// Yields the lexicographically-first independent index set of full rank.
template <class D>
std::vector<std::size_t> greedy_row_basis(const Matrix<D>& m) {
  const D& dom = m.domain();
  std::vector<std::vector<typename D::Scalar>> basis;  // reduced rows
  std::vector<std::size_t> pivcol;
  std::vector<std::size_t> picked;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    std::vector<typename D::Scalar> v;
    v.reserve(m.cols());
    for (std::size_t j = 0; j < m.cols(); ++j) v.push_back(m(i, j));
    for (std::size_t b = 0; b < basis.size(); ++b) {
      if (dom.is_zero(v[pivcol[b]])) continue;
      auto f = v[pivcol[b]];
      for (std::size_t j = 0; j < m.cols(); ++j)
        v[j] = dom.sub(v[j], dom.mul(f, basis[b][j]));
    }
    std::size_t lead = 0;
    while (lead < m.cols() && dom.is_zero(v[lead])) ++lead;
    if (lead == m.cols()) continue;
    auto pi = dom.inv(v[lead]);
    for (auto& x : v) x = dom.mul(x, pi);
    basis.push_back(std::move(v));
    pivcol.push_back(lead);
    picked.push_back(i);
  }
  return picked;
}

}  // namespace detail

template <class D>
Matrix<D> transpose(const Matrix<D>& m) {
  Matrix<D> t(m.domain(), m.cols(), m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) t(j, i) = m(i, j);
  return t;
}

// Lexicographically-first row and column bases, each of size rank(M).
template <class D>
std::pair<std::vector<std::size_t>, std::vector<std::size_t>> row_col_bases(
    const Matrix<D>& m) {
  static_assert(D::exact, "row_col_bases requires an exact domain");
  return {detail::greedy_row_basis(m), detail::greedy_row_basis(transpose(m))};
}

template <class D>
typename D::Scalar determinant(const Matrix<D>& m) {
  static_assert(D::exact, "determinant requires an exact domain");
  if (m.rows() != m.cols())
    throw std::invalid_argument("determinant: matrix not square");
  const D& dom = m.domain();
  const std::size_t n = m.rows();
  Matrix<D> w = m;
  auto det = dom.one();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && dom.is_zero(w(piv, col))) ++piv;
    if (piv == n) return dom.zero();
    if (piv != col) {
      for (std::size_t j = 0; j < n; ++j) std::swap(w(col, j), w(piv, j));
      det = dom.neg(det);
    }
    det = dom.mul(det, w(col, col));
    auto pivinv = dom.inv(w(col, col));
    for (std::size_t i = col + 1; i < n; ++i) {
      if (dom.is_zero(w(i, col))) continue;
      auto f = dom.mul(w(i, col), pivinv);
      for (std::size_t j = col; j < n; ++j)
        w(i, j) = dom.sub(w(i, j), dom.mul(f, w(col, j)));
    }
  }
  return det;
}

// Solves A x = b componentwise as det(A with column j <- b) / det(A).
template <class D>
std::vector<typename D::Scalar> cramer_solve(
    const Matrix<D>& a, const std::vector<typename D::Scalar>& b) {
  static_assert(D::exact, "cramer_solve requires an exact domain");
  if (a.rows() != a.cols() || b.size() != a.rows())
    throw std::invalid_argument("cramer_solve: shape mismatch");
  const D& dom = a.domain();
  auto det = determinant(a);
  if (dom.is_zero(det)) throw std::domain_error("cramer_solve: singular system");
  auto detinv = dom.inv(det);
  std::vector<typename D::Scalar> x;
  x.reserve(a.rows());
  for (std::size_t j = 0; j < a.cols(); ++j) {
    Matrix<D> aj = a;
    for (std::size_t i = 0; i < a.rows(); ++i) aj(i, j) = b[i];
    x.push_back(dom.mul(determinant(aj), detinv));
  }
  return x;
}

// Checks that every column l > k is the combination of the first k columns
// whose coefficients come from Cramer's rule on the leading k x k block.
template <class D>
bool column_expansion_check(const Matrix<D>& m, std::size_t k) {
  static_assert(D::exact, "column_expansion_check requires an exact domain");
  if (k == 0 || k > m.rows() || k > m.cols())
    throw std::invalid_argument("column_expansion_check: bad k");
  const D& dom = m.domain();
  Matrix<D> lead(dom, k, k);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) lead(i, j) = m(i, j);
  if (dom.is_zero(determinant(lead)))
    throw std::domain_error("column_expansion_check: singular leading block");
  for (std::size_t l = k; l < m.cols(); ++l) {
    std::vector<typename D::Scalar> top;
    top.reserve(k);
    for (std::size_t i = 0; i < k; ++i) top.push_back(m(i, l));
    auto c = cramer_solve(lead, top);
    for (std::size_t i = 0; i < m.rows(); ++i) {
      auto acc = dom.zero();
      for (std::size_t j = 0; j < k; ++j)
        acc = dom.add(acc, dom.mul(c[j], m(i, j)));
      if (!dom.eq(acc, m(i, l))) return false;
    }
  }
  return true;
}

template <class D>
Matrix<D> hadamard(const Matrix<D>& a, const Matrix<D>& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols() ||
      !(a.domain() == b.domain()))
    throw std::invalid_argument("hadamard: shape or domain mismatch");
  Matrix<D> c(a.domain(), a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      c(i, j) = a.domain().mul(a(i, j), b(i, j));
  return c;
}

template <class D>
Matrix<D> principal_submatrix(const Matrix<D>& m,
                              const std::vector<std::size_t>& subset) {
  if (m.rows() != m.cols())
    throw std::invalid_argument("principal_submatrix: matrix not square");
  for (std::size_t v : subset)
    if (v >= m.rows())
      throw std::out_of_range("principal_submatrix: index out of range");
  Matrix<D> s(m.domain(), subset.size(), subset.size());
  for (std::size_t i = 0; i < subset.size(); ++i)
    for (std::size_t j = 0; j < subset.size(); ++j)
      s(i, j) = m(subset[i], subset[j]);
  return s;
}

template <class D>
ZeroPattern zero_pattern(const Matrix<D>& m) {
  ZeroPattern zp;
  zp.length = m.rows() * m.cols();
  zp.nonzero.reserve(zp.length);
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      zp.nonzero.push_back(!m.domain().is_zero(m(i, j)));
  return zp;
}

template <class D>
Matrix<D> mat_mul(const Matrix<D>& a, const Matrix<D>& b) {
  if (a.cols() != b.rows() || !(a.domain() == b.domain()))
    throw std::invalid_argument("mat_mul: shape or domain mismatch");
  const D& dom = a.domain();
  Matrix<D> c(dom, a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t t = 0; t < a.cols(); ++t) {
      if (dom.is_zero(a(i, t))) continue;
      for (std::size_t j = 0; j < b.cols(); ++j)
        c(i, j) = dom.add(c(i, j), dom.mul(a(i, t), b(t, j)));
    }
  return c;
}

}  // namespace minrank
