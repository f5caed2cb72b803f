#include "blowuplab/linalg.hpp"

#include "blowuplab/errors.hpp"

#include <utility>

namespace blowuplab {

namespace {

using IntegerMatrix = std::vector<std::vector<mpz_class>>;

IntegerMatrix clear_denominators(const RationalMatrix &m) {
  IntegerMatrix out(m.rows(), std::vector<mpz_class>(m.cols()));
  for (std::size_t r = 0; r < m.rows(); ++r) {
    mpz_class l = 1;
    for (std::size_t c = 0; c < m.cols(); ++c)
      mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m(r, c).get_den_mpz_t());
    for (std::size_t c = 0; c < m.cols(); ++c)
      out[r][c] = m(r, c).get_num() * (l / m(r, c).get_den());
  }
  return out;
}

// Fraction-free echelon elimination in place. Every intermediate entry is a
// minor of the input, so the division by the previous pivot is exact.
// Returns the rank; `swaps` counts row exchanges.
std::size_t bareiss(IntegerMatrix &a, std::size_t cols, int &swaps) {
  const std::size_t rows = a.size();
  std::size_t r = 0;
  mpz_class previous = 1;
  swaps = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t pivot = r;
    while (pivot < rows && a[pivot][c] == 0)
      ++pivot;
    if (pivot == rows)
      continue;
    if (pivot != r) {
      std::swap(a[pivot], a[r]);
      ++swaps;
    }
    for (std::size_t i = r + 1; i < rows; ++i) {
      for (std::size_t j = c + 1; j < cols; ++j) {
        mpz_class v = a[i][j] * a[r][c] - a[i][c] * a[r][j];
        if (!mpz_divisible_p(v.get_mpz_t(), previous.get_mpz_t()))
          throw InternalError("fraction-free elimination produced an inexact division");
        mpz_divexact(a[i][j].get_mpz_t(), v.get_mpz_t(), previous.get_mpz_t());
      }
      a[i][c] = 0;
    }
    previous = a[r][c];
    ++r;
  }
  return r;
}

// Reduced row echelon form over Q; returns pivot columns.
std::vector<std::size_t> rref(std::vector<RationalVector> &a, std::size_t cols) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < a.size(); ++c) {
    std::size_t pivot = r;
    while (pivot < a.size() && is_zero(a[pivot][c]))
      ++pivot;
    if (pivot == a.size())
      continue;
    std::swap(a[pivot], a[r]);
    const Rational inv = 1 / a[r][c];
    for (auto &x : a[r])
      x *= inv;
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (i == r || is_zero(a[i][c]))
        continue;
      const Rational f = a[i][c];
      for (std::size_t j = 0; j < cols; ++j)
        a[i][j] -= f * a[r][j];
    }
    pivots.push_back(c);
    ++r;
  }
  a.resize(r);
  return pivots;
}

} // namespace

RationalMatrix RationalMatrix::identity(std::size_t n) {
  RationalMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    m(i, i) = 1;
  return m;
}

RationalMatrix RationalMatrix::from_rows(const std::vector<RationalVector> &rows, std::size_t cols) {
  RationalMatrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols)
      throw StructuralError("ragged matrix rows");
    for (std::size_t c = 0; c < cols; ++c)
      m(r, c) = rows[r][c];
  }
  return m;
}

RationalVector RationalMatrix::row(std::size_t r) const {
  return RationalVector(data_.begin() + r * cols_, data_.begin() + (r + 1) * cols_);
}

RationalVector RationalMatrix::column(std::size_t c) const {
  RationalVector out(rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    out[r] = (*this)(r, c);
  return out;
}

RationalMatrix RationalMatrix::transposed() const {
  RationalMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c)
      t(c, r) = (*this)(r, c);
  return t;
}

RationalMatrix operator*(const RationalMatrix &a, const RationalMatrix &b) {
  if (a.cols() != b.rows())
    throw StructuralError("matrix product dimension mismatch");
  RationalMatrix out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (is_zero(a(i, k)))
        continue;
      for (std::size_t j = 0; j < b.cols(); ++j)
        out(i, j) += a(i, k) * b(k, j);
    }
  return out;
}

RationalVector operator*(const RationalMatrix &m, const RationalVector &v) {
  if (m.cols() != v.size())
    throw StructuralError("matrix-vector dimension mismatch");
  RationalVector out(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      out[i] += m(i, j) * v[j];
  return out;
}

std::size_t rank(const RationalMatrix &m) {
  if (m.rows() == 0 || m.cols() == 0)
    return 0;
  auto a = clear_denominators(m);
  int swaps = 0;
  return bareiss(a, m.cols(), swaps);
}

Rational determinant(const RationalMatrix &m) {
  if (m.rows() != m.cols())
    throw StructuralError("determinant of a non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0)
    return 1;
  // det(m) = det(scaled) / prod(row scales)
  Rational scale = 1;
  IntegerMatrix a(n, std::vector<mpz_class>(n));
  for (std::size_t r = 0; r < n; ++r) {
    mpz_class l = 1;
    for (std::size_t c = 0; c < n; ++c)
      mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m(r, c).get_den_mpz_t());
    for (std::size_t c = 0; c < n; ++c)
      a[r][c] = m(r, c).get_num() * (l / m(r, c).get_den());
    scale *= Rational(l);
  }
  int swaps = 0;
  if (bareiss(a, n, swaps) < n)
    return 0;
  Rational det(a[n - 1][n - 1]);
  if (swaps % 2 != 0)
    det = -det;
  return det / scale;
}

std::vector<Rational> leading_principal_minors(const RationalMatrix &m) {
  std::vector<Rational> out;
  for (std::size_t k = 1; k <= m.rows(); ++k) {
    RationalMatrix sub(k, k);
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < k; ++j)
        sub(i, j) = m(i, j);
    out.push_back(determinant(sub));
  }
  return out;
}

std::vector<RationalVector> row_space_basis(const std::vector<RationalVector> &rows, std::size_t cols) {
  auto a = rows;
  for (const auto &r : a)
    if (r.size() != cols)
      throw StructuralError("ragged rows");
  rref(a, cols);
  return a;
}

std::vector<RationalVector> kernel_basis(const RationalMatrix &m) {
  std::vector<RationalVector> a;
  for (std::size_t r = 0; r < m.rows(); ++r)
    a.push_back(m.row(r));
  const auto pivots = rref(a, m.cols());
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : pivots)
    is_pivot[p] = true;
  std::vector<RationalVector> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free])
      continue;
    RationalVector v(m.cols());
    v[free] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r)
      v[pivots[r]] = -a[r][free];
    basis.push_back(std::move(v));
  }
  return basis;
}

bool in_column_span(const RationalMatrix &m, const RationalVector &b) {
  if (b.size() != m.rows())
    throw StructuralError("right-hand side has wrong length");
  RationalMatrix augmented(m.rows(), m.cols() + 1);
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c)
      augmented(r, c) = m(r, c);
    augmented(r, m.cols()) = b[r];
  }
  return rank(augmented) == rank(m);
}

RationalMatrix inverse(const RationalMatrix &m) {
  if (m.rows() != m.cols())
    throw StructuralError("inverse of a non-square matrix");
  const std::size_t n = m.rows();
  std::vector<RationalVector> a(n, RationalVector(2 * n));
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c)
      a[r][c] = m(r, c);
    a[r][n + r] = 1;
  }
  const auto pivots = rref(a, 2 * n);
  if (pivots.size() < n || pivots[n - 1] != n - 1)
    throw DomainError("matrix is singular");
  RationalMatrix inv(n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c)
      inv(r, c) = a[r][n + c];
  return inv;
}

} // namespace blowuplab
