#pragma once

#include "blowuplab/rational.hpp"

#include <cstddef>
#include <vector>

namespace blowuplab {

/// Dense row-major matrix of exact rationals. Sizes here are tiny (n <= 12).
class RationalMatrix {
public:
  RationalMatrix() = default;
  RationalMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static RationalMatrix identity(std::size_t n);
  static RationalMatrix from_rows(const std::vector<RationalVector> &rows, std::size_t cols);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  Rational &operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational &operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  RationalVector row(std::size_t r) const;
  RationalVector column(std::size_t c) const;
  RationalMatrix transposed() const;

  friend RationalMatrix operator*(const RationalMatrix &a, const RationalMatrix &b);
  friend bool operator==(const RationalMatrix &, const RationalMatrix &) = default;

private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

/// Rank by fraction-free (Bareiss) elimination over the integers, after
/// clearing denominators row by row.
std::size_t rank(const RationalMatrix &m);

/// Determinant of a square matrix, fraction-free.
Rational determinant(const RationalMatrix &m);

/// Leading principal minors det(m[0..k, 0..k]) for k = 1..n.
std::vector<Rational> leading_principal_minors(const RationalMatrix &m);

/// Nonzero rows of the reduced row echelon form: a canonical basis of the
/// row space.
std::vector<RationalVector> row_space_basis(const std::vector<RationalVector> &rows, std::size_t cols);

/// Basis of {x : m x = 0}.
std::vector<RationalVector> kernel_basis(const RationalMatrix &m);

/// True iff b lies in the column space of m.
bool in_column_span(const RationalMatrix &m, const RationalVector &b);

/// Inverse of a square matrix; throws DomainError when singular.
RationalMatrix inverse(const RationalMatrix &m);

RationalVector operator*(const RationalMatrix &m, const RationalVector &v);

} // namespace blowuplab
