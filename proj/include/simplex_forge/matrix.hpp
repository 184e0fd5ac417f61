/**
 * Dense matrices of arbitrary-precision integers with exact, fraction-free
 * elimination. No floating point is used anywhere.
 */
#ifndef SIMPLEX_FORGE_MATRIX_HPP
#define SIMPLEX_FORGE_MATRIX_HPP

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

#include "simplex_forge/numbers.hpp"

namespace simplex_forge {

class IntegerMatrix {
 public:
  IntegerMatrix() = default;
  IntegerMatrix(std::size_t rows, std::size_t cols);
  /// Square zero matrix.
  explicit IntegerMatrix(std::size_t order) : IntegerMatrix(order, order) {}
  IntegerMatrix(std::initializer_list<std::initializer_list<long>> rows);

  static IntegerMatrix identity(std::size_t order);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }
  /// Number of rows of a square matrix.
  std::size_t order() const noexcept { return rows_; }

  BigInt& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const BigInt& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  IntegerMatrix transposed() const;
  /// Rows [r0, r1) and columns [c0, c1).
  IntegerMatrix block(std::size_t r0, std::size_t r1, std::size_t c0, std::size_t c1) const;
  bool is_symmetric() const;
  bool is_zero() const;
  BigInt trace() const;
  /// Sum of all entries.
  BigInt entry_sum() const;
  BigInt row_sum(std::size_t i) const;

  friend bool operator==(const IntegerMatrix&, const IntegerMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<BigInt> data_;
};

IntegerMatrix operator*(const IntegerMatrix& a, const IntegerMatrix& b);
IntegerMatrix operator+(const IntegerMatrix& a, const IntegerMatrix& b);

/// a^m for a square matrix, m >= 0.
IntegerMatrix power(const IntegerMatrix& a, unsigned m);

/// Exact determinant by Bareiss fraction-free elimination. Requires a square
/// matrix; the empty matrix has determinant 1.
BigInt determinant(IntegerMatrix m);

/// Rank over the rationals, by fraction-free elimination.
std::size_t rank(IntegerMatrix m);

/// order - rank for a square matrix.
std::size_t nullity(const IntegerMatrix& m);

std::string to_string(const IntegerMatrix& m);

}  // namespace simplex_forge

#endif
