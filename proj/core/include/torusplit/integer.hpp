#pragma once

#include <cstddef>
#include <initializer_list>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace torusplit {

using Integer = mpz_class;
using Rational = mpq_class;
using IntVector = std::vector<Integer>;
using RatVector = std::vector<Rational>;

IntVector make_int_vector(std::initializer_list<long> values);
IntVector make_int_vector(std::span<const long> values);

bool is_zero(std::span<const Integer> v);
/// gcd of all entries, nonnegative; 0 for the zero vector.
Integer content(std::span<const Integer> v);
/// v divided by its content; the zero vector is returned unchanged.
IntVector primitive(std::span<const Integer> v);
Integer dot(std::span<const Integer> a, std::span<const Integer> b);
IntVector negated(std::span<const Integer> v);
/// Scales a rational vector by the lcm of its denominators.
IntVector clear_denominators(std::span<const Rational> v);
std::string to_string(std::span<const Integer> v);

/// Dense row-major matrix of arbitrary-precision integers.
class IntMatrix {
public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols);
  IntMatrix(std::initializer_list<std::initializer_list<long>> rows);

  static IntMatrix identity(std::size_t n);
  static IntMatrix from_rows(std::span<const IntVector> rows, std::size_t cols);
  static IntMatrix from_columns(std::span<const IntVector> columns,
                                std::size_t rows);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool empty() const noexcept { return rows_ == 0 || cols_ == 0; }

  Integer& operator()(std::size_t r, std::size_t c) {
    return data_[r * cols_ + c];
  }
  const Integer& operator()(std::size_t r, std::size_t c) const {
    return data_[r * cols_ + c];
  }

  IntVector row(std::size_t r) const;
  IntVector column(std::size_t c) const;
  std::vector<IntVector> columns() const;

  IntMatrix transposed() const;
  /// Columns [first, first + count).
  IntMatrix column_block(std::size_t first, std::size_t count) const;
  /// Rows [first, first + count).
  IntMatrix row_block(std::size_t first, std::size_t count) const;
  /// [this | other]; row counts must agree.
  IntMatrix hstack(const IntMatrix& other) const;
  /// [this ; other]; column counts must agree.
  IntMatrix vstack(const IntMatrix& other) const;

  IntVector operator*(std::span<const Integer> v) const;
  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
  friend bool operator==(const IntMatrix& a, const IntMatrix& b) = default;

  void swap_rows(std::size_t a, std::size_t b);
  void swap_columns(std::size_t a, std::size_t b);

  /// Rank over Q.
  std::size_t rank() const;
  /// Exact determinant of a square matrix (fraction-free elimination).
  Integer determinant() const;

  std::string to_string() const;

private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Integer> data_;
};

std::ostream& operator<<(std::ostream& os, const IntMatrix& m);

/// Rank over Q of a list of vectors of common length.
std::size_t rank_of(std::span<const IntVector> vectors, std::size_t dim);

} // namespace torusplit
