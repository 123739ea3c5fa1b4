#include "torusplit/integer.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>

#include "torusplit/error.hpp"

namespace torusplit {

std::string_view to_string(ErrorCode code) {
  switch (code) {
  case ErrorCode::DimensionMismatch: return "DimensionMismatch";
  case ErrorCode::InvalidArgument: return "InvalidArgument";
  case ErrorCode::NotSaturated: return "NotSaturated";
  case ErrorCode::SyntaxError: return "SyntaxError";
  case ErrorCode::UnknownVariable: return "UnknownVariable";
  case ErrorCode::NegativeExponentOnNonInvertible:
    return "NegativeExponentOnNonInvertible";
  case ErrorCode::ZeroAtInvertibleVariable: return "ZeroAtInvertibleVariable";
  case ErrorCode::NotHomogeneous: return "NotHomogeneous";
  case ErrorCode::NotFaithful: return "NotFaithful";
  case ErrorCode::AlreadyFaithful: return "AlreadyFaithful";
  case ErrorCode::AssumptionMissing: return "AssumptionMissing";
  case ErrorCode::NoLinearVariable: return "NoLinearVariable";
  case ErrorCode::DegenerateDenominator: return "DegenerateDenominator";
  case ErrorCode::SearchSpaceTooLarge: return "SearchSpaceTooLarge";
  case ErrorCode::NotASolution: return "NotASolution";
  case ErrorCode::Overflow: return "Overflow";
  case ErrorCode::InternalInconsistency: return "InternalInconsistency";
  }
  return "Unknown";
}

IntVector make_int_vector(std::initializer_list<long> values) {
  return IntVector(values.begin(), values.end());
}

IntVector make_int_vector(std::span<const long> values) {
  return IntVector(values.begin(), values.end());
}

bool is_zero(std::span<const Integer> v) {
  return std::all_of(v.begin(), v.end(), [](const Integer& x) { return x == 0; });
}

Integer content(std::span<const Integer> v) {
  Integer g = 0;
  for (const auto& x : v) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
  }
  return g;
}

IntVector primitive(std::span<const Integer> v) {
  IntVector out(v.begin(), v.end());
  Integer g = content(v);
  if (g > 1) {
    for (auto& x : out) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
  }
  return out;
}

Integer dot(std::span<const Integer> a, std::span<const Integer> b) {
  if (a.size() != b.size()) {
    throw Error(ErrorCode::DimensionMismatch, "dot: length mismatch");
  }
  Integer s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

IntVector negated(std::span<const Integer> v) {
  IntVector out;
  out.reserve(v.size());
  for (const auto& x : v) out.push_back(-x);
  return out;
}

IntVector clear_denominators(std::span<const Rational> v) {
  Integer l = 1;
  for (const auto& q : v) {
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), q.get_den_mpz_t());
  }
  IntVector out;
  out.reserve(v.size());
  for (const auto& q : v) out.push_back(q.get_num() * (l / q.get_den()));
  return out;
}

std::string to_string(std::span<const Integer> v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ",";
    s += v[i].get_str();
  }
  return s + ")";
}

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols, Integer(0)) {}

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long>> rows) {
  rows_ = rows.size();
  cols_ = rows_ ? rows.begin()->size() : 0;
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) {
      throw Error(ErrorCode::DimensionMismatch, "ragged matrix literal");
    }
    for (long x : r) data_.emplace_back(x);
  }
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::from_rows(std::span<const IntVector> rows,
                               std::size_t cols) {
  IntMatrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) {
      throw Error(ErrorCode::DimensionMismatch, "from_rows: row length mismatch");
    }
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
  }
  return m;
}

IntMatrix IntMatrix::from_columns(std::span<const IntVector> columns,
                                  std::size_t rows) {
  IntMatrix m(rows, columns.size());
  for (std::size_t c = 0; c < columns.size(); ++c) {
    if (columns[c].size() != rows) {
      throw Error(ErrorCode::DimensionMismatch,
                  "from_columns: column length mismatch");
    }
    for (std::size_t r = 0; r < rows; ++r) m(r, c) = columns[c][r];
  }
  return m;
}

IntVector IntMatrix::row(std::size_t r) const {
  return IntVector(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                   data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
}

IntVector IntMatrix::column(std::size_t c) const {
  IntVector v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
  return v;
}

std::vector<IntVector> IntMatrix::columns() const {
  std::vector<IntVector> out;
  out.reserve(cols_);
  for (std::size_t c = 0; c < cols_; ++c) out.push_back(column(c));
  return out;
}

IntMatrix IntMatrix::transposed() const {
  IntMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

IntMatrix IntMatrix::column_block(std::size_t first, std::size_t count) const {
  if (first + count > cols_) {
    throw Error(ErrorCode::DimensionMismatch, "column_block out of range");
  }
  IntMatrix m(rows_, count);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < count; ++c) m(r, c) = (*this)(r, first + c);
  return m;
}

IntMatrix IntMatrix::row_block(std::size_t first, std::size_t count) const {
  if (first + count > rows_) {
    throw Error(ErrorCode::DimensionMismatch, "row_block out of range");
  }
  IntMatrix m(count, cols_);
  for (std::size_t r = 0; r < count; ++r)
    for (std::size_t c = 0; c < cols_; ++c) m(r, c) = (*this)(first + r, c);
  return m;
}

IntMatrix IntMatrix::hstack(const IntMatrix& other) const {
  if (rows_ != other.rows_) {
    throw Error(ErrorCode::DimensionMismatch, "hstack: row count mismatch");
  }
  IntMatrix m(rows_, cols_ + other.cols_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) m(r, c) = (*this)(r, c);
    for (std::size_t c = 0; c < other.cols_; ++c) m(r, cols_ + c) = other(r, c);
  }
  return m;
}

IntMatrix IntMatrix::vstack(const IntMatrix& other) const {
  if (cols_ != other.cols_) {
    throw Error(ErrorCode::DimensionMismatch, "vstack: column count mismatch");
  }
  IntMatrix m(rows_ + other.rows_, cols_);
  for (std::size_t c = 0; c < cols_; ++c) {
    for (std::size_t r = 0; r < rows_; ++r) m(r, c) = (*this)(r, c);
    for (std::size_t r = 0; r < other.rows_; ++r) m(rows_ + r, c) = other(r, c);
  }
  return m;
}

IntVector IntMatrix::operator*(std::span<const Integer> v) const {
  if (v.size() != cols_) {
    throw Error(ErrorCode::DimensionMismatch, "matrix-vector length mismatch");
  }
  IntVector out(rows_, Integer(0));
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) out[r] += (*this)(r, c) * v[c];
  return out;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols_ != b.rows_) {
    throw Error(ErrorCode::DimensionMismatch, "matrix product shape mismatch");
  }
  IntMatrix m(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Integer& aik = a(i, k);
      if (aik == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) m(i, j) += aik * b(k, j);
    }
  return m;
}

void IntMatrix::swap_rows(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t c = 0; c < cols_; ++c) std::swap((*this)(a, c), (*this)(b, c));
}

void IntMatrix::swap_columns(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t r = 0; r < rows_; ++r) std::swap((*this)(r, a), (*this)(r, b));
}

namespace {

// Bareiss elimination in place; returns the rank. For square input the last
// pivot is +-det (sign tracked by the caller through `swaps`).
std::size_t bareiss(IntMatrix& m, std::size_t& swaps) {
  const std::size_t rows = m.rows(), cols = m.cols();
  std::size_t rank = 0;
  Integer prev = 1;
  swaps = 0;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t p = rank;
    while (p < rows && m(p, c) == 0) ++p;
    if (p == rows) continue;
    if (p != rank) {
      m.swap_rows(p, rank);
      ++swaps;
    }
    for (std::size_t r = rank + 1; r < rows; ++r) {
      for (std::size_t j = c + 1; j < cols; ++j) {
        m(r, j) = (m(rank, c) * m(r, j) - m(r, c) * m(rank, j));
        mpz_divexact(m(r, j).get_mpz_t(), m(r, j).get_mpz_t(), prev.get_mpz_t());
      }
      m(r, c) = 0;
    }
    prev = m(rank, c);
    ++rank;
  }
  return rank;
}

} // namespace

std::size_t IntMatrix::rank() const {
  IntMatrix copy = *this;
  std::size_t swaps = 0;
  return bareiss(copy, swaps);
}

Integer IntMatrix::determinant() const {
  if (rows_ != cols_) {
    throw Error(ErrorCode::DimensionMismatch, "determinant of non-square matrix");
  }
  if (rows_ == 0) return 1;
  IntMatrix copy = *this;
  std::size_t swaps = 0;
  if (bareiss(copy, swaps) < rows_) return 0;
  Integer d = copy(rows_ - 1, cols_ - 1);
  return swaps % 2 ? Integer(-d) : d;
}

std::string IntMatrix::to_string() const {
  std::ostringstream os;
  os << *this;
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const IntMatrix& m) {
  os << "[";
  for (std::size_t r = 0; r < m.rows(); ++r) {
    if (r) os << ",";
    os << "[";
    for (std::size_t c = 0; c < m.cols(); ++c) {
      if (c) os << ",";
      os << m(r, c).get_str();
    }
    os << "]";
  }
  return os << "]";
}

std::size_t rank_of(std::span<const IntVector> vectors, std::size_t dim) {
  return IntMatrix::from_rows(vectors, dim).rank();
}

} // namespace torusplit
