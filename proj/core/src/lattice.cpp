#include "torusplit/lattice.hpp"

#include <algorithm>
#include <optional>
#include <utility>

#include "torusplit/error.hpp"

namespace torusplit {

namespace {

// Elementary operations applied to the working matrix while keeping
// U, U^-1, V and V^-1 in step.
class SnfWorkspace {
public:
  explicit SnfWorkspace(const IntMatrix& a)
      : A(a), U(IntMatrix::identity(a.rows())),
        U_inv(IntMatrix::identity(a.rows())),
        V(IntMatrix::identity(a.cols())),
        V_inv(IntMatrix::identity(a.cols())) {}

  // row_i += q * row_j
  void add_row(std::size_t i, std::size_t j, const Integer& q) {
    if (q == 0) return;
    for (std::size_t c = 0; c < A.cols(); ++c) A(i, c) += q * A(j, c);
    for (std::size_t c = 0; c < U.cols(); ++c) U(i, c) += q * U(j, c);
    for (std::size_t r = 0; r < U_inv.rows(); ++r) U_inv(r, j) -= q * U_inv(r, i);
  }

  // col_j += q * col_i
  void add_col(std::size_t j, std::size_t i, const Integer& q) {
    if (q == 0) return;
    for (std::size_t r = 0; r < A.rows(); ++r) A(r, j) += q * A(r, i);
    for (std::size_t r = 0; r < V.rows(); ++r) V(r, j) += q * V(r, i);
    for (std::size_t c = 0; c < V_inv.cols(); ++c) V_inv(i, c) -= q * V_inv(j, c);
  }

  void swap_rows(std::size_t i, std::size_t j) {
    if (i == j) return;
    A.swap_rows(i, j);
    U.swap_rows(i, j);
    U_inv.swap_columns(i, j);
  }

  void swap_cols(std::size_t i, std::size_t j) {
    if (i == j) return;
    A.swap_columns(i, j);
    V.swap_columns(i, j);
    V_inv.swap_rows(i, j);
  }

  void negate_row(std::size_t i) {
    for (std::size_t c = 0; c < A.cols(); ++c) A(i, c) = -A(i, c);
    for (std::size_t c = 0; c < U.cols(); ++c) U(i, c) = -U(i, c);
    for (std::size_t r = 0; r < U_inv.rows(); ++r) U_inv(r, i) = -U_inv(r, i);
  }

  // Smallest nonzero |a_ij| with i, j >= t, ties by row-major order.
  std::optional<std::pair<std::size_t, std::size_t>> pivot(std::size_t t) const {
    std::optional<std::pair<std::size_t, std::size_t>> best;
    Integer best_abs;
    for (std::size_t i = t; i < A.rows(); ++i)
      for (std::size_t j = t; j < A.cols(); ++j) {
        if (A(i, j) == 0) continue;
        Integer m = abs(A(i, j));
        if (!best || m < best_abs) {
          best = {i, j};
          best_abs = m;
        }
      }
    return best;
  }

  IntMatrix A, U, U_inv, V, V_inv;
};

void normalize_column_signs(IntMatrix& basis) {
  for (std::size_t c = 0; c < basis.cols(); ++c) {
    std::size_t r = 0;
    while (r < basis.rows() && basis(r, c) == 0) ++r;
    if (r < basis.rows() && basis(r, c) < 0) {
      for (std::size_t k = 0; k < basis.rows(); ++k) basis(k, c) = -basis(k, c);
    }
  }
}

Sublattice normalized(std::size_t ambient, IntMatrix basis) {
  normalize_column_signs(basis);
  return Sublattice(ambient, std::move(basis));
}

} // namespace

std::size_t SnfDecomposition::rank() const {
  std::size_t r = 0;
  while (r < D.rows() && r < D.cols() && D(r, r) != 0) ++r;
  return r;
}

IntVector SnfDecomposition::elementary_divisors() const {
  IntVector out;
  for (std::size_t i = 0; i < rank(); ++i) out.push_back(D(i, i));
  return out;
}

SnfDecomposition snf(const IntMatrix& a) {
  SnfWorkspace w(a);
  const std::size_t limit = std::min(a.rows(), a.cols());
  for (std::size_t t = 0; t < limit; ++t) {
    auto p = w.pivot(t);
    if (!p) break;
    w.swap_rows(t, p->first);
    w.swap_cols(t, p->second);
    for (;;) {
      bool clean = true;
      for (std::size_t i = t + 1; i < a.rows(); ++i) {
        if (w.A(i, t) == 0) continue;
        Integer q;
        mpz_fdiv_q(q.get_mpz_t(), w.A(i, t).get_mpz_t(), w.A(t, t).get_mpz_t());
        w.add_row(i, t, -q);
        if (w.A(i, t) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < a.cols(); ++j) {
        if (w.A(t, j) == 0) continue;
        Integer q;
        mpz_fdiv_q(q.get_mpz_t(), w.A(t, j).get_mpz_t(), w.A(t, t).get_mpz_t());
        w.add_col(j, t, -q);
        if (w.A(t, j) != 0) clean = false;
      }
      if (!clean) {
        // A remainder smaller than the pivot survived; re-pivot.
        auto np = w.pivot(t);
        w.swap_rows(t, np->first);
        w.swap_cols(t, np->second);
        continue;
      }
      // Divisibility: fold an offending row into the pivot row and repeat.
      std::optional<std::size_t> offending;
      for (std::size_t i = t + 1; i < a.rows() && !offending; ++i)
        for (std::size_t j = t + 1; j < a.cols(); ++j) {
          if (!mpz_divisible_p(w.A(i, j).get_mpz_t(), w.A(t, t).get_mpz_t())) {
            offending = i;
            break;
          }
        }
      if (!offending) break;
      w.add_row(t, *offending, Integer(1));
    }
    if (w.A(t, t) < 0) w.negate_row(t);
  }
  return SnfDecomposition{std::move(w.U), std::move(w.A), std::move(w.V),
                          std::move(w.U_inv), std::move(w.V_inv)};
}

Sublattice::Sublattice(std::size_t ambient_rank, IntMatrix basis)
    : ambient_rank_(ambient_rank), basis_(std::move(basis)) {
  if (basis_.rows() != ambient_rank_ && !(basis_.cols() == 0)) {
    throw Error(ErrorCode::DimensionMismatch,
                "sublattice basis rows differ from ambient rank");
  }
  if (basis_.cols() == 0) basis_ = IntMatrix(ambient_rank_, 0);
  if (basis_.rank() != basis_.cols()) {
    throw Error(ErrorCode::InvalidArgument,
                "sublattice basis vectors are linearly dependent");
  }
}

Sublattice Sublattice::zero(std::size_t ambient_rank) {
  return Sublattice(ambient_rank, IntMatrix(ambient_rank, 0));
}

Sublattice Sublattice::full(std::size_t ambient_rank) {
  return Sublattice(ambient_rank, IntMatrix::identity(ambient_rank));
}

bool Sublattice::contains(std::span<const Integer> v) const {
  if (v.size() != ambient_rank_) {
    throw Error(ErrorCode::DimensionMismatch, "vector length differs from ambient rank");
  }
  if (rank() == 0) return is_zero(v);
  const SnfDecomposition s = snf(basis_);
  const IntVector y = s.U * v;
  const std::size_t r = s.rank();
  for (std::size_t i = 0; i < y.size(); ++i) {
    if (i < r) {
      if (!mpz_divisible_p(y[i].get_mpz_t(), s.D(i, i).get_mpz_t())) return false;
    } else if (y[i] != 0) {
      return false;
    }
  }
  return true;
}

bool Sublattice::is_saturated() const {
  if (rank() == 0) return true;
  for (const auto& d : snf(basis_).elementary_divisors()) {
    if (d != 1) return false;
  }
  return true;
}

bool Sublattice::same_lattice(const Sublattice& other) const {
  if (ambient_rank_ != other.ambient_rank_ || rank() != other.rank()) return false;
  for (const auto& b : other.basis_vectors())
    if (!contains(b)) return false;
  for (const auto& b : basis_vectors())
    if (!other.contains(b)) return false;
  return true;
}

Sublattice kernel_lattice(const IntMatrix& a) {
  if (a.rows() == 0) return Sublattice::full(a.cols());
  const SnfDecomposition s = snf(a);
  const std::size_t r = s.rank();
  return normalized(a.cols(), s.V.column_block(r, a.cols() - r));
}

Sublattice saturated_span(std::span<const IntVector> vectors,
                          std::size_t ambient_rank) {
  std::vector<IntVector> nonzero;
  for (const auto& v : vectors) {
    if (v.size() != ambient_rank) {
      throw Error(ErrorCode::DimensionMismatch, "vector length differs from ambient rank");
    }
    if (!is_zero(v)) nonzero.push_back(v);
  }
  if (nonzero.empty()) return Sublattice::zero(ambient_rank);
  const SnfDecomposition s = snf(IntMatrix::from_columns(nonzero, ambient_rank));
  return normalized(ambient_rank, s.U_inv.column_block(0, s.rank()));
}

Sublattice saturate(const Sublattice& lattice) {
  return saturated_span(lattice.basis_vectors(), lattice.ambient_rank());
}

Sublattice orthogonal_sublattice(std::span<const IntVector> h_basis,
                                 std::size_t ambient_rank) {
  std::vector<IntVector> rows;
  for (const auto& h : h_basis) {
    if (h.size() != ambient_rank) {
      throw Error(ErrorCode::DimensionMismatch, "vector length differs from ambient rank");
    }
    if (!is_zero(h)) rows.push_back(h);
  }
  if (rows.empty()) return Sublattice::full(ambient_rank);
  return kernel_lattice(IntMatrix::from_rows(rows, ambient_rank));
}

Sublattice orthogonal_sublattice(std::span<const RatVector> h_basis,
                                 std::size_t ambient_rank) {
  std::vector<IntVector> scaled;
  scaled.reserve(h_basis.size());
  for (const auto& h : h_basis) scaled.push_back(clear_denominators(h));
  return orthogonal_sublattice(std::span<const IntVector>(scaled), ambient_rank);
}

Sublattice complement(const Sublattice& n1) {
  const std::size_t k = n1.ambient_rank();
  if (n1.rank() == 0) return Sublattice::full(k);
  if (!n1.is_saturated()) {
    throw Error(ErrorCode::NotSaturated,
                "complement requires a saturated sublattice (quotient has torsion)");
  }
  const SnfDecomposition s = snf(n1.basis());
  return normalized(k, s.U_inv.column_block(n1.rank(), k - n1.rank()));
}

bool in_integer_span(std::span<const IntVector> vectors,
                     std::span<const Integer> v) {
  if (is_zero(v)) return true;
  if (vectors.empty()) return false;
  const SnfDecomposition s = snf(IntMatrix::from_columns(vectors, v.size()));
  const IntVector y = s.U * v;
  const std::size_t r = s.rank();
  for (std::size_t i = 0; i < y.size(); ++i) {
    if (i < r) {
      if (!mpz_divisible_p(y[i].get_mpz_t(), s.D(i, i).get_mpz_t())) return false;
    } else if (y[i] != 0) {
      return false;
    }
  }
  return true;
}

IntMatrix dual_projection(const Sublattice& n) {
  return n.basis().transposed();
}

IntMatrix lll_reduce_rows(const IntMatrix& rows) {
  const std::size_t m = rows.rows(), n = rows.cols();
  std::vector<IntVector> b;
  for (std::size_t i = 0; i < m; ++i) b.push_back(rows.row(i));
  if (m < 2) return rows;

  std::vector<RatVector> star(m);
  std::vector<std::vector<Rational>> mu(m, std::vector<Rational>(m));
  std::vector<Rational> norm(m);
  auto gram_schmidt = [&] {
    for (std::size_t i = 0; i < m; ++i) {
      star[i].assign(b[i].begin(), b[i].end());
      for (std::size_t j = 0; j < i; ++j) {
        Rational d = 0;
        for (std::size_t c = 0; c < n; ++c) d += Rational(b[i][c]) * star[j][c];
        mu[i][j] = d / norm[j];
        for (std::size_t c = 0; c < n; ++c) star[i][c] -= mu[i][j] * star[j][c];
      }
      norm[i] = 0;
      for (const auto& x : star[i]) norm[i] += x * x;
      if (norm[i] == 0) throw Error(ErrorCode::InvalidArgument, "lll_reduce_rows: dependent rows");
    }
  };
  auto nearest = [](const Rational& x) {
    Integer q;
    Integer num = 2 * x.get_num() + x.get_den();
    Integer den = 2 * x.get_den();
    mpz_fdiv_q(q.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    return q;
  };

  const Rational delta(3, 4);
  gram_schmidt();
  std::size_t k = 1;
  while (k < m) {
    for (std::size_t j = k; j-- > 0;) {
      const Integer q = nearest(mu[k][j]);
      if (q == 0) continue;
      for (std::size_t c = 0; c < n; ++c) b[k][c] -= q * b[j][c];
      gram_schmidt();
    }
    if (norm[k] >= (delta - mu[k][k - 1] * mu[k][k - 1]) * norm[k - 1]) {
      ++k;
    } else {
      std::swap(b[k], b[k - 1]);
      gram_schmidt();
      k = std::max<std::size_t>(k - 1, 1);
    }
  }
  return IntMatrix::from_rows(b, n);
}

IntMatrix reduced_kernel_equations(const IntMatrix& a) {
  const std::size_t n = a.cols();
  const Sublattice rows = orthogonal_sublattice(kernel_lattice(a).basis_vectors(), n);
  if (rows.rank() == 0) return IntMatrix(1, n);
  return lll_reduce_rows(rows.basis().transposed());
}

} // namespace torusplit
