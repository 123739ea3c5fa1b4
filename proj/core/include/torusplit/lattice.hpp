#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "torusplit/integer.hpp"

namespace torusplit {

/// Smith normal form U * A * V = D.
///
/// Pivoting rule: at each step the pivot is the nonzero entry of the active
/// submatrix with smallest absolute value, ties broken by row-major position.
/// The inverses of U and V are tracked alongside so that callers needing a
/// basis of the column space (saturation, complements) never invert.
struct SnfDecomposition {
  IntMatrix U;
  IntMatrix D;
  IntMatrix V;
  IntMatrix U_inv;
  IntMatrix V_inv;

  std::size_t rank() const;
  /// Nonzero diagonal entries d_1 | d_2 | ... | d_r.
  IntVector elementary_divisors() const;
};

SnfDecomposition snf(const IntMatrix& a);

/// A sublattice of Z^ambient_rank given by a basis stored as matrix columns.
class Sublattice {
public:
  /// Throws InvalidArgument if the columns are dependent.
  Sublattice(std::size_t ambient_rank, IntMatrix basis);

  static Sublattice zero(std::size_t ambient_rank);
  static Sublattice full(std::size_t ambient_rank);

  std::size_t ambient_rank() const noexcept { return ambient_rank_; }
  std::size_t rank() const noexcept { return basis_.cols(); }
  const IntMatrix& basis() const noexcept { return basis_; }
  std::vector<IntVector> basis_vectors() const { return basis_.columns(); }

  bool contains(std::span<const Integer> v) const;
  bool is_saturated() const;
  /// Same set of lattice points (bases may differ).
  bool same_lattice(const Sublattice& other) const;

private:
  std::size_t ambient_rank_;
  IntMatrix basis_;
};

/// {v in Z^cols : A v = 0}; the result is always saturated.
Sublattice kernel_lattice(const IntMatrix& a);

/// span_Q(L) intersected with Z^ambient.
Sublattice saturate(const Sublattice& lattice);

/// Saturated lattice of the Q-span of arbitrary (possibly dependent) vectors.
Sublattice saturated_span(std::span<const IntVector> vectors,
                          std::size_t ambient_rank);

/// {n in Z^ambient : <h, n> = 0 for every h}.
Sublattice orthogonal_sublattice(std::span<const RatVector> h_basis,
                                 std::size_t ambient_rank);
Sublattice orthogonal_sublattice(std::span<const IntVector> h_basis,
                                 std::size_t ambient_rank);

/// A sublattice N2 with N1 + N2 = Z^ambient as a direct sum. Throws
/// NotSaturated when Z^ambient / N1 has torsion.
Sublattice complement(const Sublattice& n1);

/// Whether v is an integer combination of the (possibly dependent) vectors.
bool in_integer_span(std::span<const IntVector> vectors,
                     std::span<const Integer> v);

/// Restriction of characters to N_i: row j pairs with the j-th basis vector.
IntMatrix dual_projection(const Sublattice& n);

/// LLL-reduced basis (delta = 3/4) of the lattice spanned by the rows, which
/// must be linearly independent. Exact rational Gram-Schmidt; small sizes.
IntMatrix lll_reduce_rows(const IntMatrix& rows);

/// Small integer matrix with the same kernel as `a`: an LLL-reduced basis of
/// the saturated row lattice. Keeps at least one (possibly zero) row.
IntMatrix reduced_kernel_equations(const IntMatrix& a);

} // namespace torusplit
