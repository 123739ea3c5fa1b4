#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "torusplit/integer.hpp"

namespace torusplit {

/// {v in Z^n_vars : A v = 0, v_j >= 0 for j in the nonnegative set}.
/// Coordinates outside the nonnegative set are free (invertible variables).
struct DiophantineSystem {
  IntMatrix matrix;
  std::vector<bool> nonneg;

  DiophantineSystem(IntMatrix a, std::vector<bool> nonneg_mask);
  static DiophantineSystem all_nonnegative(IntMatrix a);

  std::size_t n_vars() const noexcept { return nonneg.size(); }
  bool has_free_coordinates() const;
  bool is_solution(std::span<const Integer> v) const;
};

/// Generating set of the solution monoid of a DiophantineSystem.
///
/// With only nonnegative coordinates this is the Hilbert basis (unique and
/// minimal). With free coordinates the monoid has units; the elements then
/// form a generating set that is inclusion-minimal under `generates`, which
/// is not canonical and may differ from other tools.
struct HilbertBasis {
  DiophantineSystem system;
  std::vector<IntVector> elements;
};

HilbertBasis hilbert_basis(const DiophantineSystem& sys);

inline constexpr std::uint64_t kDefaultEnumerationCap = 10'000'000;

/// Every solution with |v_j| <= bound (nonnegative coordinates in [0, bound]),
/// sorted lexicographically. Throws SearchSpaceTooLarge when
/// (2 * bound + 1)^n_vars exceeds `cap`.
std::vector<IntVector> brute_force_solutions(
    const DiophantineSystem& sys, long bound,
    std::uint64_t cap = kDefaultEnumerationCap);

/// Whether v is a nonnegative integer combination of the basis elements.
/// Throws NotASolution if v does not solve the basis' system.
bool generates(const HilbertBasis& basis, std::span<const Integer> v);

/// Same decision for an arbitrary element list (no solution check).
bool generated_by(std::span<const IntVector> elements,
                  std::span<const Integer> v);

} // namespace torusplit
