#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "torusplit/integer.hpp"
#include "torusplit/lattice.hpp"

namespace torusplit {

/// Largest linear subspace contained in a cone, as a saturated lattice basis
/// of H intersected with Z^ambient_dim.
struct LinealitySpace {
  std::size_t ambient_dim = 0;
  std::vector<IntVector> basis;

  std::size_t rank() const noexcept { return basis.size(); }
};

/// Rational polyhedral cone given by generators. Generators are primitive,
/// nonzero, deduplicated and sorted lexicographically. An ambient dimension
/// of 0 denotes the trivial space (used for a trivial subtorus).
class Cone {
public:
  Cone() = default;

  std::size_t ambient_dim() const noexcept { return ambient_dim_; }
  const std::vector<IntVector>& generators() const noexcept { return generators_; }

  friend bool operator==(const Cone&, const Cone&) = default;
  friend Cone cone_from_generators(std::span<const IntVector>, std::size_t);

private:
  std::size_t ambient_dim_ = 0;
  std::vector<IntVector> generators_;
};

Cone cone_from_generators(std::span<const IntVector> vectors,
                          std::size_t ambient_dim);

/// Exact membership: v is a nonnegative rational combination of generators.
bool contains(const Cone& c, std::span<const Rational> v);
bool contains(const Cone& c, std::span<const Integer> v);

LinealitySpace lineality_space(const Cone& c);
bool is_pointed(const Cone& c);
bool is_full_space(const Cone& c);
/// Image of the cone under P : Q^ambient -> Q^P.rows().
Cone project(const Cone& c, const IntMatrix& p);
/// Dimension of the linear span.
std::size_t dim(const Cone& c);

} // namespace torusplit
