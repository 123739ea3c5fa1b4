#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <vector>

#include "torusplit/cone.hpp"
#include "torusplit/integer.hpp"
#include "torusplit/monoid.hpp"
#include "torusplit/polynomial.hpp"

namespace torusplit {

/// Hypotheses the caller vouches for; none of them is verified.
struct Assertions {
  bool smooth = false;
  bool rational = false;
  bool no_variable_vanishes = false;
  bool complete_intersection = false;
};

/// X = Spec A with A = K[x_1..x_n, x_i^-1 for invertible i] / (equations),
/// graded by M = Z^k through the weight matrix (column i = weight of x_i).
class GradedPresentation {
public:
  /// Validates shapes, rejects zero and non-homogeneous equations
  /// (NotHomogeneous), and rejects rank(W) < k (NotFaithful) unless
  /// `allow_nonfaithful` is set.
  GradedPresentation(VariableTablePtr variables, std::size_t torus_rank,
                     IntMatrix weights, std::vector<Polynomial> equations,
                     Assertions assertions, bool allow_nonfaithful = false);

  const VariableTable& variables() const noexcept { return *variables_; }
  const VariableTablePtr& variable_table() const noexcept { return variables_; }
  std::size_t n_vars() const noexcept { return variables_->size(); }
  std::size_t torus_rank() const noexcept { return torus_rank_; }
  const IntMatrix& weights() const noexcept { return weights_; }
  const std::vector<Polynomial>& equations() const noexcept { return equations_; }
  const Assertions& assertions() const noexcept { return assertions_; }
  bool is_faithful() const { return weights_.rank() == torus_rank_; }

  /// Nonnegativity mask: true for non-invertible variables.
  std::vector<bool> sign_mask() const;
  std::size_t invertible_count() const;

private:
  VariableTablePtr variables_;
  std::size_t torus_rank_;
  IntMatrix weights_;
  std::vector<Polynomial> equations_;
  Assertions assertions_;
};

IntVector monomial_weight(const Monomial& m, const IntMatrix& weights);

/// The common weight u of all terms, i.e. p lies in A_u. Throws
/// NotHomogeneous naming two terms of different weight.
IntVector weight_of(const Polynomial& p, const GradedPresentation& pres);
IntVector weight_of(const Polynomial& p, const IntMatrix& weights);

struct WeightData {
  std::vector<IntVector> monoid_generators;
  Cone cone;
};

/// Weights of the variables (both signs for invertible ones) and the cone they
/// span. Requires assertions().no_variable_vanishes (AssumptionMissing).
WeightData weight_data(const GradedPresentation& pres);

/// Hilbert basis of {v : W v = 0, v_j >= 0 for non-invertible j}.
HilbertBasis invariant_basis(const GradedPresentation& pres);
std::vector<Monomial> invariant_generators(const GradedPresentation& pres);

/// Exact rational point of X with nonzero invertible coordinates. Each
/// equation is solved for a variable occurring linearly in it; the other
/// coordinates are drawn from `rng`. Throws NoLinearVariable when no
/// triangular solving order exists and DegenerateDenominator after 100
/// unlucky draws.
RatVector sample_point(const GradedPresentation& pres, std::mt19937_64& rng);
RatVector sample_point(const GradedPresentation& pres, std::uint64_t seed);

struct QuotientDimension {
  std::size_t ambient_dim = 0;
  std::optional<std::size_t> estimated_dim;
  std::string unknown_reason;
};

/// ambient_dim is exact (dimension of A^n // T). estimated_dim is the largest
/// rank, over `trials` sampled points of X, of the differential of the
/// invariant-monomial map restricted to the tangent directions of X; it is a
/// lower bound for dim X//T. Sampling failures leave it unset.
QuotientDimension quotient_dimension(const GradedPresentation& pres,
                                     std::size_t trials, std::uint64_t seed);

struct Reduction {
  GradedPresentation presentation;
  /// Old weights = embedding * new weights.
  IntMatrix embedding;
};

/// Replaces T by the torus acting faithfully: the new character lattice is
/// the lattice generated by the weights. Throws AlreadyFaithful.
Reduction reduce_nonfaithful_with_map(const GradedPresentation& pres);
GradedPresentation reduce_nonfaithful(const GradedPresentation& pres);

/// dim X - k, with dim X = n - #equations; only under the complete
/// intersection assertion.
std::optional<long> complexity(const GradedPresentation& pres);

/// Evidence only: counts sampled points where the equation Jacobian has full
/// rank. `supported` is false when sampling is impossible.
struct SmoothnessEvidence {
  bool supported = false;
  std::size_t points = 0;
  std::size_t full_rank_points = 0;
};

SmoothnessEvidence smoothness_probe(const GradedPresentation& pres,
                                    std::size_t trials, std::uint64_t seed);

/// lambda . x with x_i scaled by prod_r lambda_r^{W_ri}.
RatVector act(const GradedPresentation& pres, std::span<const Rational> lambda,
              std::span<const Rational> point);

} // namespace torusplit
