#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "torusplit/cone.hpp"
#include "torusplit/lattice.hpp"
#include "torusplit/monoid.hpp"
#include "torusplit/variety.hpp"

namespace torusplit {

/// T = T1 x T2 with N = N1 (+) N2. T1 acts with pointed weight cone; the
/// characters of T2 restricted to H = lineality of the weight cone fill M2.
struct TorusSplitting {
  LinealitySpace lineality;
  Sublattice n1;
  Sublattice n2;
  IntMatrix proj_m1;     ///< rank(N1) x k: u -> restriction of u to N1
  IntMatrix proj_m2;     ///< rank(N2) x k
  IntMatrix t1_weights;  ///< proj_m1 * W
  IntMatrix t2_weights;  ///< proj_m2 * W
};

/// Generators of A_H, the sum of the graded pieces with weight in H, and their
/// T2-weights. X_H = Spec A_H.
struct XHData {
  std::vector<Monomial> ah_generators;
  std::vector<IntVector> ah_exponents;
  std::vector<IntVector> t2_weights_on_generators;
};

TorusSplitting compute_splitting(const GradedPresentation& pres);

/// Verifications of properties guaranteed by construction; both throw
/// InternalInconsistency instead of returning false.
bool t1_is_fix_pointed(const TorusSplitting& s, const GradedPresentation& pres);
bool t2_is_hyperbolic_on_xh(const XHData& x, const TorusSplitting& s);

XHData xh_data(const TorusSplitting& s, const GradedPresentation& pres);

/// The T2-invariant monomials of A_H generate the same monoid as the
/// T-invariant monomials of A (X -> X_H -> X_H//T2 = X//T on invariant
/// monoids). Throws InternalInconsistency on mismatch.
bool verify_factorization(const GradedPresentation& pres, const TorusSplitting& s,
                          const XHData& x);

enum class Branch { QuotientPoint, QuotientCurve, Inapplicable };

std::string_view to_string(Branch b);

struct Evidence {
  QuotientDimension quotient;
  std::optional<std::size_t> decided_dim;
  std::string dim_source;  ///< "ambient", "sampled", "complexity" or empty
  bool hypotheses_asserted = false;
  bool splitting_available = false;
  bool fix_pointed = false;
  bool hyperbolic = false;
  bool factorization = false;
  std::size_t lineality_rank = 0;
  std::size_t t1_rank = 0;
  std::size_t t2_rank = 0;
  std::optional<long> complexity;
  std::vector<std::string> asserted;
};

struct Verdict {
  Branch branch = Branch::Inapplicable;
  std::string statement;
  std::optional<std::size_t> l_value;
  Evidence evidence;
};

struct CertifyOptions {
  std::size_t trials = 8;
  std::uint64_t seed = 0;
};

/// Everything computed on the way to a verdict. The splitting parts are empty
/// when the weight cone is unavailable (no_variable_vanishes not asserted).
struct Analysis {
  std::vector<IntVector> invariant_exponents;
  std::optional<WeightData> weights;
  std::optional<TorusSplitting> splitting;
  std::optional<XHData> xh;
  Verdict verdict;
};

Analysis analyze(const GradedPresentation& pres, const CertifyOptions& options = {});
Verdict certify(const GradedPresentation& pres, const CertifyOptions& options = {});

} // namespace torusplit
