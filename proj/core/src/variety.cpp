#include "torusplit/variety.hpp"

#include <algorithm>
#include <utility>

#include "torusplit/error.hpp"
#include "torusplit/lattice.hpp"

namespace torusplit {

namespace {

constexpr int kMaxSampleRetries = 100;

Rational random_nonzero_rational(std::mt19937_64& rng) {
  std::uniform_int_distribution<long> num(-9, 8);
  std::uniform_int_distribution<long> den(1, 4);
  long n = num(rng);
  if (n >= 0) ++n;
  Rational q(n, den(rng));
  q.canonicalize();
  return q;
}

// Rank over Q of rational rows.
std::size_t rational_rank(const std::vector<RatVector>& rows, std::size_t cols) {
  std::vector<IntVector> scaled;
  scaled.reserve(rows.size());
  for (const auto& r : rows) scaled.push_back(clear_denominators(r));
  if (scaled.empty()) return 0;
  return rank_of(scaled, cols);
}

std::vector<RatVector> jacobian(const std::vector<Polynomial>& polys,
                                std::span<const Rational> point) {
  std::vector<RatVector> rows;
  rows.reserve(polys.size());
  for (const auto& p : polys) {
    RatVector row(point.size());
    for (std::size_t j = 0; j < point.size(); ++j) {
      row[j] = evaluate(partial_derivative(p, j), point);
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

// Variables occurring in every term with exponent 0 or 1 and at least once
// with exponent 1.
std::vector<std::size_t> linear_variables(const Polynomial& p) {
  std::vector<std::size_t> out;
  for (std::size_t j = 0; j < p.n_vars(); ++j) {
    bool seen = false, ok = true;
    for (const auto& [m, c] : p.terms()) {
      const long e = m.exponents[j];
      if (e == 1) seen = true;
      else if (e != 0) ok = false;
    }
    if (seen && ok) out.push_back(j);
  }
  return out;
}

bool occurs_in(const Polynomial& p, std::size_t var) {
  for (const auto& [m, c] : p.terms())
    if (m.exponents[var] != 0) return true;
  return false;
}

struct SolveStep {
  std::size_t equation;
  std::size_t variable;
};

// Orders equations so that each is solved for a fresh linear variable that no
// earlier equation mentions.
bool find_plan(const std::vector<Polynomial>& eqs, std::vector<SolveStep>& plan,
               std::vector<bool>& eq_used, std::vector<bool>& var_used) {
  if (plan.size() == eqs.size()) return true;
  for (std::size_t e = 0; e < eqs.size(); ++e) {
    if (eq_used[e]) continue;
    for (std::size_t v : linear_variables(eqs[e])) {
      if (var_used[v]) continue;
      bool clash = false;
      for (const auto& step : plan) {
        if (occurs_in(eqs[step.equation], v)) {
          clash = true;
          break;
        }
      }
      if (clash) continue;
      plan.push_back({e, v});
      eq_used[e] = true;
      var_used[v] = true;
      if (find_plan(eqs, plan, eq_used, var_used)) return true;
      plan.pop_back();
      eq_used[e] = false;
      var_used[v] = false;
    }
  }
  return false;
}

} // namespace

GradedPresentation::GradedPresentation(VariableTablePtr variables,
                                       std::size_t torus_rank, IntMatrix weights,
                                       std::vector<Polynomial> equations,
                                       Assertions assertions,
                                       bool allow_nonfaithful)
    : variables_(std::move(variables)), torus_rank_(torus_rank),
      weights_(std::move(weights)), equations_(std::move(equations)),
      assertions_(assertions) {
  if (!variables_) throw Error(ErrorCode::InvalidArgument, "null variable table");
  if (torus_rank_ == 0 && weights_.rows() == 0) weights_ = IntMatrix(0, n_vars());
  if (weights_.rows() != torus_rank_ || weights_.cols() != n_vars()) {
    throw Error(ErrorCode::DimensionMismatch,
                "weight matrix is " + std::to_string(weights_.rows()) + "x" +
                    std::to_string(weights_.cols()) + ", expected " +
                    std::to_string(torus_rank_) + "x" + std::to_string(n_vars()));
  }
  for (std::size_t i = 0; i < equations_.size(); ++i) {
    const auto& eq = equations_[i];
    if (!(eq.variables() == *variables_)) {
      throw Error(ErrorCode::InvalidArgument,
                  "equation " + std::to_string(i) + " uses a different variable table");
    }
    if (eq.is_zero()) {
      throw Error(ErrorCode::InvalidArgument, "equation " + std::to_string(i) + " is zero");
    }
    weight_of(eq, weights_);
  }
  if (!allow_nonfaithful && weights_.rank() != torus_rank_) {
    throw Error(ErrorCode::NotFaithful,
                "weight matrix has rank " + std::to_string(weights_.rank()) +
                    " < torus rank " + std::to_string(torus_rank_));
  }
}

std::vector<bool> GradedPresentation::sign_mask() const {
  std::vector<bool> mask(n_vars());
  for (std::size_t i = 0; i < n_vars(); ++i) mask[i] = !(*variables_)[i].invertible;
  return mask;
}

std::size_t GradedPresentation::invertible_count() const {
  std::size_t n = 0;
  for (const auto& v : variables_->variables()) n += v.invertible ? 1 : 0;
  return n;
}

IntVector monomial_weight(const Monomial& m, const IntMatrix& weights) {
  IntVector e;
  e.reserve(m.exponents.size());
  for (long x : m.exponents) e.emplace_back(x);
  return weights * e;
}

IntVector weight_of(const Polynomial& p, const IntMatrix& weights) {
  if (p.is_zero()) {
    throw Error(ErrorCode::InvalidArgument, "the zero polynomial has no weight");
  }
  const auto& first = *p.terms().begin();
  const IntVector u = monomial_weight(first.first, weights);
  for (const auto& [m, c] : p.terms()) {
    IntVector w = monomial_weight(m, weights);
    if (w != u) {
      throw Error(ErrorCode::NotHomogeneous,
                  "not homogeneous: term " + to_string(first.first, p.variables()) +
                      " has weight " + to_string(u) + " but term " +
                      to_string(m, p.variables()) + " has weight " + to_string(w));
    }
  }
  return u;
}

IntVector weight_of(const Polynomial& p, const GradedPresentation& pres) {
  return weight_of(p, pres.weights());
}

WeightData weight_data(const GradedPresentation& pres) {
  if (!pres.assertions().no_variable_vanishes) {
    throw Error(ErrorCode::AssumptionMissing,
                "weight cone from variable weights needs the no_variable_vanishes assertion");
  }
  WeightData data;
  for (std::size_t i = 0; i < pres.n_vars(); ++i) {
    IntVector w = pres.weights().column(i);
    if (pres.variables()[i].invertible) data.monoid_generators.push_back(negated(w));
    data.monoid_generators.push_back(std::move(w));
  }
  data.cone = cone_from_generators(data.monoid_generators, pres.torus_rank());
  return data;
}

HilbertBasis invariant_basis(const GradedPresentation& pres) {
  return hilbert_basis(DiophantineSystem(pres.weights(), pres.sign_mask()));
}

std::vector<Monomial> invariant_generators(const GradedPresentation& pres) {
  std::vector<Monomial> out;
  for (const auto& v : invariant_basis(pres).elements) {
    Monomial m;
    for (const auto& x : v) m.exponents.push_back(x.get_si());
    out.push_back(std::move(m));
  }
  return out;
}

RatVector sample_point(const GradedPresentation& pres, std::mt19937_64& rng) {
  const auto& eqs = pres.equations();
  const std::size_t n = pres.n_vars();
  std::vector<SolveStep> plan;
  std::vector<bool> eq_used(eqs.size(), false), var_used(n, false);
  if (!find_plan(eqs, plan, eq_used, var_used)) {
    throw Error(ErrorCode::NoLinearVariable,
                "no triangular order of linearly occurring variables; sampling unsupported");
  }
  struct Split {
    Polynomial coefficient;
    Polynomial rest;
  };
  std::vector<Split> splits;
  for (const auto& step : plan) {
    const Polynomial& eq = eqs[step.equation];
    Polynomial coeff = partial_derivative(eq, step.variable);
    Polynomial rest(eq.variable_table());
    for (const auto& [m, c] : eq.terms()) {
      if (m.exponents[step.variable] == 0) rest += Polynomial::term(eq.variable_table(), m, c);
    }
    splits.push_back({std::move(coeff), std::move(rest)});
  }

  for (int attempt = 0; attempt < kMaxSampleRetries; ++attempt) {
    RatVector point(n);
    for (std::size_t j = 0; j < n; ++j) point[j] = random_nonzero_rational(rng);
    bool ok = true;
    for (std::size_t s = 0; s < plan.size() && ok; ++s) {
      const Rational c = evaluate(splits[s].coefficient, point);
      if (c == 0) {
        ok = false;
        break;
      }
      const std::size_t v = plan[s].variable;
      point[v] = -evaluate(splits[s].rest, point) / c;
      if (pres.variables()[v].invertible && point[v] == 0) ok = false;
    }
    if (ok) return point;
  }
  throw Error(ErrorCode::DegenerateDenominator,
              "sampling hit a vanishing denominator in " +
                  std::to_string(kMaxSampleRetries) + " attempts");
}

RatVector sample_point(const GradedPresentation& pres, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  return sample_point(pres, rng);
}

QuotientDimension quotient_dimension(const GradedPresentation& pres,
                                     std::size_t trials, std::uint64_t seed) {
  QuotientDimension out;
  const HilbertBasis basis = invariant_basis(pres);
  out.ambient_dim = dim(cone_from_generators(basis.elements, pres.n_vars()));
  if (basis.elements.empty()) {
    out.estimated_dim = 0;
    return out;
  }
  std::vector<Polynomial> invariants;
  for (const auto& v : basis.elements) {
    Monomial m;
    for (const auto& x : v) m.exponents.push_back(x.get_si());
    invariants.push_back(Polynomial::term(pres.variable_table(), std::move(m), Rational(1)));
  }
  std::mt19937_64 rng(seed);
  std::size_t best = 0;
  try {
    for (std::size_t t = 0; t < std::max<std::size_t>(trials, 1); ++t) {
      const RatVector p = sample_point(pres, rng);
      const auto eq_rows = jacobian(pres.equations(), p);
      auto all_rows = eq_rows;
      for (auto& row : jacobian(invariants, p)) all_rows.push_back(std::move(row));
      const std::size_t r = rational_rank(all_rows, pres.n_vars()) -
                            rational_rank(eq_rows, pres.n_vars());
      best = std::max(best, r);
    }
  } catch (const Error& e) {
    if (e.code() != ErrorCode::NoLinearVariable &&
        e.code() != ErrorCode::DegenerateDenominator) {
      throw;
    }
    out.unknown_reason = std::string(to_string(e.code())) + ": " + e.what();
    return out;
  }
  out.estimated_dim = best;
  return out;
}

Reduction reduce_nonfaithful_with_map(const GradedPresentation& pres) {
  if (pres.is_faithful()) {
    throw Error(ErrorCode::AlreadyFaithful, "the torus already acts faithfully");
  }
  const std::size_t k = pres.torus_rank(), n = pres.n_vars();
  IntMatrix new_weights(0, n);
  IntMatrix embedding(k, 0);
  if (k > 0 && n > 0) {
    const SnfDecomposition s = snf(pres.weights());
    const std::size_t r = s.rank();
    new_weights = s.V_inv.row_block(0, r);
    embedding = s.U_inv.column_block(0, r);
    for (std::size_t j = 0; j < r; ++j)
      for (std::size_t i = 0; i < k; ++i) embedding(i, j) *= s.D(j, j);
  }
  GradedPresentation reduced(pres.variable_table(), new_weights.rows(), new_weights,
                             pres.equations(), pres.assertions());
  return {std::move(reduced), std::move(embedding)};
}

GradedPresentation reduce_nonfaithful(const GradedPresentation& pres) {
  return reduce_nonfaithful_with_map(pres).presentation;
}

std::optional<long> complexity(const GradedPresentation& pres) {
  if (!pres.assertions().complete_intersection) return std::nullopt;
  return static_cast<long>(pres.n_vars()) - static_cast<long>(pres.equations().size()) -
         static_cast<long>(pres.torus_rank());
}

SmoothnessEvidence smoothness_probe(const GradedPresentation& pres,
                                    std::size_t trials, std::uint64_t seed) {
  SmoothnessEvidence ev;
  std::mt19937_64 rng(seed);
  try {
    for (std::size_t t = 0; t < trials; ++t) {
      const RatVector p = sample_point(pres, rng);
      ++ev.points;
      if (rational_rank(jacobian(pres.equations(), p), pres.n_vars()) ==
          pres.equations().size()) {
        ++ev.full_rank_points;
      }
    }
  } catch (const Error& e) {
    if (e.code() != ErrorCode::NoLinearVariable &&
        e.code() != ErrorCode::DegenerateDenominator) {
      throw;
    }
    return SmoothnessEvidence{};
  }
  ev.supported = true;
  return ev;
}

RatVector act(const GradedPresentation& pres, std::span<const Rational> lambda,
              std::span<const Rational> point) {
  if (lambda.size() != pres.torus_rank() || point.size() != pres.n_vars()) {
    throw Error(ErrorCode::DimensionMismatch, "torus element or point has wrong length");
  }
  RatVector out(point.begin(), point.end());
  for (std::size_t i = 0; i < pres.n_vars(); ++i) {
    for (std::size_t r = 0; r < pres.torus_rank(); ++r) {
      const Integer& w = pres.weights()(r, i);
      if (w == 0) continue;
      if (lambda[r] == 0) throw Error(ErrorCode::InvalidArgument, "torus element must be nonzero");
      Rational f = 1;
      const unsigned long e = Integer(abs(w)).get_ui();
      for (unsigned long k = 0; k < e; ++k) f *= lambda[r];
      out[i] *= w < 0 ? Rational(1 / f) : f;
    }
  }
  return out;
}

} // namespace torusplit
