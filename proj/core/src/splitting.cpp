#include "torusplit/splitting.hpp"

#include <utility>

#include "torusplit/error.hpp"

namespace torusplit {

namespace {

std::vector<IntVector> signed_columns(const IntMatrix& weights,
                                      const GradedPresentation& pres) {
  std::vector<IntVector> out;
  for (std::size_t i = 0; i < weights.cols(); ++i) {
    IntVector w = weights.column(i);
    if (pres.variables()[i].invertible) out.push_back(negated(w));
    out.push_back(std::move(w));
  }
  return out;
}

Monomial to_monomial(const IntVector& v) {
  Monomial m;
  m.exponents.reserve(v.size());
  for (const auto& x : v) m.exponents.push_back(x.get_si());
  return m;
}

std::string join(const std::vector<std::string>& items) {
  std::string s;
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (i) s += ", ";
    s += items[i];
  }
  return s;
}

} // namespace

TorusSplitting compute_splitting(const GradedPresentation& pres) {
  const std::size_t k = pres.torus_rank();
  const WeightData wd = weight_data(pres);
  TorusSplitting s{lineality_space(wd.cone), Sublattice::zero(k), Sublattice::zero(k),
                   IntMatrix(), IntMatrix(), IntMatrix(), IntMatrix()};
  s.n1 = orthogonal_sublattice(std::span<const IntVector>(s.lineality.basis), k);
  try {
    s.n2 = complement(s.n1);
  } catch (const Error& e) {
    if (e.code() == ErrorCode::NotSaturated) {
      throw Error(ErrorCode::InternalInconsistency,
                  std::string("orthogonal sublattice not saturated: ") + e.what());
    }
    throw;
  }
  s.proj_m1 = dual_projection(s.n1);
  s.proj_m2 = dual_projection(s.n2);
  s.t1_weights = s.proj_m1 * pres.weights();
  s.t2_weights = s.proj_m2 * pres.weights();
  return s;
}

bool t1_is_fix_pointed(const TorusSplitting& s, const GradedPresentation& pres) {
  const Cone c = cone_from_generators(signed_columns(s.t1_weights, pres), s.n1.rank());
  if (!is_pointed(c)) {
    throw Error(ErrorCode::InternalInconsistency, "T1 weight cone is not pointed");
  }
  return true;
}

XHData xh_data(const TorusSplitting& s, const GradedPresentation& pres) {
  const HilbertBasis hb =
      hilbert_basis(DiophantineSystem(s.t1_weights, pres.sign_mask()));
  XHData x;
  for (const auto& v : hb.elements) {
    x.ah_generators.push_back(to_monomial(v));
    x.t2_weights_on_generators.push_back(s.t2_weights * v);
    x.ah_exponents.push_back(v);
  }
  return x;
}

bool t2_is_hyperbolic_on_xh(const XHData& x, const TorusSplitting& s) {
  const Cone c = cone_from_generators(x.t2_weights_on_generators, s.n2.rank());
  if (!is_full_space(c)) {
    throw Error(ErrorCode::InternalInconsistency,
                "T2 weights of the A_H generators do not span M2 as a cone");
  }
  return true;
}

bool verify_factorization(const GradedPresentation& pres, const TorusSplitting& s,
                          const XHData& x) {
  const std::size_t g = x.ah_exponents.size();
  // T2-invariant combinations of the A_H generators.
  IntMatrix t2(s.n2.rank(), g);
  for (std::size_t j = 0; j < g; ++j)
    for (std::size_t r = 0; r < s.n2.rank(); ++r) t2(r, j) = x.t2_weights_on_generators[j][r];
  const HilbertBasis combos = hilbert_basis(DiophantineSystem::all_nonnegative(t2));

  std::vector<IntVector> composed;
  for (const auto& c : combos.elements) {
    IntVector v(pres.n_vars(), Integer(0));
    for (std::size_t j = 0; j < g; ++j) {
      if (c[j] == 0) continue;
      for (std::size_t i = 0; i < v.size(); ++i) v[i] += c[j] * x.ah_exponents[j][i];
    }
    if (!is_zero(v)) composed.push_back(std::move(v));
  }

  const HilbertBasis direct = invariant_basis(pres);
  const HilbertBasis via_xh{direct.system, composed};
  for (const auto& v : composed) {
    if (!direct.system.is_solution(v) || !generates(direct, v)) {
      throw Error(ErrorCode::InternalInconsistency,
                  "composed invariant " + to_string(v) + " not generated by A_0 generators");
    }
  }
  for (const auto& v : direct.elements) {
    if (!generates(via_xh, v)) {
      throw Error(ErrorCode::InternalInconsistency,
                  "A_0 generator " + to_string(v) + " not reached through X_H");
    }
  }
  return true;
}

std::string_view to_string(Branch b) {
  switch (b) {
  case Branch::QuotientPoint: return "QuotientPoint";
  case Branch::QuotientCurve: return "QuotientCurve";
  case Branch::Inapplicable: return "Inapplicable";
  }
  return "Inapplicable";
}

Analysis analyze(const GradedPresentation& pres, const CertifyOptions& options) {
  Analysis a;
  a.invariant_exponents = invariant_basis(pres).elements;

  Evidence& ev = a.verdict.evidence;
  const Assertions& as = pres.assertions();
  if (as.smooth) ev.asserted.push_back("smooth");
  if (as.rational) ev.asserted.push_back("rational");
  if (as.no_variable_vanishes) ev.asserted.push_back("no_variable_vanishes");
  if (as.complete_intersection) ev.asserted.push_back("complete_intersection");
  ev.hypotheses_asserted = as.smooth && as.rational;
  ev.complexity = complexity(pres);

  if (as.no_variable_vanishes) {
    a.weights = weight_data(pres);
    a.splitting = compute_splitting(pres);
    a.xh = xh_data(*a.splitting, pres);
    ev.splitting_available = true;
    ev.fix_pointed = t1_is_fix_pointed(*a.splitting, pres);
    ev.hyperbolic = t2_is_hyperbolic_on_xh(*a.xh, *a.splitting);
    ev.factorization = verify_factorization(pres, *a.splitting, *a.xh);
    ev.lineality_rank = a.splitting->lineality.rank();
    ev.t1_rank = a.splitting->n1.rank();
    ev.t2_rank = a.splitting->n2.rank();
  }

  ev.quotient = quotient_dimension(pres, options.trials, options.seed);
  if (ev.quotient.ambient_dim == 0) {
    ev.decided_dim = 0;
    ev.dim_source = "ambient";
  } else if (ev.quotient.estimated_dim) {
    ev.decided_dim = *ev.quotient.estimated_dim;
    ev.dim_source = "sampled";
  } else if (a.weights && is_full_space(a.weights->cone) && ev.complexity && *ev.complexity >= 0) {
    // Hyperbolic action: generic orbits are closed, so dim X//T = dim X - dim T.
    ev.decided_dim = static_cast<std::size_t>(*ev.complexity);
    ev.dim_source = "complexity";
  }

  const std::string asserted =
      " [user-asserted: " + (ev.asserted.empty() ? std::string("none") : join(ev.asserted)) + "]";
  Verdict& v = a.verdict;
  if (!ev.hypotheses_asserted) {
    std::vector<std::string> missing;
    if (!as.smooth) missing.push_back("smooth");
    if (!as.rational) missing.push_back("rational");
    v.branch = Branch::Inapplicable;
    v.statement = "Theorem inapplicable: hypotheses not asserted (" + join(missing) + ")" + asserted;
    return a;
  }
  if (!ev.decided_dim) {
    v.branch = Branch::Inapplicable;
    v.statement = "Theorem inapplicable: dim(X//T) undetermined and possibly >= 2 (ambient quotient "
                  "dimension " + std::to_string(ev.quotient.ambient_dim) + ", sampled estimate "
                  "unknown: " + ev.quotient.unknown_reason + ")" + asserted;
    return a;
  }
  const std::size_t d = *ev.decided_dim;
  if (d == 0) {
    v.branch = Branch::QuotientPoint;
    if (pres.equations().empty()) v.l_value = pres.invertible_count();
    const std::string l = v.l_value ? std::to_string(*v.l_value) : std::string("l");
    const std::string rest = v.l_value ? std::to_string(pres.n_vars() - *v.l_value)
                                       : std::string("n-l");
    v.statement = "X//T is a point: X is equivariantly isomorphic to (K*)^" + l + " x A^" + rest +
                  (v.l_value ? "" : " for some l (not computed when equations are present)") +
                  " (vector bundle over the toric X_H, trivial by Quillen-Suslin-Swan); "
                  "hence X is uniformly rational" + asserted;
  } else if (d == 1) {
    v.branch = Branch::QuotientCurve;
    v.statement = "X//T is a curve: X is uniformly rational (vector bundle over X_H, which carries "
                  "a complexity-one hyperbolic T2-action)" + asserted;
  } else {
    v.branch = Branch::Inapplicable;
    v.statement = "Theorem inapplicable: dim(X//T) = " + std::to_string(d) + " >= 2" +
                  (ev.dim_source == "complexity" ? " (hyperbolic action, equals complexity)" : "") +
                  asserted;
  }
  return a;
}

Verdict certify(const GradedPresentation& pres, const CertifyOptions& options) {
  return analyze(pres, options).verdict;
}

} // namespace torusplit
