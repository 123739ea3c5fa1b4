#include "doctest.h"

#include <random>

#include "support/test_support.hpp"
#include "torusplit/error.hpp"
#include "torusplit/variety.hpp"

using namespace torusplit;
using namespace torusplit::testing;

namespace {

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an Error");
  return ErrorCode::InternalInconsistency;
}

} // namespace

TEST_CASE("weight_of") {
  const auto ex = curve_example();
  CHECK(weight_of(ex.equations()[0], ex) == make_int_vector({2, 2}));
  const auto rm = hyperbolic_threefold();
  CHECK(weight_of(rm.equations()[0], rm) == make_int_vector({3}));
  CHECK(weight_of(parse_polynomial("1", ex.variable_table()), ex) == make_int_vector({0, 0}));
  CHECK(code_of([&] { weight_of(parse_polynomial("x + y", ex.variable_table()), ex); }) ==
        ErrorCode::NotHomogeneous);
}

TEST_CASE("loading rejects bad presentations") {
  auto vars = make_variable_table({{"x", false}, {"y", false}});
  CHECK(code_of([&] {
          GradedPresentation(vars, 1, IntMatrix{{1, 2}}, {parse_polynomial("x + y", vars)}, {});
        }) == ErrorCode::NotHomogeneous);
  CHECK(code_of([&] { GradedPresentation(vars, 2, IntMatrix{{1, 1}, {1, 1}}, {}, {}); }) ==
        ErrorCode::NotFaithful);
  CHECK(code_of([&] { GradedPresentation(vars, 1, IntMatrix{{1, 1, 1}}, {}, {}); }) ==
        ErrorCode::DimensionMismatch);
  CHECK_NOTHROW(GradedPresentation(vars, 2, IntMatrix{{1, 1}, {1, 1}}, {}, {}, true));
}

TEST_CASE("weight_data") {
  const auto wd = weight_data(curve_example());
  CHECK(wd.monoid_generators.size() == 5);
  CHECK(wd.cone == cone_from_generators(IntMatrix{{1, 2, 1, -1, 4}, {1, 2, 0, 0, 2}}.columns(), 2));

  const auto id = toric_model(0, 3);
  CHECK(weight_data(id).cone == cone_from_generators(IntMatrix::identity(3).columns(), 3));

  const auto rm = weight_data(hyperbolic_threefold());
  CHECK(is_full_space(rm.cone));

  auto vars = make_variable_table({{"x", false}});
  Assertions none;
  const GradedPresentation p(vars, 1, IntMatrix{{1}}, {}, none);
  CHECK(code_of([&] { weight_data(p); }) == ErrorCode::AssumptionMissing);

  // Invertible variables contribute both signs.
  const auto torus = toric_model(1, 0);
  CHECK(is_full_space(weight_data(torus).cone));
}

TEST_CASE("invariant_generators") {
  const auto gens = invariant_generators(curve_example());
  REQUIRE(gens.size() == 1);
  CHECK(gens[0].exponents == std::vector<long>{0, 0, 1, 1, 0});
  CHECK(invariant_generators(toric_model(0, 4)).empty());

  const auto rm = hyperbolic_threefold();
  const auto hb = invariant_basis(rm);
  for (const auto& v : brute_force_solutions(hb.system, 6)) CHECK(generates(hb, v));
  CHECK(hb.elements.size() == 3);
}

TEST_CASE("sample_point") {
  const auto ex = curve_example();
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const auto p = sample_point(ex, seed);
    CHECK(evaluate(ex.equations()[0], p) == 0);
    // y = -(x^2 + t^2 u) / (z t + 1)
    CHECK(p[1] == -(p[0] * p[0] + p[3] * p[3] * p[4]) / (p[2] * p[3] + 1));
    CHECK(p == sample_point(ex, seed));
  }

  auto vars = make_variable_table({{"x", false}, {"t", false}});
  const GradedPresentation cusp(vars, 1, IntMatrix{{3, 1}}, {parse_polynomial("x - t^3", vars)},
                                all_asserted());
  const auto q = sample_point(cusp, 4);
  CHECK(q[0] == q[1] * q[1] * q[1]);

  CHECK(code_of([&] { sample_point(hyperbolic_threefold(), 1); }) == ErrorCode::NoLinearVariable);
}

TEST_CASE("sampling with several equations respects the solving order") {
  auto vars = make_variable_table({{"a", false}, {"b", false}, {"c", false}, {"d", false}});
  // b is linear in the first equation, which also mentions c; c is linear in
  // the second. Solving order must be second then first.
  const GradedPresentation p(vars, 0, IntMatrix(0, 4),
                             {parse_polynomial("a*b + c^2 + 1", vars),
                              parse_polynomial("c*d + a", vars)},
                             all_asserted());
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    const auto pt = sample_point(p, seed);
    for (const auto& eq : p.equations()) CHECK(evaluate(eq, pt) == 0);
  }
}

TEST_CASE("quotient_dimension") {
  const auto ex = quotient_dimension(curve_example(), 8, 0);
  CHECK(ex.ambient_dim == 1);
  REQUIRE(ex.estimated_dim.has_value());
  CHECK(*ex.estimated_dim == 1);

  const auto id = quotient_dimension(toric_model(0, 4), 8, 0);
  CHECK(id.ambient_dim == 0);
  CHECK(id.estimated_dim == std::optional<std::size_t>(0));

  const auto rm = quotient_dimension(hyperbolic_threefold(), 8, 0);
  CHECK(rm.ambient_dim == 3);
  CHECK_FALSE(rm.estimated_dim.has_value());
  CHECK(rm.unknown_reason.find("NoLinearVariable") != std::string::npos);

  // zt = 1 forces the only invariant to be constant on X: a point quotient.
  auto vars = make_variable_table({{"z", false}, {"t", false}});
  const GradedPresentation hyperbola(vars, 1, IntMatrix{{1, -1}},
                                     {parse_polynomial("z*t - 1", vars)}, all_asserted());
  const auto hq = quotient_dimension(hyperbola, 8, 3);
  CHECK(hq.ambient_dim == 1);
  CHECK(hq.estimated_dim == std::optional<std::size_t>(0));
}

TEST_CASE("equation-free presentations: estimate equals ambient") {
  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 30; ++trial) {
    const IntMatrix w = random_matrix(rng, 1 + trial % 2, 4, -2, 2);
    if (w.rank() != w.rows()) continue;
    const auto q = quotient_dimension(equation_free(w), 4, trial);
    REQUIRE(q.estimated_dim.has_value());
    CHECK(*q.estimated_dim == q.ambient_dim);
  }
}

TEST_CASE("invariants are constant along torus orbits") {
  const auto ex = curve_example();
  const auto gens = invariant_generators(ex);
  std::mt19937_64 rng(77);
  for (std::uint64_t seed = 0; seed < 3; ++seed) {
    const auto p = sample_point(ex, seed);
    for (int k = 0; k < 20; ++k) {
      RatVector lambda(2);
      for (auto& l : lambda) {
        l = random_rational(rng);
        if (l == 0) l = 2;
      }
      const auto q = act(ex, lambda, p);
      CHECK(evaluate(ex.equations()[0], q) == 0);
      for (const auto& m : gens) {
        const auto mono = Polynomial::term(ex.variable_table(), m, Rational(1));
        CHECK(evaluate(mono, q) == evaluate(mono, p));
      }
    }
  }
}

TEST_CASE("reduce_nonfaithful") {
  auto vars = make_variable_table({{"x", false}, {"y", false}});
  const GradedPresentation p(vars, 2, IntMatrix{{1, 1}, {1, 1}},
                             {parse_polynomial("x - y", vars)}, all_asserted(), true);
  const auto red = reduce_nonfaithful_with_map(p);
  CHECK(red.presentation.torus_rank() == 1);
  CHECK(red.presentation.weights() == IntMatrix{{1, 1}});
  CHECK(red.embedding * red.presentation.weights() == p.weights());
  for (const auto& eq : p.equations()) {
    CHECK(red.embedding * weight_of(eq, red.presentation) == weight_of(eq, p));
  }

  const GradedPresentation faithful(make_variable_table({{"x", false}, {"y", false}}), 1,
                                    IntMatrix{{2, 4}}, {}, {});
  CHECK(code_of([&] { reduce_nonfaithful(faithful); }) == ErrorCode::AlreadyFaithful);

  const GradedPresentation zero(vars, 2, IntMatrix(2, 2), {}, {}, true);
  CHECK(reduce_nonfaithful(zero).torus_rank() == 0);

  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 20; ++trial) {
    const IntMatrix base = random_matrix(rng, 1, 4, -3, 3);
    const IntMatrix w = IntMatrix{{1}, {2}, {-1}} * base;
    const GradedPresentation q(make_variable_table({{"a", false}, {"b", false}, {"c", false}, {"d", false}}),
                               3, w, {}, {}, true);
    const auto r = reduce_nonfaithful_with_map(q);
    CHECK(r.presentation.is_faithful());
    CHECK(r.embedding * r.presentation.weights() == w);
  }
}

TEST_CASE("complexity and smoothness evidence") {
  CHECK(complexity(curve_example()) == std::optional<long>(2));
  const auto ev = smoothness_probe(curve_example(), 5, 1);
  CHECK(ev.supported);
  CHECK(ev.points == 5);
  CHECK(ev.full_rank_points == 5);
  CHECK_FALSE(smoothness_probe(hyperbolic_threefold(), 5, 1).supported);
}
