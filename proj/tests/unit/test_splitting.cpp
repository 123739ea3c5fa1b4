#include "doctest.h"

#include <random>

#include "support/test_support.hpp"
#include "torusplit/error.hpp"
#include "torusplit/splitting.hpp"

using namespace torusplit;
using namespace torusplit::testing;

TEST_CASE("compute_splitting on the quotient curve example") {
  const auto ex = curve_example();
  const auto s = compute_splitting(ex);
  REQUIRE(s.lineality.rank() == 1);
  CHECK(s.lineality.basis[0] == make_int_vector({1, 0}));
  CHECK(s.n1.basis() == IntMatrix{{0}, {1}});
  CHECK(s.n2.basis() == IntMatrix{{1}, {0}});
  CHECK(s.t1_weights == IntMatrix{{1, 2, 0, 0, 2}});
  CHECK(s.t2_weights == IntMatrix{{1, 2, 1, -1, 4}});
  CHECK(t1_is_fix_pointed(s, ex));

  const auto x = xh_data(s, ex);
  REQUIRE(x.ah_generators.size() == 2);
  CHECK(x.ah_exponents == std::vector<IntVector>{make_int_vector({0, 0, 0, 1, 0}),
                                                 make_int_vector({0, 0, 1, 0, 0})});
  CHECK(x.t2_weights_on_generators ==
        std::vector<IntVector>{make_int_vector({-1}), make_int_vector({1})});
  CHECK(t2_is_hyperbolic_on_xh(x, s));
  CHECK(verify_factorization(ex, s, x));
}

TEST_CASE("compute_splitting on the standard torus action") {
  const auto id = toric_model(0, 3);
  const auto s = compute_splitting(id);
  CHECK(s.lineality.rank() == 0);
  CHECK(s.n1.same_lattice(Sublattice::full(3)));
  CHECK(s.n2.rank() == 0);
  CHECK(t1_is_fix_pointed(s, id));
  const auto x = xh_data(s, id);
  CHECK(x.ah_generators.empty());
  CHECK(t2_is_hyperbolic_on_xh(x, s));
  CHECK(verify_factorization(id, s, x));
}

TEST_CASE("compute_splitting on the hyperbolic threefold") {
  const auto rm = hyperbolic_threefold();
  const auto s = compute_splitting(rm);
  CHECK(s.lineality.rank() == 1);
  CHECK(s.n1.rank() == 0);
  CHECK(s.n2.same_lattice(Sublattice::full(1)));
  CHECK(t1_is_fix_pointed(s, rm));
  const auto x = xh_data(s, rm);
  // T1 trivial: A_H = A, generated by all variables.
  CHECK(x.ah_exponents.size() == 4);
  CHECK(t2_is_hyperbolic_on_xh(x, s));
  CHECK(verify_factorization(rm, s, x));
}

TEST_CASE("certify") {
  SUBCASE("quotient curve example") {
    const auto v = certify(curve_example());
    CHECK(v.branch == Branch::QuotientCurve);
    CHECK(v.statement.find("uniformly rational") != std::string::npos);
    CHECK(v.statement.find("smooth") != std::string::npos);
    CHECK(v.evidence.factorization);
  }
  SUBCASE("torus times affine space") {
    const auto v = certify(toric_model(2, 3));
    CHECK(v.branch == Branch::QuotientPoint);
    CHECK(v.l_value == std::optional<std::size_t>(2));
  }
  SUBCASE("hyperbolic threefold") {
    const auto v = certify(hyperbolic_threefold());
    CHECK(v.branch == Branch::Inapplicable);
    CHECK(v.statement.find(">= 2") != std::string::npos);
  }
  SUBCASE("hypotheses missing") {
    auto vars = make_variable_table({{"x", false}, {"y", false}});
    Assertions partial;
    partial.no_variable_vanishes = true;
    partial.smooth = true;
    const GradedPresentation p(vars, 1, IntMatrix{{1, -1}}, {}, partial);
    const auto v = certify(p);
    CHECK(v.branch == Branch::Inapplicable);
    CHECK(v.statement.find("hypotheses not asserted (rational)") != std::string::npos);
  }
  SUBCASE("hyperbolic plane has a curve quotient") {
    const auto v = certify(equation_free(IntMatrix{{1, -1}}));
    CHECK(v.branch == Branch::QuotientCurve);
  }
  SUBCASE("equations present leave l unknown") {
    auto vars = make_variable_table({{"x", false}, {"y", false}});
    const GradedPresentation p(vars, 1, IntMatrix{{1, 1}}, {parse_polynomial("x - y", vars)},
                               all_asserted());
    const auto v = certify(p);
    CHECK(v.branch == Branch::QuotientPoint);
    CHECK_FALSE(v.l_value.has_value());
  }
  SUBCASE("without the vanishing assertion the splitting is skipped") {
    auto vars = make_variable_table({{"x", false}, {"y", false}});
    Assertions as = all_asserted();
    as.no_variable_vanishes = false;
    const GradedPresentation p(vars, 1, IntMatrix{{1, -1}}, {}, as);
    const auto a = analyze(p);
    CHECK_FALSE(a.splitting.has_value());
    CHECK(a.verdict.branch == Branch::QuotientCurve);
  }
}

TEST_CASE("certify is monotone in assertions") {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 30; ++trial) {
    const IntMatrix w = random_matrix(rng, 1, 3, -2, 2);
    if (w.rank() != 1) continue;
    auto vars = make_variable_table({{"a", false}, {"b", false}, {"c", false}});
    for (int mask = 0; mask < 3; ++mask) {
      Assertions as = all_asserted();
      as.smooth = mask & 1;
      as.rational = mask & 2;
      const GradedPresentation p(vars, 1, w, {}, as);
      CHECK(certify(p).branch == Branch::Inapplicable);
    }
  }
}

TEST_CASE("splitting with invertible variables") {
  // s invertible of weight (1,0): lineality contains (1,0).
  const auto p = equation_free(IntMatrix{{1, 0, 1}, {0, 1, 1}}, {true, false, false});
  const auto s = compute_splitting(p);
  CHECK(s.lineality.rank() == 1);
  CHECK(t1_is_fix_pointed(s, p));
  const auto x = xh_data(s, p);
  CHECK(t2_is_hyperbolic_on_xh(x, s));
  CHECK(verify_factorization(p, s, x));
  CHECK(abs(s.n1.basis().hstack(s.n2.basis()).determinant()) == 1);
}
