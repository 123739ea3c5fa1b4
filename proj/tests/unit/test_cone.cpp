#include "doctest.h"

#include <random>

#include "support/test_support.hpp"
#include "torusplit/cone.hpp"
#include "torusplit/error.hpp"

using namespace torusplit;
using torusplit::testing::caratheodory_contains;
using torusplit::testing::random_rational;

namespace {

Cone make_cone(std::initializer_list<std::initializer_list<long>> gens, std::size_t d) {
  std::vector<IntVector> v;
  for (const auto& g : gens) v.push_back(make_int_vector(g));
  return cone_from_generators(v, d);
}

Cone example_cone() {
  return make_cone({{1, 1}, {2, 2}, {1, 0}, {-1, 0}, {4, 2}}, 2);
}

bool contains_ints(const Cone& c, std::initializer_list<long> v) {
  return contains(c, std::span<const Integer>(make_int_vector(v)));
}

} // namespace

TEST_CASE("cone_from_generators normalizes") {
  CHECK(make_cone({{2, 0}}, 2).generators() == std::vector<IntVector>{make_int_vector({1, 0})});
  const std::vector<IntVector> expected{make_int_vector({-1, 0}), make_int_vector({1, 0}),
                                        make_int_vector({1, 1}), make_int_vector({2, 1})};
  CHECK(example_cone().generators() == expected);
  CHECK(cone_from_generators({}, 2).generators().empty());
  CHECK(make_cone({{0, 0}}, 2).generators().empty());
  CHECK_THROWS_AS(make_cone({{1, 2, 3}}, 2), Error);
}

TEST_CASE("contains") {
  const Cone c = example_cone();
  CHECK(contains_ints(c, {0, 1}));
  CHECK_FALSE(contains_ints(c, {0, -1}));
  CHECK(contains_ints(c, {0, 0}));
  CHECK(contains_ints(make_cone({}, 3), {0, 0, 0}));
  CHECK_FALSE(contains_ints(make_cone({}, 3), {0, 1, 0}));
  const RatVector half{Rational(1, 2), Rational(1, 3)};
  CHECK(contains(c, std::span<const Rational>(half)));
  CHECK_THROWS_AS(contains_ints(c, {1}), Error);
}

TEST_CASE("lineality_space") {
  const auto h = lineality_space(example_cone());
  REQUIRE(h.rank() == 1);
  CHECK(h.basis[0] == make_int_vector({1, 0}));

  CHECK(lineality_space(make_cone({{1, 0}, {0, 1}}, 2)).rank() == 0);
  CHECK(lineality_space(make_cone({{3}, {-3}, {3}, {1}}, 1)).rank() == 1);
}

TEST_CASE("pointed and full-space predicates") {
  const Cone orthant = make_cone({{1, 0}, {0, 1}}, 2);
  const Cone full = make_cone({{3}, {-3}, {3}, {1}}, 1);
  CHECK(is_pointed(orthant));
  CHECK_FALSE(is_pointed(example_cone()));
  CHECK(is_pointed(make_cone({}, 2)));
  CHECK(is_full_space(full));
  CHECK_FALSE(is_full_space(example_cone()));
  CHECK_FALSE(is_full_space(make_cone({}, 1)));
  CHECK(is_full_space(make_cone({}, 0)));
}

TEST_CASE("project") {
  const Cone c = example_cone();
  const Cone by_n2 = project(c, IntMatrix{{1, 0}});
  CHECK(by_n2 == make_cone({{1}, {-1}}, 1));
  CHECK(is_full_space(by_n2));
  const Cone by_n1 = project(c, IntMatrix{{0, 1}});
  CHECK(by_n1 == make_cone({{1}}, 1));
  CHECK(is_pointed(by_n1));
  CHECK(project(c, IntMatrix(3, 2)).generators().empty());
  CHECK_THROWS_AS(project(c, IntMatrix(1, 3)), Error);
}

TEST_CASE("dim") {
  CHECK(dim(example_cone()) == 2);
  CHECK(dim(make_cone({}, 2)) == 0);
  CHECK(dim(make_cone({{1, 1}}, 2)) == 1);
}

TEST_CASE("membership agrees with the Caratheodory oracle") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<long> entry(-3, 3);
  std::uniform_int_distribution<std::size_t> ng(0, 6), dd(1, 3);
  for (int trial = 0; trial < 250; ++trial) {
    const std::size_t d = dd(rng);
    std::vector<IntVector> gens(ng(rng), IntVector(d));
    for (auto& g : gens)
      for (auto& x : g) x = entry(rng);
    const Cone c = cone_from_generators(gens, d);
    for (int q = 0; q < 6; ++q) {
      RatVector v(d);
      for (auto& x : v) x = random_rational(rng, 4);
      CHECK(contains(c, std::span<const Rational>(v)) == caratheodory_contains(c.generators(), v));
    }
  }
}

TEST_CASE("lineality matches the two-sided membership definition") {
  std::mt19937_64 rng(19);
  std::uniform_int_distribution<long> entry(-2, 2);
  std::uniform_int_distribution<std::size_t> ng(1, 6), dd(1, 3);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t d = dd(rng);
    std::vector<IntVector> gens(ng(rng), IntVector(d));
    for (auto& g : gens)
      for (auto& x : g) x = entry(rng);
    const Cone c = cone_from_generators(gens, d);
    const auto h = lineality_space(c);
    for (const auto& b : h.basis) {
      CHECK(contains(c, std::span<const Integer>(b)));
      CHECK(contains(c, std::span<const Integer>(negated(b))));
    }
    CHECK(is_pointed(c) != (h.rank() >= 1));
    for (int q = 0; q < 200; ++q) {
      RatVector v(d);
      for (auto& x : v) x = random_rational(rng, 3);
      RatVector neg(d);
      for (std::size_t i = 0; i < d; ++i) neg[i] = -v[i];
      if (contains(c, std::span<const Rational>(v)) && contains(c, std::span<const Rational>(neg))) {
        std::vector<IntVector> span = h.basis;
        span.push_back(clear_denominators(v));
        CHECK(rank_of(span, d) == h.rank());
      }
      if (is_full_space(c)) CHECK(contains(c, std::span<const Rational>(v)));
    }
  }
}

TEST_CASE("projections compose") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 40; ++trial) {
    const IntMatrix gens_m = torusplit::testing::random_matrix(rng, 3, 4, -3, 3);
    const Cone c = cone_from_generators(gens_m.columns(), 3);
    const IntMatrix p = torusplit::testing::random_matrix(rng, 2, 3, -2, 2);
    const IntMatrix q = torusplit::testing::random_matrix(rng, 2, 2, -2, 2);
    CHECK(project(project(c, p), q) == project(c, q * p));
  }
}
