#include "doctest.h"

#include <random>

#include "support/test_support.hpp"
#include "torusplit/error.hpp"
#include "torusplit/monoid.hpp"

using namespace torusplit;

namespace {

std::vector<IntVector> vecs(std::initializer_list<std::initializer_list<long>> vs) {
  std::vector<IntVector> out;
  for (const auto& v : vs) out.push_back(make_int_vector(v));
  return out;
}

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

TEST_CASE("hilbert_basis of the example invariant system is {z*t}") {
  const auto hb = hilbert_basis(
      DiophantineSystem::all_nonnegative(IntMatrix{{1, 2, 1, -1, 4}, {1, 2, 0, 0, 2}}));
  CHECK(hb.elements == vecs({{0, 0, 1, 1, 0}}));
}

TEST_CASE("hilbert_basis small cases") {
  CHECK(hilbert_basis(DiophantineSystem::all_nonnegative(IntMatrix::identity(2))).elements.empty());
  CHECK(hilbert_basis(DiophantineSystem::all_nonnegative(IntMatrix{{1, -1}})).elements ==
        vecs({{1, 1}}));
  // Oracle values frozen from an exhaustive enumeration of irreducibles.
  CHECK(hilbert_basis(DiophantineSystem::all_nonnegative(IntMatrix{{3, -3, 3, 1}})).elements ==
        vecs({{0, 1, 0, 3}, {0, 1, 1, 0}, {1, 1, 0, 0}}));
  CHECK(hilbert_basis(DiophantineSystem::all_nonnegative(IntMatrix{{1, 2, 0, 0, 2}})).elements ==
        vecs({{0, 0, 0, 1, 0}, {0, 0, 1, 0, 0}}));
  // No constraints: unit vectors.
  CHECK(hilbert_basis(DiophantineSystem::all_nonnegative(IntMatrix(0, 3))).elements ==
        vecs({{0, 0, 1}, {0, 1, 0}, {1, 0, 0}}));
}

TEST_CASE("brute_force_solutions") {
  const DiophantineSystem curve_sys =
      DiophantineSystem::all_nonnegative(IntMatrix{{1, 2, 1, -1, 4}, {1, 2, 0, 0, 2}});
  CHECK(brute_force_solutions(curve_sys, 3) ==
        vecs({{0, 0, 0, 0, 0}, {0, 0, 1, 1, 0}, {0, 0, 2, 2, 0}, {0, 0, 3, 3, 0}}));
  CHECK(brute_force_solutions(DiophantineSystem::all_nonnegative(IntMatrix{{1}}), 5) ==
        vecs({{0}}));
  const auto threefold_sols =
      brute_force_solutions(DiophantineSystem::all_nonnegative(IntMatrix{{3, -3, 3, 1}}), 2);
  // 3a - 3b + 3c + d = 0 with entries in [0,2]: d must be 0 or a multiple of 3.
  CHECK(threefold_sols == vecs({{0, 0, 0, 0}, {0, 1, 1, 0}, {0, 2, 2, 0}, {1, 1, 0, 0},
                        {1, 2, 1, 0}, {2, 2, 0, 0}}));
  CHECK(code_of([&] { brute_force_solutions(curve_sys, 3, 100); }) == ErrorCode::SearchSpaceTooLarge);
  CHECK(code_of([&] { brute_force_solutions(curve_sys, 0); }) == ErrorCode::InvalidArgument);
}

TEST_CASE("generates") {
  const HilbertBasis zt{DiophantineSystem::all_nonnegative(IntMatrix{{1, 2, 1, -1, 4}, {1, 2, 0, 0, 2}}),
                        vecs({{0, 0, 1, 1, 0}})};
  CHECK(generates(zt, make_int_vector({0, 0, 2, 2, 0})));
  const HilbertBasis pair{DiophantineSystem::all_nonnegative(IntMatrix{{1, -1}}), vecs({{1, 1}})};
  CHECK(generates(pair, make_int_vector({3, 3})));
  const HilbertBasis parity{DiophantineSystem::all_nonnegative(IntMatrix(0, 2)), vecs({{2, 0}, {0, 2}})};
  CHECK_FALSE(generates(parity, make_int_vector({1, 1})));
  CHECK(code_of([&] { generates(pair, make_int_vector({1, 2})); }) == ErrorCode::NotASolution);
}

TEST_CASE("free coordinates") {
  // x invertible with weight 0, y >= 0 with weight 1: monoid Z x {0}.
  const DiophantineSystem sys(IntMatrix{{0, 1}}, {false, true});
  const auto hb = hilbert_basis(sys);
  CHECK(hb.elements == vecs({{-1, 0}, {1, 0}}));
  CHECK(generates(hb, make_int_vector({-5, 0})));

  // Units cannot be dropped: generated_by decides exactly with units around.
  CHECK(generated_by(vecs({{1, 0}, {-1, 1}}), make_int_vector({-3, 2})) == false);
  CHECK(generated_by(vecs({{1, 0}, {-1, 0}, {-1, 1}}), make_int_vector({-3, 2})));
  CHECK_FALSE(generated_by(vecs({{2, 0}, {-2, 0}}), make_int_vector({1, 0})));

  // Mixed system checked against the enumeration oracle.
  const DiophantineSystem mixed(IntMatrix{{1, -2, 1}}, {true, false, true});
  const auto mb = hilbert_basis(mixed);
  for (const auto& e : mb.elements) CHECK(mixed.is_solution(e));
  for (const auto& v : brute_force_solutions(mixed, 5)) CHECK(generates(mb, v));
  for (std::size_t i = 0; i < mb.elements.size(); ++i) {
    std::vector<IntVector> rest;
    for (std::size_t j = 0; j < mb.elements.size(); ++j)
      if (j != i) rest.push_back(mb.elements[j]);
    CHECK_FALSE(generated_by(rest, mb.elements[i]));
  }
}

TEST_CASE("random systems: soundness, completeness, minimality") {
  std::mt19937_64 rng(99);
  std::uniform_int_distribution<std::size_t> rows(1, 2), vars(1, 4);
  for (int trial = 0; trial < 30; ++trial) {
    const IntMatrix a = torusplit::testing::random_matrix(rng, rows(rng), vars(rng), -3, 3);
    const auto sys = DiophantineSystem::all_nonnegative(a);
    const auto hb = hilbert_basis(sys);
    for (const auto& e : hb.elements) CHECK(sys.is_solution(e));
    const auto oracle = brute_force_solutions(sys, 5);
    for (const auto& v : oracle) CHECK(generates(hb, v));
  }
}

TEST_CASE("random systems with free coordinates reduce to a generating set") {
  std::mt19937_64 rng(123);
  std::uniform_int_distribution<int> coin(0, 2);
  for (int trial = 0; trial < 25; ++trial) {
    const IntMatrix a = torusplit::testing::random_matrix(rng, 1, 3, -3, 3);
    std::vector<bool> mask(3);
    for (std::size_t j = 0; j < 3; ++j) mask[j] = coin(rng) != 0;
    const DiophantineSystem sys(a, mask);
    const auto hb = hilbert_basis(sys);
    for (const auto& e : hb.elements) CHECK(sys.is_solution(e));
    for (const auto& v : brute_force_solutions(sys, 4)) CHECK(generates(hb, v));
  }
}
