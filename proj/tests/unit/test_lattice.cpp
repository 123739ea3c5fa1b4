#include "doctest.h"

#include <random>

#include "support/test_support.hpp"
#include "torusplit/error.hpp"
#include "torusplit/lattice.hpp"

using namespace torusplit;
using torusplit::testing::determinantal_invariant_factors;
using torusplit::testing::random_matrix;

namespace {

void check_snf(const IntMatrix& a, const SnfDecomposition& s) {
  CHECK(s.U * a * s.V == s.D);
  CHECK(abs(s.U.determinant()) == 1);
  CHECK(abs(s.V.determinant()) == 1);
  CHECK(s.U * s.U_inv == IntMatrix::identity(a.rows()));
  CHECK(s.V * s.V_inv == IntMatrix::identity(a.cols()));
  const std::size_t r = s.rank();
  for (std::size_t i = 0; i < s.D.rows(); ++i)
    for (std::size_t j = 0; j < s.D.cols(); ++j) {
      if (i != j) CHECK(s.D(i, j) == 0);
      if (i == j && i >= r) CHECK(s.D(i, j) == 0);
    }
  for (std::size_t i = 0; i < r; ++i) {
    CHECK(s.D(i, i) > 0);
    if (i + 1 < r) CHECK(mpz_divisible_p(s.D(i + 1, i + 1).get_mpz_t(), s.D(i, i).get_mpz_t()));
  }
}

} // namespace

TEST_CASE("snf of the identity is trivial") {
  const IntMatrix id = IntMatrix::identity(2);
  const auto s = snf(id);
  CHECK(s.D == id);
  CHECK(s.U == id);
  CHECK(s.V == id);
}

TEST_CASE("snf of a single weight row") {
  const IntMatrix a{{3, -3, 3, 1}};
  const auto s = snf(a);
  check_snf(a, s);
  CHECK(s.D == IntMatrix{{1, 0, 0, 0}});
}

TEST_CASE("snf of [[2,4],[6,8]] matches determinantal divisors") {
  const IntMatrix a{{2, 4}, {6, 8}};
  // Oracle: d1 = gcd of entries, d1*d2 = |det|.
  const IntVector oracle = determinantal_invariant_factors(a);
  REQUIRE(oracle.size() == 2);
  CHECK(oracle[0] == 2);
  CHECK(oracle[1] == 4);
  const auto s = snf(a);
  check_snf(a, s);
  CHECK(s.elementary_divisors() == oracle);
}

TEST_CASE("snf agrees with the determinantal oracle on random matrices") {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<std::size_t> dim(1, 4);
  for (int trial = 0; trial < 120; ++trial) {
    const IntMatrix a = random_matrix(rng, dim(rng), dim(rng), -9, 9);
    const auto s = snf(a);
    check_snf(a, s);
    CHECK(s.elementary_divisors() == determinantal_invariant_factors(a));
  }
}

TEST_CASE("snf handles empty and zero matrices") {
  const IntMatrix z(2, 3);
  const auto s = snf(z);
  CHECK(s.rank() == 0);
  CHECK(s.D == z);
  const auto e = snf(IntMatrix(0, 3));
  CHECK(e.V == IntMatrix::identity(3));
}

TEST_CASE("kernel_lattice") {
  SUBCASE("injective map has rank-0 kernel") {
    CHECK(kernel_lattice(IntMatrix::identity(2)).rank() == 0);
  }
  SUBCASE("example weights have a rank-3 kernel") {
    const IntMatrix a{{1, 2, 1, -1, 4}, {1, 2, 0, 0, 2}};
    const auto k = kernel_lattice(a);
    CHECK(k.rank() == 3);
    for (const auto& v : k.basis_vectors()) CHECK(is_zero(a * v));
    CHECK(k.is_saturated());
  }
  SUBCASE("[[1,-1]] has kernel spanned by (1,1)") {
    const auto k = kernel_lattice(IntMatrix{{1, -1}});
    REQUIRE(k.rank() == 1);
    CHECK(k.basis().column(0) == make_int_vector({1, 1}));
  }
  SUBCASE("zero-row matrix has full kernel") {
    CHECK(kernel_lattice(IntMatrix(0, 3)).rank() == 3);
  }
}

TEST_CASE("saturate") {
  const auto s1 = saturate(Sublattice(2, IntMatrix{{2}, {0}}));
  CHECK(s1.basis().column(0) == make_int_vector({1, 0}));

  const auto s2 = saturate(Sublattice(2, IntMatrix{{0}, {1}}));
  CHECK(s2.basis().column(0) == make_int_vector({0, 1}));

  const Sublattice l(2, IntMatrix{{2, 0}, {2, 4}});
  CHECK_FALSE(l.is_saturated());
  const auto s3 = saturate(l);
  CHECK(s3.rank() == 2);
  CHECK(s3.same_lattice(Sublattice::full(2)));
  CHECK(s3.is_saturated());
  for (const auto& b : l.basis_vectors()) CHECK(s3.contains(b));
}

TEST_CASE("orthogonal_sublattice") {
  const std::vector<RatVector> h{{Rational(1), Rational(0)}};
  const auto n1 = orthogonal_sublattice(std::span<const RatVector>(h), 2);
  REQUIRE(n1.rank() == 1);
  CHECK(n1.basis().column(0) == make_int_vector({0, 1}));

  CHECK(orthogonal_sublattice(std::span<const RatVector>{}, 3).same_lattice(Sublattice::full(3)));

  const std::vector<RatVector> full{{Rational(1, 2), Rational(0)}, {Rational(0), Rational(3)}};
  CHECK(orthogonal_sublattice(std::span<const RatVector>(full), 2).rank() == 0);
}

TEST_CASE("complement") {
  SUBCASE("example splitting") {
    const Sublattice n1(2, IntMatrix{{0}, {1}});
    const auto n2 = complement(n1);
    REQUIRE(n2.rank() == 1);
    CHECK(n2.basis().column(0) == make_int_vector({1, 0}));
    CHECK(abs(n1.basis().hstack(n2.basis()).determinant()) == 1);
  }
  SUBCASE("zero sublattice") {
    CHECK(complement(Sublattice::zero(3)).same_lattice(Sublattice::full(3)));
  }
  SUBCASE("diagonal line") {
    const Sublattice n1(2, IntMatrix{{1}, {1}});
    const auto n2 = complement(n1);
    CHECK(abs(n1.basis().hstack(n2.basis()).determinant()) == 1);
  }
  SUBCASE("non-saturated input is rejected") {
    const Sublattice n1(2, IntMatrix{{2}, {0}});
    CHECK_THROWS_AS(complement(n1), Error);
    try {
      complement(n1);
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::NotSaturated);
    }
  }
}

TEST_CASE("dual_projection restricts characters") {
  const Sublattice n1(2, IntMatrix{{0}, {1}});
  const Sublattice n2(2, IntMatrix{{1}, {0}});
  CHECK(dual_projection(n1) * make_int_vector({2, 2}) == make_int_vector({2}));
  CHECK(dual_projection(n2) * make_int_vector({1, 0}) == make_int_vector({1}));
  CHECK(is_zero(dual_projection(n1) * make_int_vector({0, 0})));
}

TEST_CASE("lattice properties on random inputs") {
  std::mt19937_64 rng(2024);
  std::uniform_int_distribution<std::size_t> dim(1, 6);
  for (int trial = 0; trial < 150; ++trial) {
    const IntMatrix a = random_matrix(rng, dim(rng), dim(rng), -9, 9);
    const auto k = kernel_lattice(a);
    for (const auto& v : k.basis_vectors()) CHECK(is_zero(a * v));
    CHECK(k.rank() + a.rank() == a.cols());
    CHECK(saturate(k).same_lattice(k));

    // Rows of a span some H; N1 = H-perp, complement, and stacked projections.
    std::vector<IntVector> h;
    for (std::size_t r = 0; r < a.rows(); ++r) h.push_back(a.row(r));
    const auto n1 = orthogonal_sublattice(std::span<const IntVector>(h), a.cols());
    CHECK(n1.is_saturated());
    CHECK(saturate(n1).same_lattice(n1));
    const auto n2 = complement(n1);
    CHECK(n1.rank() + n2.rank() == a.cols());
    CHECK(abs(n1.basis().hstack(n2.basis()).determinant()) == 1);
    CHECK(abs(dual_projection(n1).vstack(dual_projection(n2)).determinant()) == 1);
  }
}

TEST_CASE("lll_reduce_rows and reduced_kernel_equations") {
  CHECK(lll_reduce_rows(IntMatrix{{1, 0}, {7, 1}}) == IntMatrix{{1, 0}, {0, 1}});

  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t k = std::uniform_int_distribution<std::size_t>(1, 3)(rng);
    const std::size_t n = std::uniform_int_distribution<std::size_t>(k, 6)(rng);
    const IntMatrix w = random_matrix(rng, k, n, -4, 4);
    const IntMatrix g = testing::random_unimodular(rng, k, 12);
    const IntMatrix big = g * w;

    const IntMatrix small = reduced_kernel_equations(big);
    CHECK(kernel_lattice(small).same_lattice(kernel_lattice(w)));
    if (w.rank() == k) {
      const IntMatrix reduced = lll_reduce_rows(big);
      // Same row lattice: each basis expresses the other.
      const Sublattice a(n, big.transposed()), b(n, reduced.transposed());
      CHECK(a.same_lattice(b));
    }
  }
}
