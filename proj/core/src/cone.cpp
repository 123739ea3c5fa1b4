#include "torusplit/cone.hpp"

#include <algorithm>
#include <set>
#include <utility>

#include "torusplit/error.hpp"

namespace torusplit {

namespace {

// a . x <= rhs over integer coefficients, stored primitive.
struct Inequality {
  IntVector a;
  Integer rhs;

  bool operator<(const Inequality& o) const {
    if (a != o.a) return a < o.a;
    return rhs < o.rhs;
  }
};

Inequality make_inequality(IntVector a, Integer rhs) {
  Integer g = content(a);
  mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), rhs.get_mpz_t());
  if (g > 1) {
    for (auto& x : a) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
    mpz_divexact(rhs.get_mpz_t(), rhs.get_mpz_t(), g.get_mpz_t());
  }
  return {std::move(a), std::move(rhs)};
}

// Reduced row echelon form of [G | v] over Q. Returns false when the
// equality system is inconsistent; otherwise fills pivot columns.
bool rref(std::vector<RatVector>& m, std::size_t vars,
          std::vector<std::size_t>& pivots) {
  std::size_t row = 0;
  for (std::size_t c = 0; c < vars && row < m.size(); ++c) {
    std::size_t p = row;
    while (p < m.size() && m[p][c] == 0) ++p;
    if (p == m.size()) continue;
    std::swap(m[p], m[row]);
    const Rational inv = 1 / m[row][c];
    for (auto& x : m[row]) x *= inv;
    for (std::size_t r = 0; r < m.size(); ++r) {
      if (r == row || m[r][c] == 0) continue;
      const Rational f = m[r][c];
      for (std::size_t j = 0; j <= vars; ++j) m[r][j] -= f * m[row][j];
    }
    pivots.push_back(c);
    ++row;
  }
  for (std::size_t r = row; r < m.size(); ++r) {
    if (m[r][vars] != 0) return false;
  }
  m.resize(row);
  return true;
}

} // namespace

Cone cone_from_generators(std::span<const IntVector> vectors,
                          std::size_t ambient_dim) {
  std::set<IntVector> unique;
  for (const auto& v : vectors) {
    if (v.size() != ambient_dim) {
      throw Error(ErrorCode::DimensionMismatch,
                  "cone generator " + to_string(v) + " not in dimension " +
                      std::to_string(ambient_dim));
    }
    if (!is_zero(v)) unique.insert(primitive(v));
  }
  Cone c;
  c.ambient_dim_ = ambient_dim;
  c.generators_.assign(unique.begin(), unique.end());
  return c;
}

bool contains(const Cone& c, std::span<const Rational> v) {
  const std::size_t k = c.ambient_dim();
  if (v.size() != k) {
    throw Error(ErrorCode::DimensionMismatch, "membership query has wrong dimension");
  }
  if (std::all_of(v.begin(), v.end(), [](const Rational& q) { return q == 0; })) {
    return true;
  }
  const auto& gens = c.generators();
  const std::size_t m = gens.size();
  if (m == 0) return false;

  std::vector<RatVector> system(k, RatVector(m + 1));
  for (std::size_t r = 0; r < k; ++r) {
    for (std::size_t j = 0; j < m; ++j) system[r][j] = gens[j][r];
    system[r][m] = v[r];
  }
  std::vector<std::size_t> pivots;
  if (!rref(system, m, pivots)) return false;

  std::vector<std::size_t> free_vars;
  for (std::size_t j = 0, p = 0; j < m; ++j) {
    if (p < pivots.size() && pivots[p] == j) {
      ++p;
    } else {
      free_vars.push_back(j);
    }
  }
  const std::size_t f = free_vars.size();

  // lambda_pivot = b - sum c_j x_j >= 0   <=>   sum c_j x_j <= b
  // x_j >= 0                              <=>   -x_j <= 0
  std::set<Inequality> ineqs;
  for (const auto& row : system) {
    RatVector coeffs(f + 1);
    for (std::size_t j = 0; j < f; ++j) coeffs[j] = row[free_vars[j]];
    coeffs[f] = row[m];
    IntVector scaled = clear_denominators(coeffs);
    Integer rhs = scaled.back();
    scaled.pop_back();
    ineqs.insert(make_inequality(std::move(scaled), std::move(rhs)));
  }
  for (std::size_t j = 0; j < f; ++j) {
    IntVector a(f, Integer(0));
    a[j] = -1;
    ineqs.insert(make_inequality(std::move(a), Integer(0)));
  }

  // Fourier-Motzkin elimination of the free coefficients, last first.
  for (std::size_t var = f; var-- > 0;) {
    std::vector<Inequality> pos, neg;
    std::set<Inequality> next;
    for (const auto& in : ineqs) {
      const int s = sgn(in.a[var]);
      if (s > 0) pos.push_back(in);
      else if (s < 0) neg.push_back(in);
      else next.insert(in);
    }
    for (const auto& p : pos) {
      for (const auto& n : neg) {
        const Integer wp = -n.a[var];
        const Integer wn = p.a[var];
        IntVector a(f, Integer(0));
        for (std::size_t j = 0; j < var; ++j) a[j] = wp * p.a[j] + wn * n.a[j];
        next.insert(make_inequality(std::move(a), wp * p.rhs + wn * n.rhs));
      }
    }
    ineqs = std::move(next);
    for (const auto& in : ineqs) {
      if (is_zero(in.a) && in.rhs < 0) return false;
    }
  }
  for (const auto& in : ineqs) {
    if (in.rhs < 0) return false;
  }
  return true;
}

bool contains(const Cone& c, std::span<const Integer> v) {
  RatVector q(v.begin(), v.end());
  return contains(c, std::span<const Rational>(q));
}

LinealitySpace lineality_space(const Cone& c) {
  std::vector<IntVector> two_sided;
  for (const auto& g : c.generators()) {
    if (contains(c, std::span<const Integer>(negated(g)))) two_sided.push_back(g);
  }
  LinealitySpace h;
  h.ambient_dim = c.ambient_dim();
  h.basis = saturated_span(two_sided, c.ambient_dim()).basis_vectors();
  return h;
}

bool is_pointed(const Cone& c) { return lineality_space(c).rank() == 0; }

bool is_full_space(const Cone& c) {
  return lineality_space(c).rank() == c.ambient_dim();
}

Cone project(const Cone& c, const IntMatrix& p) {
  if (p.cols() != c.ambient_dim()) {
    throw Error(ErrorCode::DimensionMismatch, "projection matrix has wrong column count");
  }
  std::vector<IntVector> images;
  images.reserve(c.generators().size());
  for (const auto& g : c.generators()) images.push_back(p * g);
  return cone_from_generators(images, p.rows());
}

std::size_t dim(const Cone& c) {
  if (c.generators().empty()) return 0;
  return rank_of(c.generators(), c.ambient_dim());
}

} // namespace torusplit
