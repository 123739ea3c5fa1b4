#include "torusplit/monoid.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <set>
#include <utility>

#include "torusplit/cone.hpp"
#include "torusplit/error.hpp"
#include "torusplit/lattice.hpp"

namespace torusplit {

namespace {

// Arithmetic policy for the completion loop: machine words with overflow
// detection, or GMP integers.
struct CheckedWord {
  using type = std::int64_t;
  static type add(type a, type b) {
    type r;
    if (__builtin_add_overflow(a, b, &r)) throw Error(ErrorCode::Overflow, "int64 overflow");
    return r;
  }
  static type mul(type a, type b) {
    type r;
    if (__builtin_mul_overflow(a, b, &r)) throw Error(ErrorCode::Overflow, "int64 overflow");
    return r;
  }
  static type from(const Integer& x) {
    if (!x.fits_slong_p()) throw Error(ErrorCode::Overflow, "entry exceeds int64");
    return x.get_si();
  }
  static Integer to(type x) { return Integer(static_cast<long>(x)); }
};

struct BigWord {
  using type = Integer;
  static type add(const type& a, const type& b) { return a + b; }
  static type mul(const type& a, const type& b) { return a * b; }
  static type from(const Integer& x) { return x; }
  static Integer to(const type& x) { return x; }
};

template <class W>
bool dominates(const std::vector<typename W::type>& q,
               const std::vector<typename W::type>& b) {
  for (std::size_t i = 0; i < q.size(); ++i)
    if (q[i] < b[i]) return false;
  return true;
}

// Contejean-Devie completion for A v = 0, v >= 0. Candidates grow by one unit
// per round; a candidate p with defect d = A p is extended by e_j only when
// <d, A e_j> < 0, and candidates dominating a found solution are discarded.
template <class W>
std::vector<IntVector> completion(const IntMatrix& a) {
  using T = typename W::type;
  const std::size_t rows = a.rows(), n = a.cols();
  std::vector<std::vector<T>> col(n, std::vector<T>(rows));
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t r = 0; r < rows; ++r) col[j][r] = W::from(a(r, j));

  struct Candidate {
    std::vector<T> v;
    std::vector<T> defect;
  };
  std::vector<std::vector<T>> found;
  std::vector<Candidate> frontier;
  for (std::size_t j = 0; j < n; ++j) {
    std::vector<T> e(n, T(0));
    e[j] = 1;
    frontier.push_back({std::move(e), col[j]});
  }

  while (!frontier.empty()) {
    std::vector<Candidate> open;
    for (auto& c : frontier) {
      bool solved = std::all_of(c.defect.begin(), c.defect.end(),
                                [](const T& x) { return x == 0; });
      if (solved) {
        found.push_back(std::move(c.v));
      } else {
        open.push_back(std::move(c));
      }
    }
    std::map<std::vector<T>, std::vector<T>> next;
    for (const auto& c : open) {
      for (std::size_t j = 0; j < n; ++j) {
        // <d, A e_j> = sum_i v_i <A e_i, A e_j>
        T s = 0;
        for (std::size_t r = 0; r < rows; ++r) s = W::add(s, W::mul(c.defect[r], col[j][r]));
        if (!(s < 0)) continue;
        std::vector<T> q = c.v;
        q[j] = W::add(q[j], T(1));
        if (next.count(q)) continue;
        bool dominated = false;
        for (const auto& b : found) {
          if (dominates<W>(q, b)) {
            dominated = true;
            break;
          }
        }
        if (dominated) continue;
        std::vector<T> d = c.defect;
        for (std::size_t r = 0; r < rows; ++r) d[r] = W::add(d[r], col[j][r]);
        next.emplace(std::move(q), std::move(d));
      }
    }
    frontier.clear();
    for (auto& [v, d] : next) frontier.push_back({v, std::move(d)});
  }

  std::vector<IntVector> out;
  out.reserve(found.size());
  for (const auto& v : found) {
    IntVector w;
    w.reserve(n);
    for (const auto& x : v) w.push_back(W::to(x));
    out.push_back(std::move(w));
  }
  return out;
}

std::vector<IntVector> nonnegative_hilbert_basis(const IntMatrix& a) {
  try {
    return completion<CheckedWord>(a);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::Overflow) throw;
    return completion<BigWord>(a);
  }
}

void sort_unique(std::vector<IntVector>& v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
}

// Exact search over coefficient vectors for elements that are nonnegative
// and nonzero (no units). Failed (index, residual) states are memoized.
class NonnegativeSearch {
public:
  explicit NonnegativeSearch(std::span<const IntVector> elems) : elems_(elems) {}

  bool run(std::size_t i, const IntVector& residual) {
    if (is_zero(residual)) return true;
    if (i == elems_.size()) return false;
    if (failed_.count({i, residual})) return false;
    const IntVector& e = elems_[i];
    // Largest multiple of e fitting under the residual.
    Integer limit = -1;
    for (std::size_t j = 0; j < e.size(); ++j) {
      if (e[j] == 0) continue;
      Integer q = residual[j] / e[j];
      if (limit < 0 || q < limit) limit = q;
    }
    IntVector r = residual;
    for (Integer c = 0; c <= limit; ++c) {
      if (run(i + 1, r)) return true;
      for (std::size_t j = 0; j < r.size(); ++j) r[j] -= e[j];
    }
    failed_.insert({i, residual});
    return false;
  }

private:
  std::span<const IntVector> elems_;
  std::set<std::pair<std::size_t, IntVector>> failed_;
};

// General search when elements may have negative entries. Elements u with
// -u in the cone of all elements span a group (their cone is linear), so the
// monoid they generate equals their integer span. Coefficients of the other
// elements are enumerated upward while the residual stays in the cone of the
// remaining elements; that set of multiples is a bounded initial interval
// because -r is not in the cone for a non-lineality element r.
class GeneralSearch {
public:
  GeneralSearch(std::span<const IntVector> elems, std::size_t dim) : dim_(dim) {
    std::vector<IntVector> all(elems.begin(), elems.end());
    const Cone whole = cone_from_generators(all, dim);
    for (const auto& e : elems) {
      if (is_zero(e)) continue;
      if (contains(whole, std::span<const Integer>(negated(e)))) {
        units_.push_back(e);
      } else {
        rest_.push_back(e);
      }
    }
    for (std::size_t i = 0; i <= rest_.size(); ++i) {
      std::vector<IntVector> gens(rest_.begin() + static_cast<std::ptrdiff_t>(i), rest_.end());
      for (const auto& u : units_) {
        gens.push_back(u);
        gens.push_back(negated(u));
      }
      tails_.push_back(cone_from_generators(gens, dim_));
    }
  }

  bool run(std::size_t i, const IntVector& residual) {
    if (i == rest_.size()) return in_integer_span(units_, residual);
    if (failed_.count({i, residual})) return false;
    IntVector r = residual;
    while (contains(tails_[i], std::span<const Integer>(r))) {
      if (run(i + 1, r)) return true;
      for (std::size_t j = 0; j < r.size(); ++j) r[j] -= rest_[i][j];
    }
    failed_.insert({i, residual});
    return false;
  }

private:
  std::size_t dim_;
  std::vector<IntVector> units_;
  std::vector<IntVector> rest_;
  std::vector<Cone> tails_;
  std::set<std::pair<std::size_t, IntVector>> failed_;
};

} // namespace

DiophantineSystem::DiophantineSystem(IntMatrix a, std::vector<bool> nonneg_mask)
    : matrix(std::move(a)), nonneg(std::move(nonneg_mask)) {
  if (matrix.cols() != nonneg.size() && !(matrix.rows() == 0)) {
    throw Error(ErrorCode::DimensionMismatch,
                "system matrix columns differ from variable count");
  }
  if (matrix.rows() == 0) matrix = IntMatrix(0, nonneg.size());
}

DiophantineSystem DiophantineSystem::all_nonnegative(IntMatrix a) {
  const std::size_t n = a.cols();
  return DiophantineSystem(std::move(a), std::vector<bool>(n, true));
}

bool DiophantineSystem::has_free_coordinates() const {
  return std::find(nonneg.begin(), nonneg.end(), false) != nonneg.end();
}

bool DiophantineSystem::is_solution(std::span<const Integer> v) const {
  if (v.size() != n_vars()) return false;
  for (std::size_t j = 0; j < v.size(); ++j)
    if (nonneg[j] && v[j] < 0) return false;
  return is_zero(matrix * v);
}

HilbertBasis hilbert_basis(const DiophantineSystem& sys) {
  const std::size_t n = sys.n_vars();
  // Completion slows down sharply with large coefficients; only the kernel matters.
  const IntMatrix a = reduced_kernel_equations(sys.matrix);
  if (!sys.has_free_coordinates()) {
    auto elems = nonnegative_hilbert_basis(a);
    sort_unique(elems);
    return {sys, std::move(elems)};
  }

  // v = v+ - v-: append a negated column for every free coordinate.
  std::vector<std::size_t> free_idx;
  for (std::size_t j = 0; j < n; ++j)
    if (!sys.nonneg[j]) free_idx.push_back(j);
  IntMatrix doubled(a.rows(), n + free_idx.size());
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t j = 0; j < n; ++j) doubled(r, j) = a(r, j);
    for (std::size_t k = 0; k < free_idx.size(); ++k)
      doubled(r, n + k) = -a(r, free_idx[k]);
  }
  std::vector<IntVector> elems;
  for (const auto& w : nonnegative_hilbert_basis(doubled)) {
    IntVector v(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(n));
    for (std::size_t k = 0; k < free_idx.size(); ++k) v[free_idx[k]] -= w[n + k];
    if (!is_zero(v)) elems.push_back(std::move(v));
  }
  sort_unique(elems);

  // Drop elements generated by the others, scanning from the back so that
  // lexicographically small elements are preferred.
  for (std::size_t i = elems.size(); i-- > 0;) {
    std::vector<IntVector> others;
    for (std::size_t j = 0; j < elems.size(); ++j)
      if (j != i) others.push_back(elems[j]);
    if (generated_by(others, elems[i])) elems.erase(elems.begin() + static_cast<std::ptrdiff_t>(i));
  }
  return {sys, std::move(elems)};
}

std::vector<IntVector> brute_force_solutions(const DiophantineSystem& sys,
                                             long bound, std::uint64_t cap) {
  if (bound < 1) throw Error(ErrorCode::InvalidArgument, "bound must be >= 1");
  const std::size_t n = sys.n_vars();
  long double space = 1;
  for (std::size_t j = 0; j < n; ++j) space *= static_cast<long double>(2 * bound + 1);
  if (space > static_cast<long double>(cap)) {
    throw Error(ErrorCode::SearchSpaceTooLarge,
                "enumeration space " + std::to_string(static_cast<double>(space)) +
                    " exceeds cap " + std::to_string(cap));
  }
  const std::size_t rows = sys.matrix.rows();
  std::vector<std::vector<long>> col(n, std::vector<long>(rows));
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t r = 0; r < rows; ++r) {
      if (!sys.matrix(r, j).fits_slong_p()) {
        throw Error(ErrorCode::Overflow, "oracle requires machine-size coefficients");
      }
      col[j][r] = sys.matrix(r, j).get_si();
    }

  std::vector<long> lo(n), v(n);
  for (std::size_t j = 0; j < n; ++j) lo[j] = v[j] = sys.nonneg[j] ? 0 : -bound;
  std::vector<long> image(rows, 0);
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t r = 0; r < rows; ++r) image[r] += col[j][r] * v[j];

  std::vector<IntVector> out;
  for (;;) {
    if (std::all_of(image.begin(), image.end(), [](long x) { return x == 0; })) {
      out.emplace_back(v.begin(), v.end());
    }
    // Odometer, last coordinate fastest.
    bool advanced = false;
    for (std::size_t j = n; j-- > 0;) {
      if (v[j] < bound) {
        ++v[j];
        for (std::size_t r = 0; r < rows; ++r) image[r] += col[j][r];
        advanced = true;
        break;
      }
      for (std::size_t r = 0; r < rows; ++r) image[r] -= col[j][r] * (v[j] - lo[j]);
      v[j] = lo[j];
    }
    if (!advanced) break;
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool generated_by(std::span<const IntVector> elements,
                  std::span<const Integer> v) {
  if (is_zero(v)) return true;
  const IntVector target(v.begin(), v.end());
  const bool nonnegative = std::all_of(elements.begin(), elements.end(), [](const IntVector& e) {
    return std::all_of(e.begin(), e.end(), [](const Integer& x) { return x >= 0; });
  });
  if (nonnegative) {
    std::vector<IntVector> nz;
    for (const auto& e : elements)
      if (!is_zero(e)) nz.push_back(e);
    if (std::any_of(target.begin(), target.end(), [](const Integer& x) { return x < 0; })) {
      return false;
    }
    NonnegativeSearch search(nz);
    return search.run(0, target);
  }
  GeneralSearch search(elements, target.size());
  return search.run(0, target);
}

bool generates(const HilbertBasis& basis, std::span<const Integer> v) {
  if (!basis.system.is_solution(v)) {
    throw Error(ErrorCode::NotASolution, to_string(v) + " does not solve the system");
  }
  return generated_by(basis.elements, v);
}

} // namespace torusplit
