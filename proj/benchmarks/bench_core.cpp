#include <random>

#include <benchmark/benchmark.h>

#include "torusplit/lattice.hpp"
#include "torusplit/monoid.hpp"
#include "torusplit/polynomial.hpp"
#include "torusplit/splitting.hpp"

namespace {

using namespace torusplit;

IntMatrix random_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols, long span) {
  std::uniform_int_distribution<long> d(-span, span);
  IntMatrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = d(rng);
  return m;
}

GradedPresentation curve_example() {
  auto vars = make_variable_table({{"x", false}, {"y", false}, {"z", false},
                                   {"t", false}, {"u", false}});
  Assertions as{true, true, true, true};
  return GradedPresentation(vars, 2, IntMatrix{{1, 2, 1, -1, 4}, {1, 2, 0, 0, 2}},
                            {parse_polynomial("z*t*y + x^2 + y + t^2*u", vars)}, as);
}

void BM_Snf(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  std::mt19937_64 rng(1);
  const IntMatrix a = random_matrix(rng, n, n, 9);
  for (auto _ : state) benchmark::DoNotOptimize(snf(a));
}
BENCHMARK(BM_Snf)->Arg(3)->Arg(6)->Arg(10);

void BM_HilbertBasis(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  std::mt19937_64 rng(2);
  const auto sys = DiophantineSystem::all_nonnegative(random_matrix(rng, 2, n, 3));
  for (auto _ : state) benchmark::DoNotOptimize(hilbert_basis(sys));
}
BENCHMARK(BM_HilbertBasis)->Arg(4)->Arg(5)->Arg(6);

void BM_CertifyCurveExample(benchmark::State& state) {
  const auto pres = curve_example();
  for (auto _ : state) benchmark::DoNotOptimize(certify(pres));
}
BENCHMARK(BM_CertifyCurveExample);

} // namespace

BENCHMARK_MAIN();
