#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "romdtb/linalg/kernels.hpp"
#include "romdtb/linalg/matrix.hpp"
#include "romdtb/wavesim/operators.hpp"
#include "romdtb/wavesim/presets.hpp"

using namespace romdtb;

namespace {

std::vector<double> random_values(std::size_t n, unsigned seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> g;
  std::vector<double> v(n);
  for (double& x : v) x = g(rng);
  return v;
}

const DiscreteWaveOperator& wave_operator() {
  static const DiscreteWaveOperator op = assemble_operators(make_preset("acoustic-two-inclusions").medium);
  return op;
}

template <auto Gemm>
void BM_Gemm(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto a = random_values(n * n, 1), b = random_values(n * n, 2);
  std::vector<double> c(n * n);
  for (auto _ : state) {
    Gemm(n, n, n, a.data(), b.data(), c.data());
    benchmark::DoNotOptimize(c.data());
  }
  state.SetItemsProcessed(state.iterations() * 2 * n * n * n);
}

template <auto Spmv>
void BM_Spmv(benchmark::State& state) {
  const auto& op = wave_operator();
  const auto x = random_values(op.lt.cols, 3);
  std::vector<double> y(op.lt.rows);
  for (auto _ : state) {
    Spmv(op.lt, x, y);
    benchmark::DoNotOptimize(y.data());
  }
  state.SetItemsProcessed(state.iterations() * op.lt.nnz());
}

// One leapfrog step for a block of m sources: P -= dt L P^, P^ += dt L^T P.
template <auto SpmvAdd>
void BM_LeapfrogStep(benchmark::State& state) {
  const auto& op = wave_operator();
  const auto m = static_cast<std::size_t>(state.range(0));
  const double dt = 1e-3;
  std::vector<std::vector<double>> p, q;
  for (std::size_t s = 0; s < m; ++s) {
    p.push_back(random_values(op.layout.primary_dim, 10 + s));
    q.push_back(random_values(op.layout.dual_dim, 20 + s));
  }
  for (auto _ : state) {
    for (std::size_t s = 0; s < m; ++s) {
      SpmvAdd(op.l, -dt, q[s], p[s]);
      SpmvAdd(op.lt, dt, p[s], q[s]);
    }
    benchmark::ClobberMemory();
  }
  state.SetItemsProcessed(state.iterations() * m * 2 * op.l.nnz());
}

}  // namespace

BENCHMARK(BM_Gemm<kernels::serial::gemm>)->Name("gemm/serial")->Arg(64)->Arg(256)->Arg(512);
BENCHMARK(BM_Gemm<kernels::omp::gemm>)->Name("gemm/omp")->Arg(64)->Arg(256)->Arg(512)->UseRealTime();
BENCHMARK(BM_Spmv<kernels::serial::spmv>)->Name("spmv/serial");
BENCHMARK(BM_Spmv<kernels::omp::spmv>)->Name("spmv/omp")->UseRealTime();
BENCHMARK(BM_LeapfrogStep<kernels::serial::spmv_add>)->Name("leapfrog/serial")->Arg(1)->Arg(16);
BENCHMARK(BM_LeapfrogStep<kernels::omp::spmv_add>)->Name("leapfrog/omp")->Arg(1)->Arg(16)->UseRealTime();

BENCHMARK_MAIN();
