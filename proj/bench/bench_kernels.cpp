// Serial reference kernels against their OpenMP versions.

#include <benchmark/benchmark.h>

#include <random>

#include "rigid/abelian.hpp"
#include "rigid/hochschild.hpp"
#include "rigid/kernels.hpp"

using namespace rigid;

namespace {

struct GroupCase {
  ModulePtr module;
  Vec in;
  Vec out;
};

GroupCase group_case(int degree, bool split) {
  std::mt19937_64 rng(1);
  const auto m = random::module(groups::symmetric(3), 4, Field::Complex, rng);
  const int in_deg = split ? degree + 1 : degree;
  const int out_deg = split ? degree : degree + 1;
  return {m, random::cochain(m, in_deg, rng).values(), Vec::Zero(ipow(6, out_deg) * 4)};
}

template <bool Omp>
void bm_group_differential(benchmark::State& state) {
  auto c = group_case(static_cast<int>(state.range(0)), false);
  const auto view = c.module->view();
  for (auto _ : state) {
    if constexpr (Omp) kernels::omp::group_differential(view, static_cast<int>(state.range(0)), c.in, c.out);
    else kernels::serial::group_differential(view, static_cast<int>(state.range(0)), c.in, c.out);
    benchmark::DoNotOptimize(c.out.data());
  }
  state.SetItemsProcessed(state.iterations() * c.out.size());
}

template <bool Omp>
void bm_group_split(benchmark::State& state) {
  auto c = group_case(static_cast<int>(state.range(0)), true);
  const auto view = c.module->view();
  for (auto _ : state) {
    if constexpr (Omp) kernels::omp::group_split(view, static_cast<int>(state.range(0)), c.in, c.out);
    else kernels::serial::group_split(view, static_cast<int>(state.range(0)), c.in, c.out);
    benchmark::DoNotOptimize(c.out.data());
  }
  state.SetItemsProcessed(state.iterations() * c.out.size());
}

template <bool Omp>
void bm_hochschild_differential(benchmark::State& state) {
  std::mt19937_64 rng(2);
  const int n = static_cast<int>(state.range(0));
  const auto e = bimodules::regular(algebras::matrix(3));
  const Vec in = random::hochschild_cochain(e, n, rng).values();
  Vec out = Vec::Zero(ipow(9, n + 1) * 9);
  const auto view = e->view();
  for (auto _ : state) {
    if constexpr (Omp) kernels::omp::hochschild_differential(view, n, in, out);
    else kernels::serial::hochschild_differential(view, n, in, out);
    benchmark::DoNotOptimize(out.data());
  }
  state.SetItemsProcessed(state.iterations() * out.size());
}

}  // namespace

BENCHMARK(bm_group_differential<false>)->Name("group_differential/serial")->DenseRange(1, 3);
BENCHMARK(bm_group_differential<true>)->Name("group_differential/omp")->DenseRange(1, 3);
BENCHMARK(bm_group_split<false>)->Name("group_split/serial")->DenseRange(1, 3);
BENCHMARK(bm_group_split<true>)->Name("group_split/omp")->DenseRange(1, 3);
BENCHMARK(bm_hochschild_differential<false>)->Name("hochschild_differential/serial")->DenseRange(1, 2);
BENCHMARK(bm_hochschild_differential<true>)->Name("hochschild_differential/omp")->DenseRange(1, 2);

BENCHMARK_MAIN();
