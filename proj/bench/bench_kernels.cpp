#include <benchmark/benchmark.h>

#include "degen/chowcomplex.hpp"
#include "degen/kernels.hpp"
#include "degen/padics.hpp"

using namespace degen;

namespace {

std::vector<ChowComplexRow> torus_rows(int a) {
  FibreDescription f = triangulated_torus_fibre(a, a);
  std::vector<ChowComplexRow> rows;
  for (int j = 0; j <= f.d; ++j) rows.push_back(build_complex(f, j));
  return rows;
}

void BM_TGridSerial(benchmark::State& state) {
  auto rows = torus_rows(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(kernels::t_group_grid_serial(rows, 2));
}

void BM_TGridParallel(benchmark::State& state) {
  auto rows = torus_rows(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(kernels::t_group_grid_parallel(rows, 2));
}

struct BoxInput {
  std::vector<long> valuations;
  std::vector<BigInt> residues;
};

// Three periods 5 * 7, 5^2 * 11, 5^3 * 13: residues are the log numerators.
BoxInput box_input() {
  const BigInt p = 5;
  const long prec = 40;
  BoxInput in;
  for (auto [v, u] : {std::pair{1L, 7L}, {2L, 11L}, {3L, 13L}}) {
    PadicNumber q = PadicNumber::from_integer(p, power(p, static_cast<unsigned long>(v)) * u, prec);
    in.valuations.push_back(v);
    PadicNumber l = iwasawa_log(q);
    in.residues.push_back(l.is_zero() ? BigInt(0) : BigInt(l.unit() * power(p, static_cast<unsigned long>(l.valuation()))));
  }
  return in;
}

void BM_BoxSerial(benchmark::State& state) {
  auto in = box_input();
  for (auto _ : state)
    benchmark::DoNotOptimize(kernels::box_relation_search_serial(in.valuations, in.residues, 5, 30, state.range(0)));
}

void BM_BoxParallel(benchmark::State& state) {
  auto in = box_input();
  for (auto _ : state)
    benchmark::DoNotOptimize(kernels::box_relation_search_parallel(in.valuations, in.residues, 5, 30, state.range(0)));
}

}  // namespace

BENCHMARK(BM_TGridSerial)->Arg(3)->Arg(5)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_TGridParallel)->Arg(3)->Arg(5)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_BoxSerial)->Arg(20)->Arg(60)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_BoxParallel)->Arg(20)->Arg(60)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
