#include <benchmark/benchmark.h>

#include <random>
#include <string>

#include "blockomega/blocks.hpp"
#include "blockomega/catalog.hpp"
#include "blockomega/gmodule.hpp"
#include "blockomega/symgroup.hpp"

using namespace blockomega;

namespace {

GroupData named(const std::string& name) {
  const auto spec = catalog_group(name);
  return enumerate_group(spec.degree, spec.generators);
}

void field_mul(benchmark::State& state) {
  const auto f = field_ctx(static_cast<unsigned>(state.range(0)));
  std::mt19937_64 rng(7);
  std::vector<Scalar> xs(1024);
  for (auto& x : xs) x = rng() & f->mask();
  for (auto _ : state) {
    Scalar acc = 1;
    for (const auto x : xs) acc = f->mul(acc ^ x, x | 1);
    benchmark::DoNotOptimize(acc);
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(xs.size()));
}
BENCHMARK(field_mul)->Arg(1)->Arg(4)->Arg(8)->Arg(16);

void row_reduce_random(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto f = field_ctx(4);
  std::mt19937_64 rng(11);
  Matrix a(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a(i, j) = rng() & f->mask();
  for (auto _ : state) benchmark::DoNotOptimize(row_reduce(*f, a));
}
BENCHMARK(row_reduce_random)->Arg(64)->Arg(256);

void blocks_of(benchmark::State& state, const std::string& name) {
  const auto g = named(name);
  const auto f = field_ctx(splitting_degree(g));
  for (auto _ : state) {
    const auto c = center_structure(g, f);
    benchmark::DoNotOptimize(classify_blocks(c, block_idempotents(c)));
  }
}
BENCHMARK_CAPTURE(blocks_of, S6, std::string("S6"))->Unit(benchmark::kMillisecond);

void decompose_omega(benchmark::State& state, const std::string& name) {
  const auto g = named(name);
  const auto f = field_ctx(splitting_degree(g));
  const auto m = perm_module(g, conjugation_action(g, involutions(g)), f);
  for (auto _ : state) benchmark::DoNotOptimize(decompose(m));
}
BENCHMARK_CAPTURE(decompose_omega, S6, std::string("S6"))->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(decompose_omega, S7, std::string("S7"))->Unit(benchmark::kMillisecond);

void mn_table(benchmark::State& state) {
  const auto parts = partitions_of(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) {
    std::int64_t acc = 0;
    for (const auto& s : parts)
      for (const auto& t : parts) acc += mn_character(s, CycleType{t});
    benchmark::DoNotOptimize(acc);
  }
}
BENCHMARK(mn_table)->Arg(8)->Arg(12)->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
