#include <benchmark/benchmark.h>

#include "adk/codes.hpp"
#include "adk/cyclotomic.hpp"
#include "adk/dualities.hpp"
#include "adk/enumerators.hpp"
#include "adk/io.hpp"

using namespace adk;

namespace {

const std::vector<std::vector<std::int64_t>> kGroups = {{2, 2}, {2, 4}, {3, 3}, {2, 2, 2}, {4, 4}};

}  // namespace

static void automorphisms(benchmark::State& state) {
  const auto g = make_group(kGroups[static_cast<std::size_t>(state.range(0))]);
  for (auto _ : state) benchmark::DoNotOptimize(automorphism_group(g));
  state.SetLabel(group_text(g));
}
BENCHMARK(automorphisms)->DenseRange(0, 4)->Unit(benchmark::kMicrosecond);

static void dual_code(benchmark::State& state) {
  const auto a = make_group({3, 3});
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto p = power_group(a, n);
  std::vector<std::int64_t> c(2 * n, 0);
  c[0] = 1;
  c[2 * n - 1] = 2;
  const auto code = subgroup_closure(p, {p.element(c)});
  const auto phi = all_dualities(a)[7];
  for (auto _ : state) benchmark::DoNotOptimize(left_dual(code, phi));
  state.SetComplexityN(p.cardinality());
}
BENCHMARK(dual_code)->DenseRange(1, 3)->Unit(benchmark::kMicrosecond)->Complexity(benchmark::oN);

static void congruence(benchmark::State& state) {
  const auto g = make_group(kGroups[static_cast<std::size_t>(state.range(0))]);
  for (auto _ : state) benchmark::DoNotOptimize(congruence_classes(g));
}
BENCHMARK(congruence)->DenseRange(0, 3)->Unit(benchmark::kMillisecond);

static void complete_macwilliams(benchmark::State& state) {
  const auto a = make_group({2, 4});
  const auto p = power_group(a, static_cast<std::size_t>(state.range(0)));
  std::vector<std::int64_t> c(p.rank(), 1);
  const auto code = subgroup_closure(p, {p.element(c)});
  const auto e = cwe(code, a);
  const auto phi = all_dualities(a)[3];
  for (auto _ : state) benchmark::DoNotOptimize(mw_complete_transform(e, phi, Side::left, Direction::to_dual));
}
BENCHMARK(complete_macwilliams)->DenseRange(1, 3)->Unit(benchmark::kMillisecond);

static void cyclotomic_multiply(benchmark::State& state) {
  const auto m = state.range(0);
  auto x = root_power(m, 1) + CycInt(m, 3);
  auto y = root_power(m, m - 1) * BigInt(5) - CycInt(m, 2);
  for (auto _ : state) benchmark::DoNotOptimize(x * y);
}
BENCHMARK(cyclotomic_multiply)->Arg(4)->Arg(8)->Arg(9)->Arg(12)->Arg(60);

BENCHMARK_MAIN();
