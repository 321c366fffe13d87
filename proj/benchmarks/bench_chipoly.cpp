#include <benchmark/benchmark.h>

#include <array>

#include <chipoly/congruence.hpp>
#include <chipoly/continuation.hpp>
#include <chipoly/psi.hpp>
#include <chipoly/special_values.hpp>

using namespace chipoly;

namespace {

void BM_PsiTable(benchmark::State& state) {
  const auto chi = chi3();
  const auto degree = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(psi_table(chi, degree));
}
BENCHMARK(BM_PsiTable)->Arg(16)->Arg(64)->Arg(128);

void BM_FamilyRange(benchmark::State& state) {
  const auto m_max = static_cast<unsigned>(state.range(0));
  const auto table = psi_table(chi3(), 2 * m_max + 2);
  const auto shape = family_shape_x_x_plus_u();
  for (auto _ : state) benchmark::DoNotOptimize(family_range(shape, m_max, table));
}
BENCHMARK(BM_FamilyRange)->Arg(10)->Arg(30);

void BM_CongruenceScan(benchmark::State& state) {
  const auto p = static_cast<std::uint64_t>(state.range(0));
  const auto table = psi_table(chi3(), 2 * congruence_term_count(p, 2));
  for (auto _ : state) benchmark::DoNotOptimize(congruence_scan(chi3(), p, 2, table));
}
BENCHMARK(BM_CongruenceScan)->Arg(5)->Arg(11)->Arg(23);

void BM_ContinuationEval(benchmark::State& state) {
  const std::array<Complex, 2> roots{Complex(0), Complex(-1)};
  const Complex s(state.range(0) / Real(2), 3);
  const auto plan = make_plan(chi3(), roots, 1, s);
  for (auto _ : state) benchmark::DoNotOptimize(continuation_eval(plan, s));
}
BENCHMARK(BM_ContinuationEval)->Arg(-4)->Arg(1)->Arg(4);

void BM_DirectSum(benchmark::State& state) {
  const std::array<Complex, 3> coeffs{Complex(0), Complex(1), Complex(1)};
  const Complex s(2, 1);
  for (auto _ : state) benchmark::DoNotOptimize(direct_sum(chi3(), coeffs, 1, s, 1e-10L));
}
BENCHMARK(BM_DirectSum);

}  // namespace

BENCHMARK_MAIN();
