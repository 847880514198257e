#include <benchmark/benchmark.h>

#include "dell/characters.hpp"
#include "dell/double_l.hpp"
#include "dell/special_fn.hpp"

namespace {

dell::EvalRequest strip_request(long long q, double t2) {
  dell::EvalRequest req;
  req.s1 = {1.0, 0.0};
  req.s2 = {0.5, t2};
  req.chi1 = dell::character_from_label(q, {1});
  req.chi2 = dell::character_from_label(q, {1});
  req.n_order = 5;
  req.m_remainder = 4000;
  return req;
}

void BM_DirectSum(benchmark::State& state) {
  dell::EvalRequest req;
  req.s1 = {2.0, 0.0};
  req.s2 = {2.5, 5.0};
  req.chi1 = dell::character_from_label(3, {1});
  req.chi2 = dell::character_from_label(3, {1});
  req.m_direct = state.range(0);
  for (auto _ : state) benchmark::DoNotOptimize(dell::direct_sum(req));
}
BENCHMARK(BM_DirectSum)->Arg(1000)->Arg(4000);

void BM_PsiSeries(benchmark::State& state) {
  auto req = strip_request(3, static_cast<double>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(dell::psi_series(req));
}
BENCHMARK(BM_PsiSeries)->Arg(10)->Arg(80)->Arg(320);

void BM_IntegralRepr(benchmark::State& state) {
  auto req = strip_request(3, static_cast<double>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(dell::integral_repr(req));
}
BENCHMARK(BM_IntegralRepr)->Arg(10)->Arg(30);

void BM_MainTerm(benchmark::State& state) {
  auto chi = dell::character_from_label(3, {1});
  double t2 = static_cast<double>(state.range(0));
  for (auto _ : state)
    benchmark::DoNotOptimize(
        dell::theorem2_main_term({1.0, 0.0}, {0.5, t2}, chi, chi, false));
}
BENCHMARK(BM_MainTerm)->Arg(50)->Arg(320);

void BM_TricomiPsi(benchmark::State& state) {
  dell::cplx c{1.5, -static_cast<double>(state.range(0))};
  for (auto _ : state)
    benchmark::DoNotOptimize(dell::tricomi_psi({1.0, 0.0}, c, {0.0, 30.0}));
}
BENCHMARK(BM_TricomiPsi)->Arg(5)->Arg(40);

void BM_EnumerateCharacters(benchmark::State& state) {
  for (auto _ : state)
    benchmark::DoNotOptimize(dell::enumerate_characters(state.range(0)));
}
BENCHMARK(BM_EnumerateCharacters)->Arg(101)->Arg(420);

}  // namespace

BENCHMARK_MAIN();
