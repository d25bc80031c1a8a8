// Serial reference against the OpenMP path for the three data-parallel
// kernels. Run with --benchmark_filter=<kernel> to narrow.

#include <benchmark/benchmark.h>

#include "kazhlip/bounds.hpp"
#include "kazhlip/groupact.hpp"
#include "kazhlip/verify.hpp"

using namespace kazhlip;

namespace {

Execution mode(const benchmark::State& state) { return state.range(0) ? Execution::parallel : Execution::serial; }

const GeneratorSet& sample_set() {
  static const GeneratorSet s(
      "sample", {{"a", PLHomeo({{Rational(0), Rational(0)}, {Rational(1), Rational(2)}, {Rational(3), Rational(3)}})},
                 {"t", PLHomeo::translation(Rational(1))}});
  return s;
}

void BM_Sweep(benchmark::State& state) {
  const std::vector<Real> ps{Real(2), Real(4), Real(8), Real(16), Real(32), Real(64)};
  const auto schedule = default_schedule(Rational(1));
  for (auto _ : state) benchmark::DoNotOptimize(sweep(sample_set(), ps, schedule, mode(state)));
}

void BM_Ball(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(ball(sample_set(), 6, kDefaultBallCap, mode(state)));
}

void BM_Verify(benchmark::State& state) {
  VerifyOptions o;
  o.cases = 200;
  o.lemma_cases = 2000;
  o.exec = mode(state);
  for (auto _ : state) benchmark::DoNotOptimize(run_verify(Suite::all, o));
}

}  // namespace

BENCHMARK(BM_Sweep)->ArgName("parallel")->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_Ball)->ArgName("parallel")->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_Verify)->ArgName("parallel")->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond)->UseRealTime();

BENCHMARK_MAIN();
