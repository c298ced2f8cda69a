#include <benchmark/benchmark.h>

#include "sdw/instanton.hpp"
#include "sdw/modular.hpp"
#include "sdw/seeley.hpp"
#include "sdw/theta.hpp"

using namespace sdw;

namespace {

const Characteristics kSeed{Rational(0), Rational(1, 3)};

void BM_ThetaEval(benchmark::State& state) {
  ThetaSpec spec{{Rational(1, 6), Rational(5, 6)}, static_cast<int>(state.range(0)), 1};
  for (auto _ : state) benchmark::DoNotOptimize(theta_eval(spec, Complex(1.2, 0.1)));
}
BENCHMARK(BM_ThetaEval)->Arg(0)->Arg(4);

void BM_ThetaSeries(benchmark::State& state) {
  ThetaSpec spec{{Rational(1, 6), Rational(5, 6)}, 2, 1};
  for (auto _ : state) benchmark::DoNotOptimize(theta_series(spec, Rational(state.range(0))));
}
BENCHMARK(BM_ThetaSeries)->Arg(6)->Arg(12);

void BM_SeriesMul(benchmark::State& state) {
  PuiseuxSeries e4 = eisenstein_series(4, state.range(0));
  PuiseuxSeries e6 = eisenstein_series(6, state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(e4 * e6);
}
BENCHMARK(BM_SeriesMul)->Arg(16)->Arg(64);

void BM_JetFrame(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(frame_two_param_jet({Rational(1, 6), Rational(5, 6)}, Complex(1.2, 0.1)));
}
BENCHMARK(BM_JetFrame);

void BM_CoefficientValue(benchmark::State& state) {
  JetFrame f = frame_two_param_jet({Rational(1, 6), Rational(5, 6)}, Complex(1.2, 0.1));
  int order = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(coefficient_value(f, order));
}
BENCHMARK(BM_CoefficientValue)->Arg(0)->Arg(2)->Arg(4);

void BM_Orbit(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(orbit({Rational(1, 12), Rational(5, 7)}));
}
BENCHMARK(BM_Orbit);

void BM_OrbitSumSeries(benchmark::State& state) {
  Orbit o = orbit(kSeed);
  int order = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(orbit_sum_series(o.points, order, Rational(4)));
}
BENCHMARK(BM_OrbitSumSeries)->Arg(0)->Arg(4)->Unit(benchmark::kMillisecond);

void BM_Identify(benchmark::State& state) {
  Orbit o = orbit(kSeed);
  PuiseuxSeries s = orbit_sum_series(o.points, 0, Rational(6));
  for (auto _ : state) benchmark::DoNotOptimize(identify(s, o));
}
BENCHMARK(BM_Identify)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
