#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "areagrowth/complex_core.hpp"
#include "areagrowth/packet_certifier.hpp"
#include "areagrowth/r3_scheduler.hpp"
#include "areagrowth/sublevel_quadrature.hpp"

using namespace areagrowth;

namespace {

std::vector<RectBounds> random_cells(std::size_t n) {
  std::mt19937_64 rng(1);
  std::uniform_real_distribution<double> u(-2.0, 2.0);
  std::vector<RectBounds> cells;
  for (std::size_t i = 0; i < n; ++i) {
    const double x = u(rng), y = u(rng);
    cells.push_back({x, x + 0.01, y, y + 0.01});
  }
  return cells;
}

void BM_EvalF(benchmark::State& state) {
  const auto fam = static_cast<GraphFamily>(state.range(0));
  Complex z(0.3, 0.7);
  for (auto _ : state) {
    benchmark::DoNotOptimize(eval_f(fam, z));
    z += Complex(1e-9, 0.0);
  }
}
BENCHMARK(BM_EvalF)->Arg(0)->Arg(1)->Arg(2);

void BM_BoundAbsF(benchmark::State& state) {
  const auto fam = static_cast<GraphFamily>(state.range(0));
  const auto cells = random_cells(1024);
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(bound_abs_f(fam, cells[i++ & 1023]));
  }
}
BENCHMARK(BM_BoundAbsF)->Arg(0)->Arg(1)->Arg(2);

void BM_BoundAbsFprime(benchmark::State& state) {
  const auto fam = static_cast<GraphFamily>(state.range(0));
  const auto cells = random_cells(1024);
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(bound_abs_fprime(fam, cells[i++ & 1023]));
  }
}
BENCHMARK(BM_BoundAbsFprime)->Arg(0)->Arg(1)->Arg(2);

void BM_GraphAreaSinExp(benchmark::State& state) {
  QuadConfig cfg;
  cfg.max_depth = static_cast<int>(state.range(0));
  cfg.threads = 1;
  for (auto _ : state) {
    benchmark::DoNotOptimize(graph_area({GraphFamily::SinExp, 3.2}, cfg));
  }
}
BENCHMARK(BM_GraphAreaSinExp)->Arg(8)->Arg(10)->Unit(benchmark::kMillisecond);

void BM_GraphAreaExpEstimate(benchmark::State& state) {
  QuadConfig cfg;
  cfg.max_depth = 10;
  cfg.mode = QuadMode::Estimate;
  cfg.threads = 1;
  for (auto _ : state) {
    benchmark::DoNotOptimize(graph_area({GraphFamily::Exp, static_cast<double>(state.range(0))}, cfg));
  }
}
BENCHMARK(BM_GraphAreaExpEstimate)->Arg(4)->Arg(16)->Unit(benchmark::kMillisecond);

void BM_CertifyPacket(benchmark::State& state) {
  const auto p = make_packet(GraphFamily::SinExp, state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(certify_packet(p, CertMethod::IntervalProof));
  }
}
BENCHMARK(BM_CertifyPacket)->Arg(1)->Arg(100);

void BM_BuildSchedule(benchmark::State& state) {
  ScheduleConfig cfg;
  cfg.N = state.range(0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(build_schedule(cfg));
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_BuildSchedule)->Arg(1000)->Arg(100000)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
