// Serial reference against the OpenMP kernels: Monte Carlo blocks and the
// all-pairs schedule check.

#include <benchmark/benchmark.h>
#include <omp.h>

#include "grand/codes.hpp"
#include "grand/sim.hpp"
#include "grand/verify.hpp"

namespace {

grand::ChannelConfig channel(const grand::LinearCode& code) {
  grand::ChannelConfig ch;
  ch.ebn0_db = 5.0;
  ch.rate = code.rate();
  ch.seed = 1;
  ch.stream_id = grand::noise_stream(ch.ebn0_db);
  return ch;
}

const std::vector<grand::ErrorPattern>& schedule() {
  static const auto s = grand::make_sequence(grand::ScheduleKind::ilwo, 127, 1000);
  return s;
}

void BM_RunPointSerial(benchmark::State& state) {
  grand::BchCode bch;
  const auto blocks = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) {
    auto r = grand::run_point_serial(bch, schedule(), {}, channel(bch), SIZE_MAX, blocks);
    benchmark::DoNotOptimize(r.block_errors);
  }
  state.SetItemsProcessed(state.iterations() * blocks);
}

void BM_RunPointParallel(benchmark::State& state) {
  grand::BchCode bch;
  const auto blocks = static_cast<std::size_t>(state.range(0));
  const int workers = static_cast<int>(state.range(1));
  for (auto _ : state) {
    auto r = grand::run_point(bch, schedule(), {}, channel(bch), SIZE_MAX, blocks, workers);
    benchmark::DoNotOptimize(r.block_errors);
  }
  state.SetItemsProcessed(state.iterations() * blocks);
}

void BM_VerifySerial(benchmark::State& state) {
  auto seq = grand::make_sequence(grand::ScheduleKind::lwo, 128, state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(grand::verify_schedule_serial(seq));
}

void BM_VerifyParallel(benchmark::State& state) {
  auto seq = grand::make_sequence(grand::ScheduleKind::lwo, 128, state.range(0));
  for (auto _ : state)
    benchmark::DoNotOptimize(grand::verify_schedule(seq, static_cast<int>(state.range(1))));
}

const int kMaxThreads = omp_get_max_threads();

}  // namespace

BENCHMARK(BM_RunPointSerial)->Arg(20000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_RunPointParallel)
    ->ArgsProduct({{20000}, benchmark::CreateRange(1, std::max(1, kMaxThreads), 2)})
    ->Unit(benchmark::kMillisecond);
BENCHMARK(BM_VerifySerial)->Arg(5000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_VerifyParallel)
    ->ArgsProduct({{5000}, benchmark::CreateRange(1, std::max(1, kMaxThreads), 2)})
    ->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
