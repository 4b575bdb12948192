// Serial reference vs OpenMP kernels. Worker count is the benchmark argument.
#include <benchmark/benchmark.h>

#include "ratcomp/apclassify.hpp"
#include "ratcomp/parallel.hpp"

using namespace ratcomp;

namespace {

std::vector<CaseSpec> n4_cases() {
  std::vector<CaseSpec> out;
  for (const auto& r : regimes(4)) {
    auto cs = enum_cases(4, r.t, r.ksum_zero, r.sinf);
    out.insert(out.end(), cs.begin(), cs.end());
  }
  return out;
}

void BM_classify_n3_serial(benchmark::State& st) {
  for (auto _ : st) benchmark::DoNotOptimize(classify_all_serial(3).entries.size());
}

void BM_classify_n3_parallel(benchmark::State& st) {
  SweepOptions opt;
  opt.workers = static_cast<int>(st.range(0));
  for (auto _ : st) benchmark::DoNotOptimize(classify_all(3, opt).entries.size());
}

void BM_classify_n4_calibrated_serial(benchmark::State& st) {
  SweepOptions opt;
  opt.cfg = EnumConfig::calibrated();
  for (auto _ : st) benchmark::DoNotOptimize(classify_all_serial(4, opt).entries.size());
}

void BM_classify_n4_calibrated_parallel(benchmark::State& st) {
  SweepOptions opt;
  opt.cfg = EnumConfig::calibrated();
  opt.workers = static_cast<int>(st.range(0));
  for (auto _ : st) benchmark::DoNotOptimize(classify_all(4, opt).entries.size());
}

void BM_systems_n4_serial(benchmark::State& st) {
  auto cases = n4_cases();
  for (auto _ : st) benchmark::DoNotOptimize(build_all_systems_serial(cases).size());
}

void BM_systems_n4_parallel(benchmark::State& st) {
  auto cases = n4_cases();
  for (auto _ : st) benchmark::DoNotOptimize(build_all_systems(cases, static_cast<int>(st.range(0))).size());
}

}  // namespace

BENCHMARK(BM_classify_n3_serial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_classify_n3_parallel)->Arg(1)->Arg(2)->Arg(4)->Arg(8)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_classify_n4_calibrated_serial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_classify_n4_calibrated_parallel)->Arg(1)->Arg(2)->Arg(4)->Arg(8)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_systems_n4_serial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_systems_n4_parallel)->Arg(1)->Arg(2)->Arg(4)->Arg(8)->Unit(benchmark::kMillisecond)->UseRealTime();

BENCHMARK_MAIN();
