#include <benchmark/benchmark.h>

#include <fstream>
#include <sstream>

#include "qcalc/system_def.hpp"

using namespace qcalc;

namespace {

void BM_ParseSystem(benchmark::State& state) {
  std::ifstream in(QCALC_SYSTEMS_DIR "/physics.qc");
  std::stringstream ss;
  ss << in.rdbuf();
  std::string text = ss.str();
  for (auto _ : state) benchmark::DoNotOptimize(parse_system(text));
}
BENCHMARK(BM_ParseSystem);

void BM_ParseQuantity(benchmark::State& state) {
  SystemDef sys = load_system(QCALC_SYSTEMS_DIR "/mechanics.qc");
  const char* text = "(70 kg g_n)(3 m) / (1/2 h)^2 + 5 W / s";
  for (auto _ : state) benchmark::DoNotOptimize(parse_quantity(text, sys));
}
BENCHMARK(BM_ParseQuantity);

}  // namespace

BENCHMARK_MAIN();
