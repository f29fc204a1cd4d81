// Serial reference kernels against their OpenMP counterparts.
#include <benchmark/benchmark.h>

#include <fstream>
#include <sstream>

#include "letterstat/letterstat.hpp"

namespace {

using namespace letterstat;

const LetterSequence& corpus() {
  static const LetterSequence seq = [] {
    std::ifstream in(std::string(LETTERSTAT_DATA_DIR) + "/moby_dick.txt", std::ios::binary);
    std::ostringstream buf;
    buf << in.rdbuf();
    return normalize(buf.str(), builtin_alphabet("en"));
  }();
  return seq;
}

void BM_CountLettersSerial(benchmark::State& state) {
  const auto text = slice(corpus(), 0, static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(reference::count_letters(text));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_CountLettersParallel(benchmark::State& state) {
  const auto text = slice(corpus(), 0, static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(count_letters(text));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_CountDigramsSerial(benchmark::State& state) {
  const auto text = slice(corpus(), 0, static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(reference::count_digrams(text));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_CountDigramsParallel(benchmark::State& state) {
  const auto text = slice(corpus(), 0, static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(count_digrams(text));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

void solve(benchmark::State& state, bool parallel) {
  static const auto model = LanguageModel::train(slice(corpus(), 0, 200000));
  const auto plain = slice(corpus(), 250000, 2000);
  const auto cipher = encrypt(plain, SubstitutionKey::random(builtin_alphabet("en"), 1));
  SolverOptions opts;
  opts.restarts = static_cast<std::size_t>(state.range(0));
  opts.parallel = parallel;
  for (auto _ : state) benchmark::DoNotOptimize(hill_climb_solve(cipher, model, opts));
}

void BM_SolveSerial(benchmark::State& state) { solve(state, false); }
void BM_SolveParallel(benchmark::State& state) { solve(state, true); }

BENCHMARK(BM_CountLettersSerial)->Arg(1 << 12)->Arg(1 << 16)->Arg(1 << 18);
BENCHMARK(BM_CountLettersParallel)->Arg(1 << 12)->Arg(1 << 16)->Arg(1 << 18);
BENCHMARK(BM_CountDigramsSerial)->Arg(1 << 12)->Arg(1 << 16)->Arg(1 << 18);
BENCHMARK(BM_CountDigramsParallel)->Arg(1 << 12)->Arg(1 << 16)->Arg(1 << 18);
BENCHMARK(BM_SolveSerial)->Arg(4)->Arg(20)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SolveParallel)->Arg(4)->Arg(20)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
