#include <benchmark/benchmark.h>

#include "buchi/complement.hpp"
#include "buchi/format.hpp"
#include "buchi/run_dag.hpp"
#include "buchi/verify.hpp"

using namespace buchi;

namespace {

const nbw& running_example() {
  static const nbw a = read_nbw_file(BUCHI_DATA_DIR "/running_example.nbw");
  return a;
}

nbw random_case(std::size_t states, std::uint64_t seed) {
  return random_nbw({states, 2, 1.5, 0.5, 0, seed});
}

void complement_running_example(benchmark::State& state) {
  method m = all_methods[static_cast<std::size_t>(state.range(0))];
  state.SetLabel(std::string(method_name(m)));
  std::size_t states = 0;
  for (auto _ : state) {
    nbw c = complement(running_example(), m);
    states = c.num_states();
    benchmark::DoNotOptimize(states);
  }
  state.counters["states"] = static_cast<double>(states);
}
BENCHMARK(complement_running_example)->DenseRange(0, 5)->Unit(benchmark::kMillisecond);

void complement_random(benchmark::State& state) {
  method m = all_methods[static_cast<std::size_t>(state.range(0))];
  std::size_t n = static_cast<std::size_t>(state.range(1));
  state.SetLabel(std::string(method_name(m)));
  std::vector<nbw> corpus;
  for (std::uint64_t seed = 0; seed < 10; ++seed) corpus.push_back(random_case(n, seed));
  double total = 0;
  for (auto _ : state) {
    total = 0;
    for (const nbw& a : corpus) total += static_cast<double>(complement(a, m).num_states());
  }
  state.counters["mean_states"] = total / static_cast<double>(corpus.size());
}
BENCHMARK(complement_random)
    ->ArgsProduct({{2, 3, 4, 5}, {2, 3, 4}})
    ->Unit(benchmark::kMillisecond);

void on_the_fly_membership(benchmark::State& state) {
  method m = all_methods[static_cast<std::size_t>(state.range(0))];
  state.SetLabel(std::string(method_name(m)));
  auto words = enumerate_lassos(2, 2, 3);
  for (auto _ : state)
    for (const auto& w : words) benchmark::DoNotOptimize(complement_accepts(running_example(), m, w));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(words.size()));
}
BENCHMARK(on_the_fly_membership)->DenseRange(0, 5)->Unit(benchmark::kMillisecond);

void automaton_membership(benchmark::State& state) {
  nbw a = random_case(static_cast<std::size_t>(state.range(0)), 7);
  auto words = enumerate_lassos(2, 3, 4);
  for (auto _ : state)
    for (const auto& w : words) benchmark::DoNotOptimize(member(a, w));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(words.size()));
}
BENCHMARK(automaton_membership)->RangeMultiplier(2)->Range(4, 32);

void prospective_ranks(benchmark::State& state) {
  const nbw& a = running_example();
  lasso_word w(parse_word(a, "b"), parse_word(a, "ab"));
  for (auto _ : state) {
    periodic_dag g(a, w);
    benchmark::DoNotOptimize(prospective_ranking(g));
  }
}
BENCHMARK(prospective_ranks);

}  // namespace

BENCHMARK_MAIN();
