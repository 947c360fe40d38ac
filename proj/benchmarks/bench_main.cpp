#include <benchmark/benchmark.h>

#include <algorithm>
#include <fstream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "synergy/core/value_function.hpp"
#include "synergy/empirical/matrices.hpp"
#include "synergy/search/sampling.hpp"
#include "synergy/search/space.hpp"
#include "synergy/search/topk.hpp"
#include "synergy/tcg/card_io.hpp"
#include "synergy/tcg/evaluate.hpp"
#include "synergy/tcg/scan.hpp"

namespace {

using namespace synergy;

std::vector<ElementId> numbered_pool(std::size_t n) {
  std::vector<ElementId> out;
  for (std::size_t i = 0; i < n; ++i) out.emplace_back("e" + std::to_string(1000 + i));
  return out;
}

search::CandidateSpace space_of(std::size_t n, std::size_t lo, std::size_t hi, std::uint32_t cap) {
  search::CandidateSpace space;
  space.pool = numbered_pool(n);
  space.size_min = lo;
  space.size_max = hi;
  space.copy_cap = cap;
  return space;
}

std::shared_ptr<FunctionValueFunction> mixing_vf(const std::vector<ElementId>& pool) {
  return std::make_shared<FunctionValueFunction>(ValueScale::numeric(), pool, [](const SynergySet& s) {
    std::uint64_t h = 1469598103934665603ull;
    for (char c : s.to_string()) h = (h ^ static_cast<unsigned char>(c)) * 1099511628211ull;
    return Value::numeric(static_cast<double>(h % 1024) / 1024.0);
  });
}

std::string read_text(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void BM_CountSets(benchmark::State& state) {
  auto space = space_of(static_cast<std::size_t>(state.range(0)), 2, static_cast<std::size_t>(state.range(1)), 4);
  for (auto _ : state) benchmark::DoNotOptimize(search::count_sets(space));
}
BENCHMARK(BM_CountSets)->Args({100, 5})->Args({1000, 40})->Args({5000, 60});

void BM_Unrank(benchmark::State& state) {
  auto space = space_of(static_cast<std::size_t>(state.range(0)), 2, static_cast<std::size_t>(state.range(1)), 4);
  search::SpaceIndex index(space);
  std::mt19937_64 rng(1);
  for (auto _ : state) benchmark::DoNotOptimize(index.unrank(search::uniform_below(index.size(), rng)));
}
BENCHMARK(BM_Unrank)->Args({100, 5})->Args({1000, 40});

void BM_TopKExhaustive(benchmark::State& state) {
  auto space = space_of(40, 2, 3, 1);
  auto vf = mixing_vf(space.pool);
  search::SearchOptions options;
  options.workers = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        search::top_k_synergy(space, *vf, BaselineKind::Sum, 20, search::Exhaustive{}, options));
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(search::count_sets(space)));
}
BENCHMARK(BM_TopKExhaustive)->Arg(1)->Arg(4)->UseRealTime();

void BM_TopKSample(benchmark::State& state) {
  auto space = space_of(1000, 2, 8, 4);
  auto vf = mixing_vf(space.pool);
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        search::top_k_synergy(space, *vf, BaselineKind::Sum, 20, search::UniformSample{10'000, 7}));
  }
  state.SetItemsProcessed(state.iterations() * 10'000);
}
BENCHMARK(BM_TopKSample);

void BM_EvaluateCombo(benchmark::State& state) {
  auto cards = tcg::parse_cards(read_text(SYNERGY_FIXTURE_DIR "/cards.json"));
  auto fresh = tcg::parse_cards(read_text(SYNERGY_FIXTURE_DIR "/newset.json"));
  cards.insert(cards.end(), fresh.begin(), fresh.end());
  tcg::CardPool pool(cards);
  SynergySet combo{"pearl-lord", "merfolk-scout", "spreading-seas"};
  for (auto _ : state) benchmark::DoNotOptimize(tcg::evaluate_combo(pool, combo));
}
BENCHMARK(BM_EvaluateCombo);

void BM_PairMatrix(benchmark::State& state) {
  const auto matches = static_cast<std::size_t>(state.range(0));
  auto pool = numbered_pool(40);
  std::mt19937_64 rng(11);
  std::vector<empirical::MatchRecord> records;
  for (std::size_t i = 0; i < matches; ++i) {
    auto shuffled = pool;
    std::shuffle(shuffled.begin(), shuffled.end(), rng);
    empirical::MatchRecord r;
    r.match_id = std::to_string(i);
    r.sides[0].assign(shuffled.begin(), shuffled.begin() + 5);
    r.sides[1].assign(shuffled.begin() + 5, shuffled.begin() + 10);
    r.winner = static_cast<int>(rng() & 1);
    records.push_back(std::move(r));
  }
  empirical::MatchLog log(std::move(records));
  for (auto _ : state) benchmark::DoNotOptimize(empirical::pair_synergy_matrix(log));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(matches));
}
BENCHMARK(BM_PairMatrix)->Arg(10'000)->Arg(100'000)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
