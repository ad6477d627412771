#include <benchmark/benchmark.h>

#include <random>

#include "cequiv/dataset.hpp"
#include "cequiv/hierarchy.hpp"
#include "cequiv/relation_box.hpp"
#include "cequiv/semigroup.hpp"

using namespace cequiv;

namespace {

BooleanRelation random_relation(const ActorSetPtr& actors, double density, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution bit(density);
  BooleanRelation r(actors);
  for (std::size_t i = 0; i < actors->size(); ++i)
    for (std::size_t j = 0; j < actors->size(); ++j)
      if (bit(rng)) r.set(i, j);
  return r;
}

ActorSetPtr actors_of_size(std::size_t n) {
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < n; ++i) labels.push_back("a" + std::to_string(i));
  return make_actor_set(labels);
}

std::vector<BooleanRelation> florentine() {
  static const Dataset ds = load_dataset(CEQUIV_BENCH_DATASET);
  return {ds.tie("business").relation, ds.tie("marriage").relation};
}

void BM_Compose(benchmark::State& state) {
  const auto actors = actors_of_size(static_cast<std::size_t>(state.range(0)));
  const auto a = random_relation(actors, 0.1, 1);
  const auto b = random_relation(actors, 0.1, 2);
  for (auto _ : state) benchmark::DoNotOptimize(compose(a, b));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_Compose)->RangeMultiplier(2)->Range(16, 1024)->Complexity();

void BM_RelationBox(benchmark::State& state) {
  const auto gens = florentine();
  const int k = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(build_relation_box(gens, k));
}
BENCHMARK(BM_RelationBox)->DenseRange(1, 8);

void BM_CumulatedHierarchy(benchmark::State& state) {
  const auto box = build_relation_box(florentine(), static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(cumulated_hierarchy(box));
  state.counters["width"] = static_cast<double>(box.width());
}
BENCHMARK(BM_CumulatedHierarchy)->DenseRange(1, 8);

void BM_Semigroup(benchmark::State& state) {
  const auto gens = florentine();
  for (auto _ : state) benchmark::DoNotOptimize(generate_semigroup(gens));
}
BENCHMARK(BM_Semigroup);

void BM_SemigroupRandom(benchmark::State& state) {
  const auto actors = actors_of_size(static_cast<std::size_t>(state.range(0)));
  const std::vector<BooleanRelation> gens{random_relation(actors, 0.15, 3),
                                          random_relation(actors, 0.15, 4)};
  std::size_t order = 0;
  for (auto _ : state) {
    auto s = generate_semigroup(gens);
    order = s.order();
    benchmark::DoNotOptimize(s);
  }
  state.counters["order"] = static_cast<double>(order);
}
BENCHMARK(BM_SemigroupRandom)->Arg(8)->Arg(16)->Arg(32);

}  // namespace
BENCHMARK_MAIN();
