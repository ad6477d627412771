#include "cequiv/position.hpp"

#include <random>

#include "cequiv/hierarchy.hpp"
#include "doctest.h"
#include "support/oracles.hpp"

using namespace cequiv;

namespace {

struct MicroExample {
  ActorSetPtr actors = oracle::numbered_actors(3);
  BooleanRelation c = BooleanRelation::from_rows(actors, {{0, 1, 1}, {1, 0, 1}, {1, 1, 0}}, "C");
  BooleanRelation f = BooleanRelation::from_rows(actors, {{0, 0, 0}, {0, 0, 0}, {1, 1, 0}}, "F");
  BooleanRelation a = BooleanRelation::from_rows(actors, {{1, 0, 0}, {0, 1, 0}, {0, 0, 0}}, "A");
  std::vector<BooleanRelation> gens{c, f, a};
};

bool swap_invariant(const oracle::Grid& g, std::size_t x, std::size_t y) {
  const std::size_t n = g.size();
  auto p = [&](std::size_t v) { return v == x ? y : v == y ? x : v; };
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (g[i][j] != g[p(i)][p(j)]) return false;
  return true;
}

}  // namespace

TEST_SUITE_BEGIN("position");

TEST_CASE("partition validation") {
  const auto actors = oracle::numbered_actors(3);
  CHECK_THROWS_AS(Partition(actors, {0, 1}), InputError);
  CHECK_THROWS_AS(Partition(actors, {0, 2, 2}), InputError);
  CHECK_THROWS_AS(Partition(actors, {0, 1, 1}, {"x", "x"}), InputError);
  CHECK_THROWS_AS(Partition::from_classes(actors, {{0, 1}, {1, 2}}), InputError);
  CHECK_THROWS_AS(Partition::from_classes(actors, {{0}}), InputError);

  const Partition p(actors, {1, 0, 1});
  CHECK(p.class_count() == 2);
  CHECK(p.class_labels() == std::vector<std::string>{"P1", "P2"});
  CHECK(p.members(1) == std::vector<std::size_t>{0, 2});
  CHECK_THROWS_AS(p.members(2), InputError);
  CHECK(p.same_grouping(Partition(actors, {0, 1, 0})));
  CHECK_FALSE(p.same_grouping(Partition::discrete(actors)));
  CHECK(Partition::discrete(actors).class_labels()[2] == "3");
}

TEST_CASE("structural equivalence of the micro example") {
  const MicroExample m;
  const auto p = structural_equivalence_partition(m.gens);
  CHECK(p.classes() == std::vector<std::vector<std::size_t>>{{0, 1}, {2}});
}

TEST_CASE("structural equivalence matches swap automorphisms") {
  std::mt19937_64 rng(17);
  std::uniform_int_distribution<std::size_t> size(1, 7);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t n = size(rng);
    const auto actors = oracle::numbered_actors(n);
    // Sparse, and sometimes with copied rows/columns, so ties show up.
    std::vector<oracle::Grid> grids{oracle::random_grid(rng, n, 0.3),
                                    oracle::random_grid(rng, n, 0.1)};
    if (n >= 3 && trial % 2 == 0) {
      for (auto& g : grids) {
        for (std::size_t k = 0; k < n; ++k) {
          g[1][k] = g[0][k];
          g[k][1] = g[k][0];
        }
        g[0][1] = g[1][0] = g[0][0] = g[1][1];
      }
    }
    std::vector<BooleanRelation> gens;
    for (const auto& g : grids) gens.push_back(oracle::relation(actors, g));
    const auto p = structural_equivalence_partition(gens);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        const bool expected = swap_invariant(grids[0], i, j) && swap_invariant(grids[1], i, j);
        CHECK((p.class_of(i) == p.class_of(j)) == expected);
      }
  }
}

TEST_CASE("micro example blockmodel") {
  const MicroExample m;
  const auto p = structural_equivalence_partition(m.gens);
  const auto sys = blockmodel(m.gens, p);
  const auto& reduced = sys.reduced;
  REQUIRE(reduced.size() == 3);
  const auto two = reduced[0].actors();
  CHECK(reduced[0] == BooleanRelation::from_rows(two, {{1, 1}, {1, 0}}));
  CHECK(reduced[1] == BooleanRelation::from_rows(two, {{0, 0}, {1, 0}}));
  CHECK(reduced[2] == BooleanRelation::from_rows(two, {{1, 0}, {0, 0}}));
  CHECK(reduced[0].label() == "C");

  // The attribute was not contained in the clique, but it is once reduced.
  CHECK_FALSE(includes(m.a, m.c));
  CHECK(includes(reduced[2], reduced[0]));
}

TEST_CASE("zeroblock rule matches brute force") {
  std::mt19937_64 rng(19);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 2 + trial % 7;
    const auto actors = oracle::numbered_actors(n);
    const auto g = oracle::random_grid(rng, n, 0.2);
    std::uniform_int_distribution<std::size_t> pick(0, n - 1);
    // Random partition with contiguous ids.
    std::vector<std::size_t> raw(n);
    for (auto& c : raw) c = pick(rng);
    std::vector<std::size_t> remap(n, n), class_of(n);
    std::size_t next = 0;
    for (std::size_t i = 0; i < n; ++i) {
      if (remap[raw[i]] == n) remap[raw[i]] = next++;
      class_of[i] = remap[raw[i]];
    }
    const Partition p(actors, class_of);
    const std::vector<BooleanRelation> gens{oracle::relation(actors, g)};
    const auto sys = blockmodel(gens, p);
    REQUIRE(sys.reported_classes.size() == p.class_count());
    for (std::size_t a = 0; a < p.class_count(); ++a)
      for (std::size_t b = 0; b < p.class_count(); ++b) {
        int expected = 0;
        for (std::size_t i = 0; i < n; ++i)
          for (std::size_t j = 0; j < n; ++j)
            if (class_of[i] == a && class_of[j] == b && g[i][j]) expected = 1;
        CHECK(int(sys.reduced[0].get(a, b)) == expected);
      }
  }
}

TEST_CASE("isolates and exclusion") {
  const auto gens = oracle::business_marriage();
  const auto& ds = oracle::florentine();
  const auto p = Partition::discrete(ds.actors);
  const auto iso = isolated_classes(p, gens);
  CHECK(iso == std::vector<std::size_t>{ds.actors->index_of("Pucci")});

  BlockmodelOptions opts;
  opts.excluded_classes = iso;
  const auto sys = blockmodel(gens, p, opts);
  CHECK(sys.reduced[0].size() == 15);
  CHECK_FALSE(sys.reduced[0].actors()->find("Pucci").has_value());

  opts.excluded_classes = {99};
  CHECK_THROWS_AS(blockmodel(gens, p, opts), InputError);
}

TEST_CASE("containment partitions of the network") {
  const auto h = cumulated_hierarchy(build_relation_box(oracle::business_marriage(), 5));
  const auto& actors = oracle::florentine().actors;

  SUBCASE("mutual classes") {
    const auto cp = containment_class_partition(h, ContainmentMode::mutual);
    CHECK(cp.partition.class_count() == 4);
    CHECK(cp.partition.class_of(actors->index_of("Medici")) ==
          cp.partition.class_of(actors->index_of("Guadagni")));
    CHECK(cp.partition.class_of(actors->index_of("Ginori")) !=
          cp.partition.class_of(actors->index_of("Strozzi")));
    CHECK(cp.warnings.empty());
  }

  SUBCASE("level classes put Ginori with the bottom") {
    const auto cp = containment_class_partition(h, ContainmentMode::level);
    CHECK(cp.partition.class_count() == 3);
    CHECK(cp.partition.class_of(actors->index_of("Ginori")) ==
          cp.partition.class_of(actors->index_of("Strozzi")));
    CHECK(cp.partition.class_of(actors->index_of("Medici")) == 0);
    CHECK(cp.isolated_classes == std::vector<std::size_t>{2});
    CHECK(cp.warnings.size() == 1);
  }
}

TEST_CASE("attribute splits") {
  const auto& ds = oracle::florentine();
  const auto actors = ds.actors;
  const auto wealth = binarize(ds, parse_cutoff("wealth:40"));
  const Partition whole(actors, std::vector<std::size_t>(16, 0), {"all"});

  const auto split = attribute_split(whole, wealth, 0);
  CHECK(split.class_count() == 2);
  CHECK(split.class_labels() == std::vector<std::string>{"all+W", "all-W"});
  CHECK(split.class_of(actors->index_of("Strozzi")) == 0);
  CHECK(split.class_of(actors->index_of("Pucci")) == 1);

  // Constant on the class: nothing to split.
  const auto again = attribute_split(split, wealth, 0);
  CHECK(again.same_grouping(split));
  CHECK_THROWS_AS(attribute_split(split, wealth, 5), InputError);
}

TEST_SUITE_END();
