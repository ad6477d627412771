// Acceptance runner: one PASS/FAIL line per criterion, nonzero exit if any
// criterion fails.

#include <chrono>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

#include "cequiv/export.hpp"
#include "cequiv/hierarchy.hpp"
#include "cequiv/position.hpp"
#include "cequiv/semigroup.hpp"
#include "json.hpp"
#include "support/oracles.hpp"
#include "support/properties.hpp"

using namespace cequiv;
using nlohmann::json;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;

  void require(bool cond, const std::string& what) {
    if (!cond && ok) {
      ok = false;
      detail = what;
    }
  }
};

const json& expected() {
  static const json doc = [] {
    std::ifstream in(oracle::fixture_dir() / "florentine_expected.json");
    return json::parse(in);
  }();
  return doc;
}

std::vector<BooleanRelation> generators_for(const json& entry) {
  std::vector<std::string> cutoffs = entry["cutoffs"];
  return oracle::with_attributes(cutoffs);
}

std::string read_file(const std::filesystem::path& p) {
  std::ifstream in(p);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

Outcome table_reproduction() {
  Outcome o;
  const auto reference =
      relation_from_csv(read_file(oracle::fixture_dir() / expected()["cph_k5"].get<std::string>()));
  const auto h = cumulated_hierarchy(build_relation_box(oracle::business_marriage(), 5));
  const auto& actors = *h.cells.actors();
  o.require(reference.size() == actors.size(), "reference table has the wrong size");
  std::size_t mismatches = 0;
  for (std::size_t i = 0; i < reference.size() && o.ok; ++i)
    for (std::size_t j = 0; j < reference.size(); ++j) {
      const auto a = actors.index_of(reference.actors()->label(i));
      const auto b = actors.index_of(reference.actors()->label(j));
      if (reference.get(i, j) != h.cells.get(a, b)) ++mismatches;
    }
  o.require(mismatches == 0, std::to_string(mismatches) + " cells differ");
  o.detail = o.ok ? "16x16, 0 cells differ" : o.detail;
  return o;
}

Outcome universal_regime() {
  Outcome o;
  const auto& ds = oracle::florentine();
  const auto isolate = ds.actors->index_of(expected()["isolate"].get<std::string>());
  for (int k : expected()["universal_lengths"]) {
    const auto h = cumulated_hierarchy(build_relation_box(oracle::business_marriage(), k));
    for (std::size_t i = 0; i < 16; ++i)
      for (std::size_t j = 0; j < 16; ++j) {
        const bool want = (i == isolate || j == isolate) ? i == j : true;
        o.require(h.cells.get(i, j) == want, "k=" + std::to_string(k) + " cell (" +
                                                 ds.actors->label(i) + "," +
                                                 ds.actors->label(j) + ")");
      }
  }
  if (o.ok) o.detail = "k=1..4 all-ones on the component, isolate reflexive only";
  return o;
}

Outcome semigroup_order() {
  Outcome o;
  const auto& pinned = expected()["semigroup"];
  const std::size_t want = pinned["order"];
  SemigroupOptions opts;
  opts.adjoin_identity = pinned["adjoin_identity"];
  const auto s = generate_semigroup(oracle::business_marriage(), opts);
  if (s.order() != want) {
    opts.adjoin_identity = !opts.adjoin_identity;
    const auto other = generate_semigroup(oracle::business_marriage(), opts);
    o.require(false, "order " + std::to_string(s.order()) + " in the pinned mode, " +
                         std::to_string(other.order()) +
                         " in the other; check the tie data provenance");
    return o;
  }
  opts.adjoin_identity = !opts.adjoin_identity;
  const auto other = generate_semigroup(oracle::business_marriage(), opts);
  o.require(other.order() == pinned["order_with_identity"].get<std::size_t>(),
            "monoid mode order " + std::to_string(other.order()));
  if (o.ok) {
    o.detail = "order " + std::to_string(want) + " without identity, " +
               std::to_string(other.order()) + " with";
  }
  return o;
}

Outcome level_counts() {
  Outcome o;
  std::ostringstream got;
  for (const auto& entry : expected()["level_counts"]) {
    const int k = entry["k"];
    const std::size_t want = entry["levels"];
    const auto h = cumulated_hierarchy(build_relation_box(generators_for(entry), k));
    const auto levels = hierarchy_levels(h);
    std::string name = "B+M";
    for (const auto& a : entry["attributes"]) name += "+" + a.get<std::string>();
    got << name << "@" << k << "=" << levels.level_count() << " ";
    o.require(levels.level_count() == want, name + " at k=" + std::to_string(k) + ": " +
                                                std::to_string(levels.level_count()) +
                                                " levels, expected " + std::to_string(want));
  }
  if (o.ok) o.detail = got.str();
  return o;
}

Outcome wealth_blockmodel() {
  Outcome o;
  const auto& ref = expected()["wealth_blockmodel"];
  const auto gens = oracle::with_attributes({"wealth:40"});
  const auto h = cumulated_hierarchy(build_relation_box(gens, 5));
  const auto cp = containment_class_partition(h, ContainmentMode::level);
  BlockmodelOptions opts;
  opts.excluded_classes = isolated_classes(cp.partition, gens);
  const auto sys = blockmodel(gens, cp.partition, opts);

  const auto& actors = *cp.partition.actors();
  o.require(sys.reported_classes.size() == ref["classes"].size(), "wrong number of classes");
  for (std::size_t c = 0; c < sys.reported_classes.size() && o.ok; ++c) {
    std::vector<std::string> members;
    for (auto a : cp.partition.members(sys.reported_classes[c])) members.push_back(actors.label(a));
    o.require(members == ref["classes"][c].get<std::vector<std::string>>(),
              "class " + std::to_string(c + 1) + " membership differs");
  }
  const std::vector<std::string> names{"business", "marriage", "wealth"};
  for (std::size_t g = 0; g < names.size() && o.ok; ++g) {
    const auto& want = ref[names[g]];
    for (std::size_t a = 0; a < 3; ++a)
      for (std::size_t b = 0; b < 3; ++b)
        o.require(int(sys.reduced[g].get(a, b)) == want[a][b].get<int>(),
                  names[g] + " reduced matrix differs");
  }
  if (o.ok) o.detail = "3 classes; B, M, W reduced matrices match";
  return o;
}

Outcome micro_example() {
  Outcome o;
  const auto actors = make_actor_set({"1", "2", "3"});
  const std::vector<BooleanRelation> gens{
      BooleanRelation::from_rows(actors, {{0, 1, 1}, {1, 0, 1}, {1, 1, 0}}, "C"),
      BooleanRelation::from_rows(actors, {{0, 0, 0}, {0, 0, 0}, {1, 1, 0}}, "F"),
      attribute_to_diagonal(AttributeVector(actors, {true, true, false}, "A"))};
  const auto p = structural_equivalence_partition(gens);
  o.require(p.classes() == std::vector<std::vector<std::size_t>>{{0, 1}, {2}},
            "partition is not {1,2},{3}");
  const auto sys = blockmodel(gens, p);
  const auto two = sys.reduced.at(0).actors();
  o.require(sys.reduced[0] == BooleanRelation::from_rows(two, {{1, 1}, {1, 0}}), "reduced C");
  o.require(sys.reduced[1] == BooleanRelation::from_rows(two, {{0, 0}, {1, 0}}), "reduced F");
  o.require(sys.reduced[2] == BooleanRelation::from_rows(two, {{1, 0}, {0, 0}}), "reduced A");
  o.require(!includes(gens[2], gens[0]), "A is included in C before reduction");
  o.require(includes(sys.reduced[2], sys.reduced[0]), "A is not included in C after reduction");
  if (o.ok) o.detail = "classes {1,2},{3}; includes(A,C) false -> true";
  return o;
}

Outcome property_suites() {
  Outcome o;
  const auto start = std::chrono::steady_clock::now();
  const std::pair<const char*, std::function<properties::Report()>> suites[] = {
      {"composition", [] { return properties::composition(1000); }},
      {"relation box", [] { return properties::relation_box(); }},
      {"person hierarchy", [] { return properties::person_hierarchy(); }},
      {"transitive reduction", [] { return properties::transitive_reduction(500); }},
  };
  std::ostringstream summary;
  for (const auto& [name, suite] : suites) {
    const auto r = suite();
    summary << name << " " << r.cases << " cases; ";
    o.require(r.ok(), std::string(name) + ": " + std::to_string(r.failures) + " failures, first: " +
                          r.first_failure);
  }
  const double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  o.require(secs < 30.0, "property suites took " + std::to_string(secs) + " s");
  if (o.ok) o.detail = summary.str();
  return o;
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* name;
    std::function<Outcome()> check;
    double limit_seconds;
  };
  const Criterion criteria[] = {
      {1, "cumulated hierarchy at k=5 matches the reference table", table_reproduction, 1.0},
      {2, "cumulated hierarchy is universal on the component for k=1..4", universal_regime, 0},
      {3, "semigroup of Business and Marriage has order 81", semigroup_order, 0},
      {4, "level counts with attributes", level_counts, 0},
      {5, "Wealth positional system reduced matrices", wealth_blockmodel, 0},
      {6, "three-actor example partition and reduction", micro_example, 0},
      {7, "property suites", property_suites, 30.0},
  };

  int failed = 0;
  for (const auto& c : criteria) {
    Outcome o;
    const auto start = std::chrono::steady_clock::now();
    try {
      o = c.check();
    } catch (const std::exception& e) {
      o.ok = false;
      o.detail = std::string("exception: ") + e.what();
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (o.ok && c.limit_seconds > 0 && secs >= c.limit_seconds) {
      o.ok = false;
      o.detail = "took " + std::to_string(secs) + " s, limit " + std::to_string(c.limit_seconds);
    }
    failed += o.ok ? 0 : 1;
    std::printf("%s  criterion %d: %s (%.3f s) -- %s\n", o.ok ? "PASS" : "FAIL", c.id, c.name,
                secs, o.detail.c_str());
  }
  std::printf("%d of %zu criteria passed\n", int(std::size(criteria)) - failed, std::size(criteria));
  return failed == 0 ? 0 : 1;
}
