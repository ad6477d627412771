#include "properties.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <set>
#include <sstream>

#include "cequiv/hierarchy.hpp"
#include "cequiv/order.hpp"
#include "cequiv/relation_box.hpp"
#include "oracles.hpp"

namespace properties {

using cequiv::BooleanRelation;
using oracle::Grid;

Report& Report::operator+=(const Report& other) {
  if (failures == 0 && other.failures != 0) first_failure = other.first_failure;
  cases += other.cases;
  failures += other.failures;
  return *this;
}

namespace {

std::uint32_t encode(const BooleanRelation& r) {
  std::uint32_t code = 0;
  const std::size_t n = r.size();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (r.get(i, j)) code |= 1u << (i * n + j);
  return code;
}

void exhaustive_composition(std::size_t n, Report& report) {
  const auto actors = oracle::numbered_actors(n);
  const std::uint32_t count = 1u << (n * n);
  std::vector<BooleanRelation> rel;
  std::vector<Grid> grids;
  for (std::uint32_t c = 0; c < count; ++c) {
    grids.push_back(oracle::decode(c, n));
    rel.push_back(oracle::relation(actors, grids.back()));
  }

  std::vector<std::uint32_t> table(std::size_t(count) * count);
  for (std::uint32_t a = 0; a < count; ++a)
    for (std::uint32_t b = 0; b < count; ++b) {
      const BooleanRelation ab = cequiv::compose(rel[a], rel[b]);
      ++report.cases;
      if (oracle::grid(ab) != oracle::product(grids[a], grids[b])) {
        report.fail("compose != oracle for n=" + std::to_string(n) + " codes " +
                    std::to_string(a) + "," + std::to_string(b));
      }
      table[std::size_t(a) * count + b] = encode(ab);
    }

  for (std::uint32_t a = 0; a < count; ++a)
    for (std::uint32_t b = 0; b < count; ++b) {
      const std::uint32_t ab = table[std::size_t(a) * count + b];
      for (std::uint32_t c = 0; c < count; ++c) {
        ++report.cases;
        const std::uint32_t left = table[std::size_t(ab) * count + c];
        const std::uint32_t right = table[std::size_t(a) * count + table[std::size_t(b) * count + c]];
        if (left != right) {
          report.fail("associativity fails for n=" + std::to_string(n) + " codes " +
                      std::to_string(a) + "," + std::to_string(b) + "," + std::to_string(c));
        }
      }
    }
}

void random_composition(std::mt19937_64& rng, std::size_t n, Report& report) {
  std::uniform_real_distribution<double> density(0.05, 0.6);
  const auto actors = oracle::numbered_actors(n);
  const Grid ga = oracle::random_grid(rng, n, density(rng));
  const Grid gb = oracle::random_grid(rng, n, density(rng));
  const Grid gc = oracle::random_grid(rng, n, density(rng));
  const auto a = oracle::relation(actors, ga);
  const auto b = oracle::relation(actors, gb);
  const auto c = oracle::relation(actors, gc);
  ++report.cases;
  const std::string tag = " (n=" + std::to_string(n) + ")";
  if (oracle::grid(cequiv::compose(a, b)) != oracle::product(ga, gb))
    report.fail("compose != oracle" + tag);
  if (!(cequiv::compose(cequiv::compose(a, b), c) == cequiv::compose(a, cequiv::compose(b, c))))
    report.fail("associativity" + tag);
}

std::string describe(const std::vector<std::size_t>& word) {
  std::ostringstream out;
  for (auto l : word) out << l << ' ';
  return out.str();
}

void check_box(const std::vector<BooleanRelation>& generators, const cequiv::BoxOptions& options,
               int k, const std::string& name, Report& report) {
  const auto box = cequiv::build_relation_box(generators, k, options);
  const std::string tag = " [" + name + ", k=" + std::to_string(k) + "]";

  // The alphabet is the generators, then transposes of the asymmetric ones.
  std::vector<Grid> letters;
  for (const auto& g : generators) letters.push_back(oracle::grid(g));
  if (options.include_transposes) {
    for (const auto& g : generators) {
      Grid t = oracle::grid(g);
      for (std::size_t i = 0; i < t.size(); ++i)
        for (std::size_t j = 0; j < t.size(); ++j) t[i][j] = oracle::grid(g)[j][i];
      if (t != oracle::grid(g)) letters.push_back(t);
    }
  }
  ++report.cases;
  if (box.alphabet().size() != letters.size()) {
    report.fail("alphabet size" + tag);
    return;
  }
  for (std::size_t a = 0; a < letters.size(); ++a)
    if (oracle::grid(box.alphabet()[a]) != letters[a]) report.fail("alphabet letter" + tag);

  std::set<Grid> in_box;
  for (const auto& s : box.strings()) {
    ++report.cases;
    const Grid g = oracle::grid(s.relation);
    if (!in_box.insert(g).second) report.fail("duplicate string " + box.render(s.word) + tag);
    if (s.word.length() < 1 || s.word.length() > std::size_t(k))
      report.fail("word length out of range " + box.render(s.word) + tag);
    if (oracle::evaluate(s.word.letters, letters) != g)
      report.fail("word does not evaluate to its relation " + box.render(s.word) + tag);
    for (const auto& w : s.all_words)
      if (oracle::evaluate(w.letters, letters) != g)
        report.fail("listed equal word differs " + box.render(w) + tag);
  }

  std::set<Grid> reachable;
  std::vector<std::size_t> shortest(box.width(), 0);
  for (const auto& w : oracle::all_words(letters.size(), k)) {
    ++report.cases;
    const Grid g = oracle::evaluate(w, letters);
    reachable.insert(g);
    if (!in_box.count(g)) report.fail("word missing from box: " + describe(w) + tag);
  }
  if (reachable != in_box) report.fail("box holds relations no word reaches" + tag);

  // Representatives are shortest words.
  for (const auto& s : box.strings()) {
    const Grid g = oracle::grid(s.relation);
    for (const auto& w : oracle::all_words(letters.size(), int(s.word.length()) - 1)) {
      if (oracle::evaluate(w, letters) == g) {
        report.fail("representative not shortest " + box.render(s.word) + tag);
        break;
      }
    }
  }
}

}  // namespace

Report composition(std::size_t random_cases, std::uint64_t seed) {
  Report report;
  for (std::size_t n = 1; n <= 3; ++n) exhaustive_composition(n, report);
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> size(1, 8);
  for (std::size_t c = 0; c < random_cases; ++c) random_composition(rng, size(rng), report);
  // Rows spanning more than one machine word.
  for (std::size_t n : {63u, 64u, 65u, 130u}) random_composition(rng, n, report);
  return report;
}

Report relation_box(std::uint64_t seed) {
  Report report;
  cequiv::BoxOptions plain;
  cequiv::BoxOptions transposes;
  transposes.include_transposes = true;

  const auto bm = oracle::business_marriage();
  const auto bmwp = oracle::with_attributes({"wealth:40", "priorates:34:ge:zero"});
  for (int k = 1; k <= 3; ++k) {
    check_box(bm, plain, k, "business+marriage", report);
    check_box(bmwp, plain, k, "business+marriage+wealth+priorates", report);
  }

  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> size(2, 5);
  std::uniform_int_distribution<std::size_t> gens(1, 3);
  for (int trial = 0; trial < 30; ++trial) {
    const std::size_t n = size(rng);
    const auto actors = oracle::numbered_actors(n);
    std::vector<BooleanRelation> generators;
    const std::size_t m = gens(rng);
    for (std::size_t g = 0; g < m; ++g)
      generators.push_back(oracle::relation(actors, oracle::random_grid(rng, n, 0.35),
                                            std::string(1, char('a' + g))));
    const auto& options = trial % 2 ? transposes : plain;
    for (int k = 1; k <= 3; ++k)
      check_box(generators, options, k, "random #" + std::to_string(trial), report);
  }
  return report;
}

Report person_hierarchy() {
  Report report;
  const auto bm = oracle::business_marriage();
  for (int k = 1; k <= 5; ++k) {
    const auto box = cequiv::build_relation_box(bm, k);
    std::vector<Grid> strings;
    for (const auto& s : box.strings()) strings.push_back(oracle::grid(s.relation));
    const std::size_t n = box.actor_count();
    for (std::size_t l = 0; l < n; ++l) {
      const auto h = cequiv::person_hierarchy(box, l);
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
          ++report.cases;
          if (int(h.cells.get(i, j)) != oracle::person_cell(strings, l, i, j)) {
            report.fail("H_" + box.actors()->label(l) + "(" + box.actors()->label(i) + "," +
                        box.actors()->label(j) + ") at k=" + std::to_string(k));
          }
        }
    }
  }
  return report;
}

Report transitive_reduction(std::size_t random_cases, std::uint64_t seed) {
  Report report;
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> size(1, 8);
  std::uniform_real_distribution<double> density(0.0, 0.7);
  for (std::size_t c = 0; c < random_cases; ++c) {
    const std::size_t n = size(rng);
    // Random DAG on a shuffled vertex order, closed into a partial order.
    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    std::bernoulli_distribution bit(density(rng));
    Grid g(n, std::vector<int>(n, 0));
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = a + 1; b < n; ++b)
        if (bit(rng)) g[perm[a]][perm[b]] = 1;
    const Grid order = oracle::reflexive_closure(oracle::transitive_closure(g));
    const auto actors = oracle::numbered_actors(n);
    const auto r = oracle::relation(actors, order);

    ++report.cases;
    const Grid cover = oracle::grid(cequiv::covering_relation(r));
    if (cover != oracle::covers(order)) {
      report.fail("covering relation differs (n=" + std::to_string(n) + ")");
      continue;
    }
    if (oracle::reflexive_closure(oracle::transitive_closure(cover)) != order)
      report.fail("covers do not regenerate the order (n=" + std::to_string(n) + ")");
  }
  return report;
}

}  // namespace properties
