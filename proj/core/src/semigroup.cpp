#include "cequiv/semigroup.hpp"

#include <unordered_map>

namespace cequiv {

std::string RelationSemigroup::render(const Word& word) const {
  if (word.letters.empty()) return "e";
  return render_word(word, generator_labels);
}

std::string RelationSemigroup::element_name(std::size_t e) const {
  return render(words.at(e));
}

RelationSemigroup generate_semigroup(std::span<const BooleanRelation> generators,
                                     SemigroupOptions options) {
  if (generators.empty()) throw InputError("semigroup needs at least one generator");
  if (options.max_elements < 1) throw InputError("max_elements must be at least 1");
  const ActorSetPtr& actors = generators.front().actors();
  for (const auto& g : generators) {
    if (!same_actors(actors, g.actors())) {
      throw InputError("generators are defined over different actor sets");
    }
  }

  RelationSemigroup s{{generators.begin(), generators.end()}, {}, {}, {}, {},
                      BooleanRelation(actors), false, true};
  for (std::size_t i = 0; i < s.generators.size(); ++i) {
    s.generator_labels.push_back(s.generators[i].label().empty()
                                     ? "g" + std::to_string(i)
                                     : s.generators[i].label());
  }

  std::unordered_map<BooleanRelation, std::size_t, RelationHash> index;
  auto add = [&](BooleanRelation rel, Word word) -> std::size_t {
    auto it = index.find(rel);
    if (it != index.end()) return it->second;
    if (s.elements.size() >= options.max_elements) {
      s.complete = false;
      return RelationSemigroup::npos;
    }
    const std::size_t id = s.elements.size();
    index.emplace(rel, id);
    s.elements.push_back(std::move(rel));
    s.words.push_back(std::move(word));
    return id;
  };

  for (std::size_t g = 0; g < s.generators.size(); ++g) {
    add(s.generators[g].with_label({}), Word{{g}});
  }

  // Elements are expanded in discovery order, which makes the traversal
  // breadth-first by word length.
  for (std::size_t e = 0; e < s.elements.size(); ++e) {
    std::vector<std::size_t> row(s.generators.size(), RelationSemigroup::npos);
    for (std::size_t g = 0; g < s.generators.size(); ++g) {
      row[g] = add(compose(s.elements[e], s.generators[g]), s.words[e].extended(g));
    }
    s.cayley.push_back(std::move(row));
  }

  if (options.adjoin_identity && s.complete) {
    auto id = BooleanRelation::identity(actors);
    if (!index.count(id)) {
      std::vector<std::size_t> row;
      for (const auto& g : s.generators) row.push_back(index.at(g.with_label({})));
      s.elements.push_back(std::move(id));
      s.words.push_back(Word{});
      s.cayley.push_back(std::move(row));
      s.identity_adjoined = true;
    }
  }

  std::vector<std::string> names;
  for (std::size_t e = 0; e < s.elements.size(); ++e) names.push_back(s.element_name(e));
  s.inclusion_order = BooleanRelation(make_actor_set(std::move(names)), "inclusion");
  for (std::size_t a = 0; a < s.elements.size(); ++a) {
    for (std::size_t b = 0; b < s.elements.size(); ++b) {
      if (includes(s.elements[a], s.elements[b])) s.inclusion_order.set(a, b);
    }
  }
  return s;
}

std::vector<ElementWords> element_equations(const RelationSemigroup& semigroup,
                                            std::size_t max_length) {
  if (!semigroup.complete) {
    throw InputError("element equations need a complete semigroup");
  }
  std::vector<ElementWords> out;
  for (std::size_t e = 0; e < semigroup.order(); ++e) {
    out.push_back({e, {semigroup.words[e]}});
  }
  for (std::size_t e = 0; e < semigroup.order(); ++e) {
    for (std::size_t g = 0; g < semigroup.generators.size(); ++g) {
      const std::size_t target = semigroup.cayley[e][g];
      Word word = semigroup.words[e].letters.empty() ? Word{{g}}
                                                     : semigroup.words[e].extended(g);
      if (word.length() > max_length || word == semigroup.words[target]) continue;
      out[target].words.push_back(std::move(word));
    }
  }
  return out;
}

}  // namespace cequiv
