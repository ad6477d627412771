#include "cequiv/relation_box.hpp"

#include <algorithm>
#include <unordered_map>
#include <utility>

namespace cequiv {
namespace {

// Accumulates distinct string relations in discovery order.
class StringTable {
 public:
  // Returns true when `relation` was not seen before.
  bool insert(Word word, BooleanRelation relation) {
    auto [it, inserted] = index_.try_emplace(relation, strings_.size());
    if (!inserted) {
      strings_[it->second].all_words.push_back(std::move(word));
      return false;
    }
    StringRelation entry{word, std::move(relation), {word}};
    strings_.push_back(std::move(entry));
    return true;
  }

  std::size_t last() const { return strings_.size() - 1; }
  const StringRelation& at(std::size_t i) const { return strings_[i]; }
  std::vector<StringRelation> release() { return std::move(strings_); }

 private:
  std::unordered_map<BooleanRelation, std::size_t, RelationHash> index_;
  std::vector<StringRelation> strings_;
};

using Frontier = std::vector<std::size_t>;

// Right-extends every frontier entry by each letter in `letters`.
Frontier extend(StringTable& table, const Frontier& frontier,
                const std::vector<std::size_t>& letters,
                const std::vector<BooleanRelation>& alphabet) {
  Frontier next;
  for (auto x : frontier) {
    for (auto g : letters) {
      Word word = table.at(x).word.extended(g);
      BooleanRelation rel = compose(table.at(x).relation, alphabet[g]);
      if (table.insert(std::move(word), std::move(rel))) next.push_back(table.last());
    }
  }
  return next;
}

// Closes `frontier` under right multiplication by the letters in `letters`;
// returns the frontier plus everything new that was found.
Frontier close_under(StringTable& table, Frontier frontier,
                     const std::vector<std::size_t>& letters,
                     const std::vector<BooleanRelation>& alphabet) {
  Frontier pending = frontier;
  while (!pending.empty()) {
    Frontier found = extend(table, pending, letters, alphabet);
    frontier.insert(frontier.end(), found.begin(), found.end());
    pending = std::move(found);
  }
  return frontier;
}

}  // namespace

Word Word::extended(std::size_t letter) const {
  Word w = *this;
  w.letters.push_back(letter);
  return w;
}

std::string render_word(const Word& word, std::span<const std::string> alphabet) {
  const bool compact = std::all_of(alphabet.begin(), alphabet.end(), [](const auto& s) {
    return s.size() == 1 || (s.size() == 2 && s[1] == '\'');
  });
  std::string out;
  for (std::size_t i = 0; i < word.letters.size(); ++i) {
    if (i && !compact) out += '.';
    out += alphabet[word.letters[i]];
  }
  return out;
}

RelationBox::RelationBox(ActorSetPtr actors, std::vector<BooleanRelation> alphabet,
                         std::vector<std::string> alphabet_labels, int max_length,
                         std::vector<StringRelation> strings)
    : actors_(std::move(actors)),
      alphabet_(std::move(alphabet)),
      labels_(std::move(alphabet_labels)),
      max_length_(max_length),
      strings_(std::move(strings)) {}

RelationBox build_relation_box(std::span<const BooleanRelation> generators,
                               int max_length, BoxOptions options) {
  if (max_length < 1) {
    throw InputError("maximum word length must be at least 1, got " +
                     std::to_string(max_length));
  }
  if (generators.empty()) throw InputError("relation box needs at least one generator");
  const ActorSetPtr& actors = generators.front().actors();
  for (const auto& g : generators) {
    if (!same_actors(actors, g.actors())) {
      throw InputError("generators are defined over different actor sets");
    }
  }

  std::vector<BooleanRelation> alphabet(generators.begin(), generators.end());
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < alphabet.size(); ++i) {
    labels.push_back(alphabet[i].label().empty() ? "g" + std::to_string(i)
                                                 : alphabet[i].label());
  }
  if (options.include_transposes) {
    const std::size_t base = alphabet.size();
    for (std::size_t i = 0; i < base; ++i) {
      if (is_symmetric(alphabet[i])) continue;
      alphabet.push_back(transpose(alphabet[i]).with_label(labels[i] + "'"));
      labels.push_back(labels[i] + "'");
    }
  }

  StringTable table;
  std::vector<std::size_t> all_letters(alphabet.size());
  for (std::size_t g = 0; g < alphabet.size(); ++g) all_letters[g] = g;

  if (options.attribute_length == AttributeLength::counted) {
    Frontier frontier;
    for (auto g : all_letters) {
      if (table.insert(Word{{g}}, alphabet[g])) frontier.push_back(table.last());
    }
    for (int length = 2; length <= max_length && !frontier.empty(); ++length) {
      frontier = extend(table, frontier, all_letters, alphabet);
    }
  } else {
    std::vector<std::size_t> free_letters, counted_letters;
    for (auto g : all_letters) {
      (classify_diagonal(alphabet[g]) == DiagonalKind::non_diagonal ? counted_letters
                                                                    : free_letters)
          .push_back(g);
    }
    // Cost 0: products of attribute letters alone.
    Frontier zero;
    for (auto g : free_letters) {
      if (table.insert(Word{{g}}, alphabet[g])) zero.push_back(table.last());
    }
    Frontier frontier = close_under(table, std::move(zero), free_letters, alphabet);

    for (int cost = 1; cost <= max_length; ++cost) {
      Frontier next;
      if (cost == 1) {
        for (auto g : counted_letters) {
          if (table.insert(Word{{g}}, alphabet[g])) next.push_back(table.last());
        }
      }
      Frontier grown = extend(table, frontier, counted_letters, alphabet);
      next.insert(next.end(), grown.begin(), grown.end());
      frontier = close_under(table, std::move(next), free_letters, alphabet);
      if (frontier.empty()) break;
    }
  }

  return RelationBox(actors, std::move(alphabet), std::move(labels), max_length,
                     table.release());
}

RolePlane::RolePlane(std::size_t actor, std::size_t width, std::vector<BitVector> columns)
    : actor_(actor), width_(width), columns_(std::move(columns)) {}

bool RolePlane::empty() const {
  return std::none_of(columns_.begin(), columns_.end(),
                      [](const BitVector& c) { return c.any(); });
}

RolePlane relation_plane(const RelationBox& box, std::size_t actor) {
  const std::size_t n = box.actor_count();
  if (actor >= n) {
    throw InputError("actor index " + std::to_string(actor) + " out of range (n = " +
                     std::to_string(n) + ")");
  }
  const std::size_t w = box.width();
  std::vector<BitVector> columns(n, BitVector(w));
  for (std::size_t x = 0; x < w; ++x) {
    const auto& rel = box.strings()[x].relation;
    for (std::size_t j = 0; j < n; ++j) {
      if (rel.get(actor, j)) columns[j].set(x);
    }
  }
  return RolePlane(actor, w, std::move(columns));
}

std::vector<BitVector> role_set(const RelationBox& box, std::size_t actor) {
  const RolePlane plane = relation_plane(box, actor);
  std::vector<BitVector> distinct;
  for (const auto& column : plane.columns()) {
    if (std::find(distinct.begin(), distinct.end(), column) == distinct.end()) {
      distinct.push_back(column);
    }
  }
  return distinct;
}

}  // namespace cequiv
