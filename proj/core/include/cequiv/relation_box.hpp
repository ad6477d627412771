// Relation-Box: every distinct string relation (generator or compound) up to
// a maximum word length, together with relation planes and role sets.

#ifndef CEQUIV_RELATION_BOX_HPP
#define CEQUIV_RELATION_BOX_HPP

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "cequiv/relation.hpp"

namespace cequiv {

/// A non-empty sequence of generator indices, read left to right as
/// successive compositions: {0, 1} is g0 ∘ g1.
struct Word {
  std::vector<std::size_t> letters;

  std::size_t length() const noexcept { return letters.size(); }
  Word extended(std::size_t letter) const;

  friend bool operator==(const Word&, const Word&) = default;
};

/// Renders a word using generator labels. Single-character labels are
/// concatenated ("BM"); longer labels are joined with '.'.
std::string render_word(const Word& word, std::span<const std::string> alphabet);

struct StringRelation {
  Word word;  // first-found representative
  BooleanRelation relation;
  std::vector<Word> all_words;  // every discovered word with this value, representative first
};

/// How diagonal (attribute) generators count toward the word-length cap.
enum class AttributeLength {
  counted,  // every letter counts
  free,     // only non-diagonal letters count
};

struct BoxOptions {
  bool include_transposes = false;
  AttributeLength attribute_length = AttributeLength::counted;
};

class RelationBox {
 public:
  RelationBox(ActorSetPtr actors, std::vector<BooleanRelation> alphabet,
              std::vector<std::string> alphabet_labels, int max_length,
              std::vector<StringRelation> strings);

  const ActorSetPtr& actors() const noexcept { return actors_; }
  std::size_t actor_count() const noexcept { return actors_->size(); }
  /// Generators after optional transposes were appended.
  const std::vector<BooleanRelation>& alphabet() const noexcept { return alphabet_; }
  const std::vector<std::string>& alphabet_labels() const noexcept { return labels_; }
  int max_length() const noexcept { return max_length_; }
  const std::vector<StringRelation>& strings() const noexcept { return strings_; }
  /// Number of distinct string relations (w).
  std::size_t width() const noexcept { return strings_.size(); }

  std::string render(const Word& word) const { return render_word(word, labels_); }

 private:
  ActorSetPtr actors_;
  std::vector<BooleanRelation> alphabet_;
  std::vector<std::string> labels_;
  int max_length_;
  std::vector<StringRelation> strings_;
};

/// Breadth-first by length, generators in the given order; compounds extend
/// known relations on the right (x ∘ g). Generator labels come from
/// BooleanRelation::label(), falling back to "g<index>".
RelationBox build_relation_box(std::span<const BooleanRelation> generators,
                               int max_length, BoxOptions options = {});

/// Horizontal slice of the box for one actor: cells(x, j) = string x (l, j).
class RolePlane {
 public:
  RolePlane(std::size_t actor, std::size_t width, std::vector<BitVector> columns);

  std::size_t actor() const noexcept { return actor_; }
  std::size_t width() const noexcept { return width_; }
  std::size_t actor_count() const noexcept { return columns_.size(); }
  bool at(std::size_t string_index, std::size_t target) const {
    return columns_.at(target).test(string_index);
  }
  /// Role relation of `target`: its profile across all strings.
  const BitVector& column(std::size_t target) const { return columns_.at(target); }
  const std::vector<BitVector>& columns() const noexcept { return columns_; }
  bool empty() const;

 private:
  std::size_t actor_;
  std::size_t width_;
  std::vector<BitVector> columns_;
};

RolePlane relation_plane(const RelationBox& box, std::size_t actor);

/// Distinct role relations of an actor's plane, in order of first target.
std::vector<BitVector> role_set(const RelationBox& box, std::size_t actor);

}  // namespace cequiv

#endif  // CEQUIV_RELATION_BOX_HPP
