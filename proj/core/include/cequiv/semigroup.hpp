// Semigroup of relations generated by a set of relations under composition.

#ifndef CEQUIV_SEMIGROUP_HPP
#define CEQUIV_SEMIGROUP_HPP

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "cequiv/relation.hpp"
#include "cequiv/relation_box.hpp"

namespace cequiv {

struct SemigroupOptions {
  std::size_t max_elements = 100000;
  /// Monoid mode: append the identity relation as the last element when it
  /// does not arise from the generators.
  bool adjoin_identity = false;
};

struct RelationSemigroup {
  std::vector<BooleanRelation> generators;
  std::vector<std::string> generator_labels;
  std::vector<BooleanRelation> elements;
  /// Representative word per element; empty only for an adjoined identity.
  std::vector<Word> words;
  /// cayley[e][g] = index of elements[e] ∘ generators[g].
  std::vector<std::vector<std::size_t>> cayley;
  /// inclusion_order(a, b) = 1 iff elements[a] ⊆ elements[b]. Labelled by
  /// rendered words.
  BooleanRelation inclusion_order;
  bool identity_adjoined = false;
  /// False when max_elements stopped the closure early; the Cayley table then
  /// holds npos for unexplored products.
  bool complete = true;

  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

  std::size_t order() const noexcept { return elements.size(); }
  std::string render(const Word& word) const;
  std::string element_name(std::size_t e) const;
};

/// Breadth-first closure of the generators under right multiplication.
RelationSemigroup generate_semigroup(std::span<const BooleanRelation> generators,
                                     SemigroupOptions options = {});

struct ElementWords {
  std::size_t element;
  std::vector<Word> words;  // representative first
};

/// Words known to evaluate to each element: the representative plus every
/// Cayley product word(e)·g, up to `max_length` letters.
std::vector<ElementWords> element_equations(const RelationSemigroup& semigroup,
                                            std::size_t max_length = 8);

}  // namespace cequiv

#endif  // CEQUIV_SEMIGROUP_HPP
