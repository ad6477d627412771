// Person hierarchies and the cumulated containment order.
//
// Orientation: cells(i, j) = 1 means "i is contained in j", i.e. wherever i
// is reached by some string, j is reached by the same string. Containers sit
// at the top of a hierarchy, the contained at the bottom.

#ifndef CEQUIV_HIERARCHY_HPP
#define CEQUIV_HIERARCHY_HPP

#include <cstddef>
#include <string>
#include <vector>

#include "cequiv/relation.hpp"
#include "cequiv/relation_box.hpp"

namespace cequiv {

struct PersonHierarchy {
  std::size_t actor;
  BooleanRelation cells;
};

/// cells(i, j) = 1 iff i's role relation in the actor's plane is nonzero and
/// componentwise <= j's. A zero column yields a zero row, diagonal included.
PersonHierarchy person_hierarchy(const RelationBox& box, std::size_t actor);

/// True iff i and j contain each other in the actor's person hierarchy, which
/// happens exactly when both role relations are equal and nonzero.
bool mutual_containment(const RelationBox& box, std::size_t actor, std::size_t i,
                        std::size_t j);

struct CumulatedHierarchy {
  BooleanRelation cells;      // reflexive and transitive
  BooleanRelation raw_union;  // OR of all person hierarchies, before closures
  int max_length = 0;
  std::vector<std::string> generator_labels;
  /// Cells added by the transitive closure step (0 when the reflexive union
  /// was already transitive).
  std::size_t repaired_cells = 0;

  bool transitivity_repaired() const noexcept { return repaired_cells != 0; }
};

/// Union of every person hierarchy, then reflexive closure, then transitive
/// closure.
CumulatedHierarchy cumulated_hierarchy(const RelationBox& box);

/// Mutual-containment quotient of a preorder ranked by height.
struct HierarchyLevels {
  /// Mutual-containment classes (actor indices), ordered by smallest member.
  std::vector<std::vector<std::size_t>> classes;
  /// Order among classes; a partial order.
  BooleanRelation quotient;
  /// levels[0] holds the bottom classes (nothing strictly below them).
  /// Class indices refer to `classes`.
  std::vector<std::vector<std::size_t>> levels;
  /// Single-actor classes comparable with no other class; excluded from
  /// `levels`.
  std::vector<std::size_t> isolated;
  /// Per class: its level, or npos for isolated classes.
  std::vector<std::size_t> level_of;

  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

  std::size_t level_count() const noexcept { return levels.size(); }
};

/// Ranks each non-isolated class by the longest strictly descending chain
/// below it. Throws InputError if `order` is not reflexive and transitive.
HierarchyLevels hierarchy_levels(const BooleanRelation& order);

inline HierarchyLevels hierarchy_levels(const CumulatedHierarchy& h) {
  return hierarchy_levels(h.cells);
}

}  // namespace cequiv

#endif  // CEQUIV_HIERARCHY_HPP
