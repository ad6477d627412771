// Preorder and partial-order utilities on BooleanRelation.

#ifndef CEQUIV_ORDER_HPP
#define CEQUIV_ORDER_HPP

#include <cstddef>
#include <string>
#include <vector>

#include "cequiv/relation.hpp"

namespace cequiv {

bool is_reflexive(const BooleanRelation& r);
bool is_transitive(const BooleanRelation& r);
bool is_antisymmetric(const BooleanRelation& r);
bool is_preorder(const BooleanRelation& r);
bool is_partial_order(const BooleanRelation& r);

BooleanRelation reflexive_closure(const BooleanRelation& r);
/// Warshall closure on row bitsets.
BooleanRelation transitive_closure(const BooleanRelation& r);

/// Strongly connected components of the directed graph of `r`, each sorted
/// ascending, ordered by smallest member. For a preorder these are exactly
/// the mutual-containment classes.
std::vector<std::vector<std::size_t>> strong_components(const BooleanRelation& r);

/// Class-level relation: (P,Q) = 1 iff some i in P, j in Q has r(i,j) = 1.
/// Class labels join member labels with '+'.
BooleanRelation quotient(const BooleanRelation& r,
                         const std::vector<std::vector<std::size_t>>& classes);

std::string join_labels(const ActorSet& actors,
                        const std::vector<std::size_t>& members,
                        const std::string& separator);

/// Covering pairs of a partial order: a < b with no c such that a < c < b.
/// Throws InputError unless `order` is a partial order.
BooleanRelation covering_relation(const BooleanRelation& order);

}  // namespace cequiv

#endif  // CEQUIV_ORDER_HPP
