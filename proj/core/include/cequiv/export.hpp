// Serialization of analysis results: CSV tables, JSON documents, and Hasse
// diagrams in Graphviz DOT.

#ifndef CEQUIV_EXPORT_HPP
#define CEQUIV_EXPORT_HPP

#include <string>
#include <string_view>
#include <vector>

#include "cequiv/hierarchy.hpp"
#include "cequiv/position.hpp"
#include "cequiv/relation.hpp"
#include "cequiv/relation_box.hpp"
#include "cequiv/semigroup.hpp"

namespace cequiv {

// CSV. Matrices carry a header row and a label column; fields containing
// commas or quotes are quoted.
std::string relation_csv(const BooleanRelation& relation);
/// Reads a matrix written by relation_csv; the header defines the actors.
BooleanRelation relation_from_csv(std::string_view text, std::string label = {});

/// Two columns: actor,class (class label).
std::string partition_csv(const Partition& partition);
/// Reads actor,class rows; classes are numbered in order of first appearance.
Partition partition_from_csv(std::string_view text, const ActorSetPtr& actors);

std::string levels_csv(const HierarchyLevels& levels, const ActorSet& actors);
std::string cayley_csv(const RelationSemigroup& semigroup);

// JSON documents.
std::string relation_json(const BooleanRelation& relation);
std::string relation_box_json(const RelationBox& box);
std::string cumulated_hierarchy_json(const CumulatedHierarchy& h);
std::string levels_json(const HierarchyLevels& levels, const ActorSet& actors);
std::string partition_json(const Partition& partition,
                           const std::vector<std::size_t>& isolated_classes = {},
                           const std::vector<std::string>& warnings = {});
std::string positional_system_json(const PositionalSystem& system);
std::string semigroup_json(const RelationSemigroup& semigroup,
                           std::size_t equation_length = 8);

/// Hasse diagram of a partial order: one node per element, edges for the
/// covering pairs only, drawn from container down to contained, and nodes
/// grouped by level (top first). Throws InputError for non-orders.
std::string export_hasse(const BooleanRelation& partial_order,
                         std::string_view graph_name = "hasse");

/// Hasse diagram of a preorder's mutual-containment quotient; node labels
/// list the members of each class.
std::string export_hasse(const HierarchyLevels& levels, const ActorSet& actors,
                         std::string_view graph_name = "hasse");

}  // namespace cequiv

#endif  // CEQUIV_EXPORT_HPP
