// Actor partitions and their positional systems (blockmodels).

#ifndef CEQUIV_POSITION_HPP
#define CEQUIV_POSITION_HPP

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "cequiv/hierarchy.hpp"
#include "cequiv/relation.hpp"

namespace cequiv {

/// Assignment of every actor to exactly one class; class ids are contiguous
/// from 0 and every class is non-empty.
class Partition {
 public:
  Partition(ActorSetPtr actors, std::vector<std::size_t> class_of,
            std::vector<std::string> class_labels = {});

  static Partition from_classes(ActorSetPtr actors,
                                const std::vector<std::vector<std::size_t>>& classes,
                                std::vector<std::string> class_labels = {});
  /// One class per actor, labelled with the actor's name.
  static Partition discrete(ActorSetPtr actors);

  const ActorSetPtr& actors() const noexcept { return actors_; }
  std::size_t class_count() const noexcept { return labels_.size(); }
  std::size_t class_of(std::size_t actor) const { return class_of_.at(actor); }
  const std::vector<std::size_t>& assignment() const noexcept { return class_of_; }
  const std::vector<std::string>& class_labels() const noexcept { return labels_; }

  /// Members of each class, ascending.
  std::vector<std::vector<std::size_t>> classes() const;
  std::vector<std::size_t> members(std::size_t class_id) const;

  /// Same classes, compared as sets of actor sets (ids and labels ignored).
  bool same_grouping(const Partition& other) const;

 private:
  ActorSetPtr actors_;
  std::vector<std::size_t> class_of_;
  std::vector<std::string> labels_;
};

/// Lorrain-White structural equivalence, swap-aware: i ~ j iff exchanging i
/// and j leaves every generator unchanged.
Partition structural_equivalence_partition(std::span<const BooleanRelation> generators);

enum class ContainmentMode {
  mutual,  // classes of pairwise mutual containment
  level,   // classes are the levels of the containment hierarchy
};

struct ContainmentPartition {
  Partition partition;
  /// Class ids whose members are comparable with no other class.
  std::vector<std::size_t> isolated_classes;
  std::vector<std::string> warnings;
};

/// Level mode orders classes from the top level down, isolated classes last.
ContainmentPartition containment_class_partition(const BooleanRelation& order,
                                                 ContainmentMode mode);

inline ContainmentPartition containment_class_partition(const CumulatedHierarchy& h,
                                                        ContainmentMode mode) {
  return containment_class_partition(h.cells, mode);
}

struct PositionalSystem {
  Partition partition;
  /// Partition classes represented in `reduced`, in order.
  std::vector<std::size_t> reported_classes;
  /// One reduced relation per generator, over the reported classes.
  std::vector<BooleanRelation> reduced;
};

struct BlockmodelOptions {
  /// Classes left out of the reduced relations (e.g. isolates).
  std::vector<std::size_t> excluded_classes;
};

/// Zeroblock rule: reduced(P, Q) = 1 iff some i in P, j in Q has g(i, j) = 1.
PositionalSystem blockmodel(std::span<const BooleanRelation> generators,
                            const Partition& partition, BlockmodelOptions options = {});

/// Classes whose members have no ties, in or out, in any generator.
std::vector<std::size_t> isolated_classes(const Partition& partition,
                                          std::span<const BooleanRelation> generators);

/// Splits `class_id` into the members holding the attribute (keeping the
/// class position) and those lacking it (inserted right after). Constant
/// attributes on the class leave the partition unchanged.
Partition attribute_split(const Partition& partition, const AttributeVector& attribute,
                          std::size_t class_id);

}  // namespace cequiv

#endif  // CEQUIV_POSITION_HPP
