#include "cequiv/position.hpp"

#include <algorithm>
#include <set>

#include "cequiv/order.hpp"

namespace cequiv {
namespace {

std::vector<std::string> default_labels(std::size_t count) {
  std::vector<std::string> labels;
  for (std::size_t c = 0; c < count; ++c) labels.push_back("P" + std::to_string(c + 1));
  return labels;
}

void require_generators(std::span<const BooleanRelation> generators,
                        const ActorSetPtr& actors) {
  for (const auto& g : generators) {
    if (!same_actors(g.actors(), actors)) {
      throw InputError("generator '" + g.label() +
                       "' is defined over a different actor set");
    }
  }
}

}  // namespace

Partition::Partition(ActorSetPtr actors, std::vector<std::size_t> class_of,
                     std::vector<std::string> class_labels)
    : actors_(std::move(actors)), class_of_(std::move(class_of)) {
  if (!actors_) throw InputError("partition requires an actor set");
  if (class_of_.size() != actors_->size()) {
    throw InputError("partition assigns " + std::to_string(class_of_.size()) +
                     " actors, expected " + std::to_string(actors_->size()));
  }
  const std::size_t count =
      class_of_.empty() ? 0 : *std::max_element(class_of_.begin(), class_of_.end()) + 1;
  std::vector<bool> used(count, false);
  for (auto c : class_of_) used[c] = true;
  if (std::find(used.begin(), used.end(), false) != used.end()) {
    throw InputError("partition class ids must be contiguous from 0");
  }
  labels_ = class_labels.empty() ? default_labels(count) : std::move(class_labels);
  if (labels_.size() != count) {
    throw InputError("partition has " + std::to_string(count) + " classes but " +
                     std::to_string(labels_.size()) + " labels");
  }
  // Class labels become an actor set for reduced relations.
  (void)ActorSet(labels_);
}

Partition Partition::from_classes(ActorSetPtr actors,
                                  const std::vector<std::vector<std::size_t>>& classes,
                                  std::vector<std::string> class_labels) {
  if (!actors) throw InputError("partition requires an actor set");
  constexpr std::size_t unset = static_cast<std::size_t>(-1);
  std::vector<std::size_t> class_of(actors->size(), unset);
  for (std::size_t c = 0; c < classes.size(); ++c) {
    if (classes[c].empty()) throw InputError("partition classes must be non-empty");
    for (auto actor : classes[c]) {
      if (actor >= class_of.size()) throw InputError("actor index out of range");
      if (class_of[actor] != unset) {
        throw InputError("actor '" + actors->label(actor) + "' is in two classes");
      }
      class_of[actor] = c;
    }
  }
  for (std::size_t i = 0; i < class_of.size(); ++i) {
    if (class_of[i] == unset) {
      throw InputError("actor '" + actors->label(i) + "' has no class");
    }
  }
  return Partition(std::move(actors), std::move(class_of), std::move(class_labels));
}

Partition Partition::discrete(ActorSetPtr actors) {
  std::vector<std::size_t> class_of(actors->size());
  for (std::size_t i = 0; i < class_of.size(); ++i) class_of[i] = i;
  auto labels = actors->labels();
  return Partition(std::move(actors), std::move(class_of), std::move(labels));
}

std::vector<std::vector<std::size_t>> Partition::classes() const {
  std::vector<std::vector<std::size_t>> out(class_count());
  for (std::size_t i = 0; i < class_of_.size(); ++i) out[class_of_[i]].push_back(i);
  return out;
}

std::vector<std::size_t> Partition::members(std::size_t class_id) const {
  if (class_id >= class_count()) {
    throw InputError("unknown class " + std::to_string(class_id));
  }
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < class_of_.size(); ++i) {
    if (class_of_[i] == class_id) out.push_back(i);
  }
  return out;
}

bool Partition::same_grouping(const Partition& other) const {
  if (!same_actors(actors_, other.actors_)) return false;
  auto a = classes();
  auto b = other.classes();
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  return a == b;
}

Partition structural_equivalence_partition(std::span<const BooleanRelation> generators) {
  if (generators.empty()) throw InputError("structural equivalence needs generators");
  const ActorSetPtr& actors = generators.front().actors();
  require_generators(generators, actors);
  const std::size_t n = actors->size();

  auto equivalent = [&](std::size_t i, std::size_t j) {
    for (const auto& g : generators) {
      if (g.get(i, i) != g.get(j, j) || g.get(i, j) != g.get(j, i)) return false;
      for (std::size_t m = 0; m < n; ++m) {
        if (m == i || m == j) continue;
        if (g.get(i, m) != g.get(j, m) || g.get(m, i) != g.get(m, j)) return false;
      }
    }
    return true;
  };

  // The swap relation is transitive (conjugate transpositions), so
  // comparing against each class's first member suffices.
  constexpr std::size_t unset = static_cast<std::size_t>(-1);
  std::vector<std::size_t> class_of(n, unset);
  std::vector<std::size_t> representatives;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t c = 0; c < representatives.size(); ++c) {
      if (equivalent(representatives[c], i)) {
        class_of[i] = c;
        break;
      }
    }
    if (class_of[i] == unset) {
      class_of[i] = representatives.size();
      representatives.push_back(i);
    }
  }
  return Partition(actors, std::move(class_of));
}

ContainmentPartition containment_class_partition(const BooleanRelation& order,
                                                 ContainmentMode mode) {
  const HierarchyLevels levels = hierarchy_levels(order);
  const ActorSetPtr& actors = order.actors();
  ContainmentPartition out{Partition::discrete(actors), {}, {}};

  if (mode == ContainmentMode::mutual) {
    out.partition = Partition::from_classes(actors, levels.classes);
    out.isolated_classes = levels.isolated;
    return out;
  }

  std::vector<std::vector<std::size_t>> groups;
  for (std::size_t r = levels.levels.size(); r-- > 0;) {
    std::vector<std::size_t> members;
    const auto& level = levels.levels[r];
    for (auto c : level) {
      members.insert(members.end(), levels.classes[c].begin(), levels.classes[c].end());
    }
    std::sort(members.begin(), members.end());
    if (level.size() > 1) {
      std::string msg = "level " + std::to_string(r) + " merges " +
                        std::to_string(level.size()) +
                        " incomparable containment classes:";
      for (auto c : level) msg += " {" + join_labels(*actors, levels.classes[c], ", ") + "}";
      out.warnings.push_back(std::move(msg));
    }
    groups.push_back(std::move(members));
  }
  for (auto c : levels.isolated) {
    out.isolated_classes.push_back(groups.size());
    groups.push_back(levels.classes[c]);
  }
  out.partition = Partition::from_classes(actors, groups);
  return out;
}

PositionalSystem blockmodel(std::span<const BooleanRelation> generators,
                            const Partition& partition, BlockmodelOptions options) {
  require_generators(generators, partition.actors());
  const std::set<std::size_t> excluded(options.excluded_classes.begin(),
                                       options.excluded_classes.end());
  for (auto c : excluded) {
    if (c >= partition.class_count()) {
      throw InputError("cannot exclude unknown class " + std::to_string(c));
    }
  }

  PositionalSystem out{partition, {}, {}};
  std::vector<std::string> labels;
  for (std::size_t c = 0; c < partition.class_count(); ++c) {
    if (excluded.count(c)) continue;
    out.reported_classes.push_back(c);
    labels.push_back(partition.class_labels()[c]);
  }
  if (labels.empty()) throw InputError("blockmodel would report no classes");
  const ActorSetPtr class_set = make_actor_set(std::move(labels));

  // Position of each actor's class in the reported list, or npos.
  constexpr std::size_t npos = static_cast<std::size_t>(-1);
  std::vector<std::size_t> slot(partition.class_count(), npos);
  for (std::size_t s = 0; s < out.reported_classes.size(); ++s) {
    slot[out.reported_classes[s]] = s;
  }

  for (const auto& g : generators) {
    BooleanRelation reduced(class_set, g.label());
    for (std::size_t i = 0; i < g.size(); ++i) {
      const std::size_t p = slot[partition.class_of(i)];
      if (p == npos) continue;
      for (std::size_t j = 0; j < g.size(); ++j) {
        if (!g.get(i, j)) continue;
        const std::size_t q = slot[partition.class_of(j)];
        if (q != npos) reduced.set(p, q);
      }
    }
    out.reduced.push_back(std::move(reduced));
  }
  return out;
}

std::vector<std::size_t> isolated_classes(const Partition& partition,
                                          std::span<const BooleanRelation> generators) {
  require_generators(generators, partition.actors());
  const std::size_t n = partition.actors()->size();
  std::vector<bool> tied(n, false);
  for (const auto& g : generators) {
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        if (g.get(i, j)) tied[i] = tied[j] = true;
      }
    }
  }
  std::vector<std::size_t> out;
  const auto classes = partition.classes();
  for (std::size_t c = 0; c < classes.size(); ++c) {
    if (std::none_of(classes[c].begin(), classes[c].end(),
                     [&](std::size_t i) { return tied[i]; })) {
      out.push_back(c);
    }
  }
  return out;
}

Partition attribute_split(const Partition& partition, const AttributeVector& attribute,
                          std::size_t class_id) {
  if (class_id >= partition.class_count()) {
    throw InputError("unknown class " + std::to_string(class_id));
  }
  if (!same_actors(partition.actors(), attribute.actors)) {
    throw InputError("attribute '" + attribute.label +
                     "' is defined over a different actor set");
  }
  const auto members = partition.members(class_id);
  const auto holders = std::count_if(members.begin(), members.end(),
                                     [&](std::size_t i) { return attribute.values[i]; });
  if (holders == 0 || static_cast<std::size_t>(holders) == members.size()) {
    return partition;
  }

  std::vector<std::size_t> class_of = partition.assignment();
  for (auto& c : class_of) {
    if (c > class_id) ++c;
  }
  for (auto i : members) {
    if (!attribute.values[i]) class_of[i] = class_id + 1;
  }
  std::vector<std::string> labels = partition.class_labels();
  const std::string base = labels[class_id];
  labels[class_id] = base + "+" + attribute.label;
  labels.insert(labels.begin() + static_cast<std::ptrdiff_t>(class_id) + 1,
                base + "-" + attribute.label);
  return Partition(partition.actors(), std::move(class_of), std::move(labels));
}

}  // namespace cequiv
