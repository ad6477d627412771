#include "cequiv/hierarchy.hpp"

#include <algorithm>
#include <functional>

#include "cequiv/order.hpp"

namespace cequiv {

PersonHierarchy person_hierarchy(const RelationBox& box, std::size_t actor) {
  const RolePlane plane = relation_plane(box, actor);
  const std::size_t n = box.actor_count();
  BooleanRelation cells(box.actors(), "H_" + box.actors()->label(actor));
  for (std::size_t i = 0; i < n; ++i) {
    const BitVector& ci = plane.column(i);
    if (!ci.any()) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (ci.subset_of(plane.column(j))) cells.set(i, j);
    }
  }
  return {actor, std::move(cells)};
}

bool mutual_containment(const RelationBox& box, std::size_t actor, std::size_t i,
                        std::size_t j) {
  const auto h = person_hierarchy(box, actor);
  if (i >= h.cells.size() || j >= h.cells.size()) {
    throw InputError("actor index out of range");
  }
  return h.cells.get(i, j) && h.cells.get(j, i);
}

CumulatedHierarchy cumulated_hierarchy(const RelationBox& box) {
  BooleanRelation raw(box.actors());
  for (std::size_t l = 0; l < box.actor_count(); ++l) {
    raw = unite(raw, person_hierarchy(box, l).cells);
  }
  const BooleanRelation reflexive = reflexive_closure(raw);
  BooleanRelation closed = transitive_closure(reflexive);

  CumulatedHierarchy out{closed.with_label("cumulated"), raw.with_label("union"),
                         box.max_length(), box.alphabet_labels(), 0};
  out.repaired_cells = closed.count() - reflexive.count();
  return out;
}

HierarchyLevels hierarchy_levels(const BooleanRelation& order) {
  if (!is_reflexive(order) || !is_transitive(order)) {
    throw InputError("hierarchy levels need a reflexive, transitive relation");
  }
  HierarchyLevels out{strong_components(order), BooleanRelation(order.actors()),
                      {}, {}, {}};
  out.quotient = quotient(order, out.classes);
  const std::size_t m = out.classes.size();

  auto below = [&](std::size_t p, std::size_t q) {  // q strictly below p
    return p != q && out.quotient.get(q, p);
  };

  // Only single actors count as isolates; a larger class with nothing else
  // comparable (e.g. a connected component under a universal order) is a level.
  std::vector<bool> isolated(m, true);
  for (std::size_t p = 0; p < m; ++p) {
    if (out.classes[p].size() > 1) isolated[p] = false;
    for (std::size_t q = 0; q < m; ++q) {
      if (p != q && (out.quotient.get(p, q) || out.quotient.get(q, p))) {
        isolated[p] = false;
        break;
      }
    }
  }

  // Longest chain below each class; the quotient is acyclic.
  std::vector<std::size_t> rank(m, HierarchyLevels::npos);
  std::function<std::size_t(std::size_t)> depth = [&](std::size_t p) {
    if (rank[p] != HierarchyLevels::npos) return rank[p];
    std::size_t best = 0;
    for (std::size_t q = 0; q < m; ++q) {
      if (below(p, q)) best = std::max(best, depth(q) + 1);
    }
    return rank[p] = best;
  };

  out.level_of.assign(m, HierarchyLevels::npos);
  for (std::size_t p = 0; p < m; ++p) {
    if (isolated[p]) {
      out.isolated.push_back(p);
      continue;
    }
    const std::size_t r = depth(p);
    if (out.levels.size() <= r) out.levels.resize(r + 1);
    out.levels[r].push_back(p);
    out.level_of[p] = r;
  }
  return out;
}

}  // namespace cequiv
