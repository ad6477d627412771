#include "cequiv/order.hpp"

#include <algorithm>
#include <limits>

namespace cequiv {

bool is_reflexive(const BooleanRelation& r) {
  for (std::size_t i = 0; i < r.size(); ++i) {
    if (!r.get(i, i)) return false;
  }
  return true;
}

bool is_transitive(const BooleanRelation& r) { return includes(compose(r, r), r); }

bool is_antisymmetric(const BooleanRelation& r) {
  for (std::size_t i = 0; i < r.size(); ++i) {
    for (std::size_t j = i + 1; j < r.size(); ++j) {
      if (r.get(i, j) && r.get(j, i)) return false;
    }
  }
  return true;
}

bool is_preorder(const BooleanRelation& r) {
  return is_reflexive(r) && is_transitive(r);
}

bool is_partial_order(const BooleanRelation& r) {
  return is_preorder(r) && is_antisymmetric(r);
}

BooleanRelation reflexive_closure(const BooleanRelation& r) {
  BooleanRelation out = r;
  for (std::size_t i = 0; i < r.size(); ++i) out.set(i, i);
  return out;
}

BooleanRelation transitive_closure(const BooleanRelation& r) {
  BooleanRelation out = r;
  const std::size_t n = r.size();
  for (std::size_t m = 0; m < n; ++m) {
    // Copy row m once; rows that reach m absorb it.
    const std::vector<std::uint64_t> via(out.row_words(m).begin(),
                                         out.row_words(m).end());
    for (std::size_t i = 0; i < n; ++i) {
      if (!out.get(i, m)) continue;
      auto dst = out.row_words(i);
      for (std::size_t w = 0; w < dst.size(); ++w) dst[w] |= via[w];
    }
  }
  return out;
}

std::vector<std::vector<std::size_t>> strong_components(const BooleanRelation& r) {
  // Iterative Tarjan.
  const std::size_t n = r.size();
  constexpr std::size_t unvisited = std::numeric_limits<std::size_t>::max();
  std::vector<std::size_t> index(n, unvisited), low(n, 0);
  std::vector<bool> on_stack(n, false);
  std::vector<std::size_t> stack;
  std::vector<std::vector<std::size_t>> components;
  std::size_t counter = 0;

  struct Frame {
    std::size_t vertex;
    std::size_t next;
  };
  std::vector<Frame> calls;

  for (std::size_t root = 0; root < n; ++root) {
    if (index[root] != unvisited) continue;
    calls.push_back({root, 0});
    index[root] = low[root] = counter++;
    stack.push_back(root);
    on_stack[root] = true;

    while (!calls.empty()) {
      Frame& frame = calls.back();
      const std::size_t v = frame.vertex;
      bool descended = false;
      while (frame.next < n) {
        const std::size_t w = frame.next++;
        if (!r.get(v, w)) continue;
        if (index[w] == unvisited) {
          index[w] = low[w] = counter++;
          stack.push_back(w);
          on_stack[w] = true;
          calls.push_back({w, 0});
          descended = true;
          break;
        }
        if (on_stack[w]) low[v] = std::min(low[v], index[w]);
      }
      if (descended) continue;

      if (low[v] == index[v]) {
        std::vector<std::size_t> component;
        std::size_t w = 0;
        do {
          w = stack.back();
          stack.pop_back();
          on_stack[w] = false;
          component.push_back(w);
        } while (w != v);
        std::sort(component.begin(), component.end());
        components.push_back(std::move(component));
      }
      calls.pop_back();
      if (!calls.empty()) {
        const std::size_t parent = calls.back().vertex;
        low[parent] = std::min(low[parent], low[v]);
      }
    }
  }

  std::sort(components.begin(), components.end(),
            [](const auto& a, const auto& b) { return a.front() < b.front(); });
  return components;
}

std::string join_labels(const ActorSet& actors,
                        const std::vector<std::size_t>& members,
                        const std::string& separator) {
  std::string out;
  for (std::size_t i = 0; i < members.size(); ++i) {
    if (i) out += separator;
    out += actors.label(members[i]);
  }
  return out;
}

BooleanRelation quotient(const BooleanRelation& r,
                         const std::vector<std::vector<std::size_t>>& classes) {
  std::vector<std::string> labels;
  labels.reserve(classes.size());
  for (const auto& cls : classes) labels.push_back(join_labels(*r.actors(), cls, "+"));
  BooleanRelation out(make_actor_set(std::move(labels)), r.label());
  for (std::size_t p = 0; p < classes.size(); ++p) {
    for (std::size_t q = 0; q < classes.size(); ++q) {
      bool tie = false;
      for (auto i : classes[p]) {
        for (auto j : classes[q]) {
          if (r.get(i, j)) {
            tie = true;
            break;
          }
        }
        if (tie) break;
      }
      if (tie) out.set(p, q);
    }
  }
  return out;
}

BooleanRelation covering_relation(const BooleanRelation& order) {
  if (!is_partial_order(order)) {
    throw InputError("covering relation requires a partial order");
  }
  BooleanRelation strict = order;
  for (std::size_t i = 0; i < order.size(); ++i) strict.set(i, i, false);
  const BooleanRelation two_step = compose(strict, strict);
  BooleanRelation cover(order.actors(), order.label());
  for (std::size_t i = 0; i < order.size(); ++i) {
    for (std::size_t j = 0; j < order.size(); ++j) {
      if (strict.get(i, j) && !two_step.get(i, j)) cover.set(i, j);
    }
  }
  return cover;
}

}  // namespace cequiv
