#include "cequiv/export.hpp"

#include <algorithm>
#include <sstream>

#include "cequiv/order.hpp"
#include "json.hpp"

namespace cequiv {
namespace {

using Json = nlohmann::ordered_json;

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n\r") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

// Minimal RFC 4180 reader: quoted fields, doubled quotes, CRLF or LF.
std::vector<std::vector<std::string>> parse_csv(std::string_view text) {
  std::vector<std::vector<std::string>> rows;
  std::vector<std::string> row;
  std::string field;
  bool quoted = false;
  bool any = false;
  for (std::size_t i = 0; i < text.size(); ++i) {
    const char c = text[i];
    if (quoted) {
      if (c == '"') {
        if (i + 1 < text.size() && text[i + 1] == '"') {
          field += '"';
          ++i;
        } else {
          quoted = false;
        }
      } else {
        field += c;
      }
      continue;
    }
    if (c == '"') {
      quoted = true;
      any = true;
    } else if (c == ',') {
      row.push_back(std::move(field));
      field.clear();
      any = true;
    } else if (c == '\n' || c == '\r') {
      if (c == '\r' && i + 1 < text.size() && text[i + 1] == '\n') ++i;
      if (any || !field.empty()) {
        row.push_back(std::move(field));
        rows.push_back(std::move(row));
      }
      row.clear();
      field.clear();
      any = false;
    } else {
      field += c;
      any = true;
    }
  }
  if (quoted) throw InputError("CSV ends inside a quoted field");
  if (any || !field.empty()) {
    row.push_back(std::move(field));
    rows.push_back(std::move(row));
  }
  return rows;
}

Json matrix_json(const BooleanRelation& r) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < r.size(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < r.size(); ++j) row.push_back(r.get(i, j) ? 1 : 0);
    rows.push_back(std::move(row));
  }
  return rows;
}

Json relation_node(const BooleanRelation& r) {
  Json node;
  node["label"] = r.label();
  node["actors"] = r.actors()->labels();
  node["matrix"] = matrix_json(r);
  return node;
}

Json names(const ActorSet& actors, const std::vector<std::size_t>& members) {
  Json out = Json::array();
  for (auto i : members) out.push_back(actors.label(i));
  return out;
}

std::string dot_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out;
}

// `cover(i, j)` = 1 means j covers i; edges run from j down to i.
std::string hasse_dot(std::string_view graph_name, const std::vector<std::string>& labels,
                      const HierarchyLevels& levels, const BooleanRelation& cover) {
  std::ostringstream out;
  out << "digraph \"" << dot_escape(std::string(graph_name)) << "\" {\n";
  out << "  rankdir=TB;\n";
  out << "  node [shape=box];\n";
  for (std::size_t v = 0; v < labels.size(); ++v) {
    out << "  n" << v << " [label=\"" << labels[v] << "\"];\n";
  }
  for (std::size_t r = levels.levels.size(); r-- > 0;) {
    out << "  { rank=same;";
    for (auto v : levels.levels[r]) out << " n" << v << ";";
    out << " }  // level " << r << "\n";
  }
  if (!levels.isolated.empty()) {
    out << "  { rank=same;";
    for (auto v : levels.isolated) out << " n" << v << ";";
    out << " }  // isolated\n";
  }
  for (std::size_t upper = 0; upper < cover.size(); ++upper) {
    for (std::size_t lower = 0; lower < cover.size(); ++lower) {
      if (cover.get(lower, upper)) out << "  n" << upper << " -> n" << lower << ";\n";
    }
  }
  out << "}\n";
  return out.str();
}

}  // namespace

std::string relation_csv(const BooleanRelation& relation) {
  std::ostringstream out;
  const auto& labels = relation.actors()->labels();
  for (const auto& label : labels) out << ',' << csv_field(label);
  out << '\n';
  for (std::size_t i = 0; i < relation.size(); ++i) {
    out << csv_field(labels[i]);
    for (std::size_t j = 0; j < relation.size(); ++j) out << ',' << (relation.get(i, j) ? 1 : 0);
    out << '\n';
  }
  return out.str();
}

BooleanRelation relation_from_csv(std::string_view text, std::string label) {
  const auto rows = parse_csv(text);
  if (rows.empty()) throw InputError("matrix CSV is empty");
  const auto& header = rows.front();
  if (header.size() < 2 || !header.front().empty()) {
    throw InputError("matrix CSV header must start with an empty cell");
  }
  std::vector<std::string> labels(header.begin() + 1, header.end());
  const std::size_t n = labels.size();
  if (rows.size() != n + 1) {
    throw InputError("matrix CSV has " + std::to_string(rows.size() - 1) +
                     " rows, expected " + std::to_string(n));
  }
  BooleanRelation out(make_actor_set(labels), std::move(label));
  for (std::size_t i = 0; i < n; ++i) {
    const auto& row = rows[i + 1];
    if (row.size() != n + 1 || row[0] != labels[i]) {
      throw InputError("matrix CSV row " + std::to_string(i + 1) + " is malformed");
    }
    for (std::size_t j = 0; j < n; ++j) {
      if (row[j + 1] == "1") {
        out.set(i, j);
      } else if (row[j + 1] != "0") {
        throw InputError("matrix CSV cells must be 0 or 1");
      }
    }
  }
  return out;
}

std::string partition_csv(const Partition& partition) {
  std::ostringstream out;
  out << "actor,class\n";
  const auto& actors = *partition.actors();
  for (std::size_t i = 0; i < actors.size(); ++i) {
    out << csv_field(actors.label(i)) << ','
        << csv_field(partition.class_labels()[partition.class_of(i)]) << '\n';
  }
  return out.str();
}

Partition partition_from_csv(std::string_view text, const ActorSetPtr& actors) {
  auto rows = parse_csv(text);
  if (!rows.empty() && rows.front().size() == 2 && rows.front()[0] == "actor") {
    rows.erase(rows.begin());
  }
  constexpr std::size_t unset = static_cast<std::size_t>(-1);
  std::vector<std::size_t> class_of(actors->size(), unset);
  std::vector<std::string> labels;
  for (const auto& row : rows) {
    if (row.size() != 2) throw InputError("partition rows must be actor,class");
    const std::size_t actor = actors->index_of(row[0]);
    if (class_of[actor] != unset) {
      throw InputError("actor '" + row[0] + "' is assigned twice");
    }
    auto it = std::find(labels.begin(), labels.end(), row[1]);
    if (it == labels.end()) {
      labels.push_back(row[1]);
      it = labels.end() - 1;
    }
    class_of[actor] = static_cast<std::size_t>(it - labels.begin());
  }
  for (std::size_t i = 0; i < class_of.size(); ++i) {
    if (class_of[i] == unset) {
      throw InputError("partition does not assign actor '" + actors->label(i) + "'");
    }
  }
  return Partition(actors, std::move(class_of), std::move(labels));
}

std::string levels_csv(const HierarchyLevels& levels, const ActorSet& actors) {
  std::ostringstream out;
  out << "actor,class,level\n";
  for (std::size_t c = 0; c < levels.classes.size(); ++c) {
    const auto lvl = levels.level_of[c];
    for (auto i : levels.classes[c]) {
      out << csv_field(actors.label(i)) << ',' << c << ','
          << (lvl == HierarchyLevels::npos ? std::string("isolated") : std::to_string(lvl))
          << '\n';
    }
  }
  return out.str();
}

std::string cayley_csv(const RelationSemigroup& semigroup) {
  std::ostringstream out;
  out << "element";
  for (const auto& g : semigroup.generator_labels) out << ',' << csv_field(g);
  out << '\n';
  for (std::size_t e = 0; e < semigroup.order(); ++e) {
    out << csv_field(semigroup.element_name(e));
    for (auto target : semigroup.cayley[e]) {
      out << ','
          << (target == RelationSemigroup::npos ? std::string("?")
                                                : csv_field(semigroup.element_name(target)));
    }
    out << '\n';
  }
  return out.str();
}

std::string relation_json(const BooleanRelation& relation) {
  return relation_node(relation).dump(2) + "\n";
}

std::string relation_box_json(const RelationBox& box) {
  Json doc;
  doc["max_length"] = box.max_length();
  doc["generators"] = box.alphabet_labels();
  doc["width"] = box.width();
  Json strings = Json::array();
  for (const auto& s : box.strings()) {
    Json node;
    node["word"] = box.render(s.word);
    Json equal = Json::array();
    for (const auto& w : s.all_words) equal.push_back(box.render(w));
    node["words"] = std::move(equal);
    node["matrix"] = matrix_json(s.relation);
    strings.push_back(std::move(node));
  }
  doc["actors"] = box.actors()->labels();
  doc["strings"] = std::move(strings);
  return doc.dump(2) + "\n";
}

std::string cumulated_hierarchy_json(const CumulatedHierarchy& h) {
  Json doc;
  doc["max_length"] = h.max_length;
  doc["generators"] = h.generator_labels;
  doc["actors"] = h.cells.actors()->labels();
  doc["matrix"] = matrix_json(h.cells);
  doc["transitivity_repaired"] = h.transitivity_repaired();
  doc["repaired_cells"] = h.repaired_cells;
  return doc.dump(2) + "\n";
}

std::string levels_json(const HierarchyLevels& levels, const ActorSet& actors) {
  Json doc;
  Json lv = Json::array();
  for (std::size_t r = 0; r < levels.levels.size(); ++r) {
    Json classes = Json::array();
    for (auto c : levels.levels[r]) classes.push_back(names(actors, levels.classes[c]));
    lv.push_back({{"level", r}, {"classes", std::move(classes)}});
  }
  Json iso = Json::array();
  for (auto c : levels.isolated) iso.push_back(names(actors, levels.classes[c]));
  doc["level_count"] = levels.level_count();
  doc["levels"] = std::move(lv);
  doc["isolated"] = std::move(iso);
  return doc.dump(2) + "\n";
}

std::string partition_json(const Partition& partition,
                           const std::vector<std::size_t>& isolated_classes,
                           const std::vector<std::string>& warnings) {
  Json doc;
  Json classes = Json::array();
  const auto members = partition.classes();
  for (std::size_t c = 0; c < members.size(); ++c) {
    classes.push_back({{"label", partition.class_labels()[c]},
                       {"members", names(*partition.actors(), members[c])}});
  }
  doc["classes"] = std::move(classes);
  doc["isolated_classes"] = isolated_classes;
  doc["warnings"] = warnings;
  return doc.dump(2) + "\n";
}

std::string positional_system_json(const PositionalSystem& system) {
  Json doc;
  Json classes = Json::array();
  const auto members = system.partition.classes();
  for (auto c : system.reported_classes) {
    classes.push_back({{"label", system.partition.class_labels()[c]},
                       {"members", names(*system.partition.actors(), members[c])}});
  }
  doc["classes"] = std::move(classes);
  Json reduced = Json::array();
  for (const auto& r : system.reduced) {
    reduced.push_back({{"label", r.label()}, {"matrix", matrix_json(r)}});
  }
  doc["reduced"] = std::move(reduced);
  return doc.dump(2) + "\n";
}

std::string semigroup_json(const RelationSemigroup& semigroup, std::size_t equation_length) {
  Json doc;
  doc["generators"] = semigroup.generator_labels;
  doc["order"] = semigroup.order();
  doc["complete"] = semigroup.complete;
  doc["identity_adjoined"] = semigroup.identity_adjoined;
  Json elements = Json::array();
  for (std::size_t e = 0; e < semigroup.order(); ++e) elements.push_back(semigroup.element_name(e));
  doc["elements"] = std::move(elements);
  Json cayley = Json::array();
  for (const auto& row : semigroup.cayley) {
    Json r = Json::array();
    for (auto t : row) {
      if (t == RelationSemigroup::npos) {
        r.push_back(nullptr);
      } else {
        r.push_back(t);
      }
    }
    cayley.push_back(std::move(r));
  }
  doc["cayley"] = std::move(cayley);
  if (semigroup.complete) {
    Json eq = Json::array();
    for (const auto& ew : element_equations(semigroup, equation_length)) {
      if (ew.words.size() < 2) continue;
      Json words = Json::array();
      for (const auto& w : ew.words) words.push_back(semigroup.render(w));
      eq.push_back(std::move(words));
    }
    doc["equations"] = std::move(eq);
  }
  doc["inclusion_order"] = matrix_json(semigroup.inclusion_order);
  return doc.dump(2) + "\n";
}

std::string export_hasse(const BooleanRelation& partial_order, std::string_view graph_name) {
  if (!is_partial_order(partial_order)) {
    throw InputError("Hasse export needs a partial order; take the quotient first");
  }
  const HierarchyLevels levels = hierarchy_levels(partial_order);
  std::vector<std::string> labels;
  for (const auto& l : partial_order.actors()->labels()) labels.push_back(dot_escape(l));
  return hasse_dot(graph_name, labels, levels, covering_relation(partial_order));
}

std::string export_hasse(const HierarchyLevels& levels, const ActorSet& actors,
                         std::string_view graph_name) {
  std::vector<std::string> labels;
  for (const auto& cls : levels.classes) {
    std::string label;
    for (std::size_t k = 0; k < cls.size(); ++k) {
      if (k) label += "\\n";
      label += dot_escape(actors.label(cls[k]));
    }
    labels.push_back(std::move(label));
  }
  return hasse_dot(graph_name, labels, levels, covering_relation(levels.quotient));
}

}  // namespace cequiv
