#include "cequiv/dataset.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include "json.hpp"

namespace cequiv {
namespace {

using Json = nlohmann::ordered_json;

[[noreturn]] void fail(const std::string& msg) { throw DatasetError(msg); }

std::string symbol_or(const Json& node, const std::string& fallback) {
  if (node.is_object() && node.contains("symbol")) {
    if (!node["symbol"].is_string()) fail("'symbol' must be a string");
    return node["symbol"].get<std::string>();
  }
  return fallback;
}

TieType parse_tie(const Json& node, const ActorSetPtr& actors) {
  if (!node.is_object()) fail("each tie entry must be an object");
  if (!node.contains("type") || !node["type"].is_string()) {
    fail("tie entry is missing a string 'type'");
  }
  TieType tie{node["type"].get<std::string>(), {}, false, BooleanRelation(actors)};
  tie.symbol = symbol_or(node, tie.name);
  if (node.contains("directed")) {
    if (!node["directed"].is_boolean()) fail("tie '" + tie.name + "': 'directed' must be boolean");
    tie.directed = node["directed"].get<bool>();
  }
  const bool has_edges = node.contains("edges");
  const bool has_matrix = node.contains("matrix");
  if (has_edges == has_matrix) {
    fail("tie '" + tie.name + "' needs exactly one of 'edges' or 'matrix'");
  }

  BooleanRelation rel(actors, tie.symbol);
  if (has_edges) {
    if (!node["edges"].is_array()) fail("tie '" + tie.name + "': 'edges' must be an array");
    for (const auto& edge : node["edges"]) {
      if (!edge.is_array() || edge.size() != 2 || !edge[0].is_string() ||
          !edge[1].is_string()) {
        fail("tie '" + tie.name + "': each edge must be a pair of actor names");
      }
      const auto from = actors->find(edge[0].get<std::string>());
      const auto to = actors->find(edge[1].get<std::string>());
      if (!from || !to) {
        fail("tie '" + tie.name + "': edge references unknown actor '" +
             (from ? edge[1] : edge[0]).get<std::string>() + "'");
      }
      rel.set(*from, *to);
      if (!tie.directed) rel.set(*to, *from);
    }
  } else {
    std::vector<std::vector<int>> rows;
    try {
      rows = node["matrix"].get<std::vector<std::vector<int>>>();
      rel = BooleanRelation::from_rows(actors, rows, tie.symbol);
    } catch (const InputError& e) {
      fail("tie '" + tie.name + "': " + e.what());
    } catch (const Json::exception&) {
      fail("tie '" + tie.name + "': 'matrix' must be a list of 0/1 rows");
    }
    if (!tie.directed && !is_symmetric(rel)) {
      fail("tie '" + tie.name + "' is declared undirected but its matrix is asymmetric");
    }
  }
  tie.relation = std::move(rel);
  return tie;
}

Attribute parse_attribute(const std::string& name, const Json& node, std::size_t n) {
  Attribute attr{name, symbol_or(node, name), {}};
  const Json& values = node.is_object() ? node.value("values", Json()) : node;
  if (!values.is_array()) fail("attribute '" + name + "' needs a list of values");
  if (values.size() != n) {
    fail("attribute '" + name + "' has " + std::to_string(values.size()) +
         " values, expected " + std::to_string(n));
  }
  for (const auto& v : values) {
    if (v.is_null() || (v.is_string() && v.get<std::string>() == "NA")) {
      attr.values.emplace_back(std::nullopt);
    } else if (v.is_number()) {
      const double x = v.get<double>();
      if (!std::isfinite(x)) fail("attribute '" + name + "' has a non-finite value");
      attr.values.emplace_back(x);
    } else {
      fail("attribute '" + name + "' values must be numbers or \"NA\"");
    }
  }
  return attr;
}

}  // namespace

const TieType& Dataset::tie(std::string_view name) const {
  for (const auto& t : ties) {
    if (t.name == name) return t;
  }
  throw InputError("unknown tie type '" + std::string(name) + "'");
}

const Attribute& Dataset::attribute(std::string_view name) const {
  for (const auto& a : attributes) {
    if (a.name == name) return a;
  }
  throw InputError("unknown attribute '" + std::string(name) + "'");
}

Dataset parse_dataset(std::string_view json_text) {
  Json doc;
  try {
    doc = Json::parse(json_text);
  } catch (const Json::parse_error& e) {
    fail(std::string("dataset is not valid JSON: ") + e.what());
  }
  if (!doc.is_object()) fail("dataset must be a JSON object");
  if (!doc.contains("actors") || !doc["actors"].is_array()) {
    fail("dataset needs an 'actors' list");
  }
  std::vector<std::string> labels;
  for (const auto& a : doc["actors"]) {
    if (!a.is_string()) fail("actor names must be strings");
    labels.push_back(a.get<std::string>());
  }
  if (labels.empty()) fail("dataset has no actors");

  Dataset ds;
  try {
    ds.actors = make_actor_set(std::move(labels));
  } catch (const InputError& e) {
    fail(e.what());
  }

  if (doc.contains("ties")) {
    if (!doc["ties"].is_array()) fail("'ties' must be a list");
    for (const auto& node : doc["ties"]) {
      TieType tie = parse_tie(node, ds.actors);
      for (const auto& existing : ds.ties) {
        if (existing.name == tie.name) fail("duplicate tie type '" + tie.name + "'");
      }
      ds.ties.push_back(std::move(tie));
    }
  }
  if (doc.contains("attributes")) {
    if (!doc["attributes"].is_object()) fail("'attributes' must be an object");
    for (const auto& [name, node] : doc["attributes"].items()) {
      ds.attributes.push_back(parse_attribute(name, node, ds.actors->size()));
    }
  }
  return ds;
}

Dataset load_dataset(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) fail("cannot open dataset '" + path.string() + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_dataset(buf.str());
}

CutoffSpec parse_cutoff(std::string_view text) {
  std::vector<std::string> parts;
  std::string current;
  for (char c : text) {
    if (c == ':') {
      parts.push_back(std::move(current));
      current.clear();
    } else {
      current += c;
    }
  }
  parts.push_back(std::move(current));
  if (parts.size() < 2 || parts[0].empty()) {
    throw InputError("cutoff must look like NAME:THRESHOLD[:gt|ge][:zero|error], got '" +
                     std::string(text) + "'");
  }
  CutoffSpec spec;
  spec.attribute = parts[0];
  try {
    std::size_t used = 0;
    spec.threshold = std::stod(parts[1], &used);
    if (used != parts[1].size()) throw std::invalid_argument("trailing");
  } catch (const std::exception&) {
    throw InputError("cutoff threshold '" + parts[1] + "' is not a number");
  }
  if (!std::isfinite(spec.threshold)) throw InputError("cutoff threshold must be finite");
  for (std::size_t i = 2; i < parts.size(); ++i) {
    const auto& opt = parts[i];
    if (opt == "gt") {
      spec.comparison = Comparison::strictly_greater;
    } else if (opt == "ge") {
      spec.comparison = Comparison::at_least;
    } else if (opt == "zero") {
      spec.missing = MissingPolicy::as_zero;
    } else if (opt == "error") {
      spec.missing = MissingPolicy::error;
    } else {
      throw InputError("unknown cutoff option '" + opt + "' (expected gt, ge, zero, error)");
    }
  }
  return spec;
}

AttributeVector binarize(const Dataset& dataset, const CutoffSpec& spec) {
  if (!std::isfinite(spec.threshold)) throw InputError("cutoff threshold must be finite");
  const Attribute& attr = dataset.attribute(spec.attribute);
  std::vector<bool> bits(attr.values.size(), false);
  for (std::size_t i = 0; i < attr.values.size(); ++i) {
    const auto& v = attr.values[i];
    if (!v) {
      if (spec.missing == MissingPolicy::error) {
        throw InputError("attribute '" + attr.name + "' is missing for actor '" +
                         dataset.actors->label(i) + "'");
      }
      continue;
    }
    bits[i] = spec.comparison == Comparison::strictly_greater ? *v > spec.threshold
                                                              : *v >= spec.threshold;
  }
  return AttributeVector(dataset.actors, std::move(bits), attr.symbol);
}

AttributeVector binary_attribute(const Dataset& dataset, std::string_view name) {
  const Attribute& attr = dataset.attribute(name);
  std::vector<bool> bits;
  for (std::size_t i = 0; i < attr.values.size(); ++i) {
    const auto& v = attr.values[i];
    if (!v || (*v != 0.0 && *v != 1.0)) {
      throw InputError("attribute '" + attr.name +
                       "' is not binary; give a cutoff (value for actor '" +
                       dataset.actors->label(i) + "')");
    }
    bits.push_back(*v == 1.0);
  }
  return AttributeVector(dataset.actors, std::move(bits), attr.symbol);
}

}  // namespace cequiv
