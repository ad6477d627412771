// Multiplex network datasets with actor attributes, and attribute cutoffs.
//
// Datasets are JSON documents:
//
//   {
//     "actors": ["A", "B", ...],
//     "ties": [
//       {"type": "business", "symbol": "B", "directed": false,
//        "edges": [["A", "B"], ...]},
//       {"type": "advice", "directed": true, "matrix": [[0, 1], [0, 0]]}
//     ],
//     "attributes": {
//       "wealth": {"symbol": "W", "values": [10, 36, ...]},
//       "priorates": [53, "NA", ...]
//     }
//   }
//
// "directed" defaults to false; undirected ties are stored symmetric. Missing
// attribute values are written "NA" (or null).

#ifndef CEQUIV_DATASET_HPP
#define CEQUIV_DATASET_HPP

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "cequiv/relation.hpp"

namespace cequiv {

/// Raised for malformed dataset files.
class DatasetError : public InputError {
 public:
  using InputError::InputError;
};

struct TieType {
  std::string name;
  std::string symbol;  // short label for words; defaults to the name
  bool directed = false;
  BooleanRelation relation;
};

struct Attribute {
  std::string name;
  std::string symbol;
  std::vector<std::optional<double>> values;
};

struct Dataset {
  ActorSetPtr actors;
  std::vector<TieType> ties;
  std::vector<Attribute> attributes;

  const TieType& tie(std::string_view name) const;
  const Attribute& attribute(std::string_view name) const;
};

Dataset parse_dataset(std::string_view json_text);
Dataset load_dataset(const std::filesystem::path& path);

enum class MissingPolicy { as_zero, error };
enum class Comparison { strictly_greater, at_least };

struct CutoffSpec {
  std::string attribute;
  double threshold = 0.0;
  MissingPolicy missing = MissingPolicy::error;
  Comparison comparison = Comparison::strictly_greater;
};

/// Parses "NAME:THRESHOLD[:OPT[:OPT]]" where each OPT is one of
/// gt | ge (comparison) and zero | error (missing values).
CutoffSpec parse_cutoff(std::string_view text);

/// v(i) = 1 iff the value passes the comparison against the threshold.
AttributeVector binarize(const Dataset& dataset, const CutoffSpec& spec);

/// Uses an attribute whose values are already 0/1 with nothing missing.
AttributeVector binary_attribute(const Dataset& dataset, std::string_view name);

}  // namespace cequiv

#endif  // CEQUIV_DATASET_HPP
