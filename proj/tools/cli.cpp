#include "cli.hpp"

#include <fstream>
#include <iostream>
#include <sstream>
#include <utility>

#include "CLI11.hpp"
#include "cequiv/dataset.hpp"
#include "cequiv/export.hpp"
#include "cequiv/hierarchy.hpp"
#include "cequiv/order.hpp"
#include "cequiv/position.hpp"
#include "cequiv/relation_box.hpp"
#include "cequiv/semigroup.hpp"

#ifndef CEQUIV_DEFAULT_DATASET
#define CEQUIV_DEFAULT_DATASET "data/florentine.json"
#endif

namespace cequiv::cli {
namespace {

struct Options {
  std::string data = CEQUIV_DEFAULT_DATASET;
  std::string ties;
  std::string attributes;
  std::vector<std::string> cutoffs;
  std::string k = "1";
  std::string format;
  std::string out;
  bool transposes = false;
  std::string attribute_length = "counted";

  // rbox / hierarchy
  std::string actor;

  // partition / blockmodel / semigroup
  std::string mode = "mutual";
  std::string partition_file;
  std::vector<std::string> splits;
  bool keep_isolates = false;
  bool reduce = false;

  // semigroup
  bool monoid = false;
  std::size_t max_elements = 100000;
  std::size_t equation_length = 8;
};

struct Context {
  Dataset dataset;
  std::vector<BooleanRelation> generators;
  std::vector<std::pair<std::string, AttributeVector>> attributes;  // by dataset name
};

std::vector<std::string> split_list(const std::string& text) {
  std::vector<std::string> items;
  std::string item;
  std::istringstream in(text);
  while (std::getline(in, item, ',')) {
    if (!item.empty()) items.push_back(item);
  }
  return items;
}

int parse_int(const std::string& text, const char* what) {
  try {
    std::size_t used = 0;
    const int v = std::stoi(text, &used);
    if (used == text.size()) return v;
  } catch (const std::exception&) {
  }
  throw InputError(std::string(what) + " must be an integer, got '" + text + "'");
}

// "5", "1-5" or "1..5".
std::vector<int> parse_lengths(const std::string& text) {
  int lo = 0, hi = 0;
  if (auto dots = text.find(".."); dots != std::string::npos) {
    lo = parse_int(text.substr(0, dots), "--k");
    hi = parse_int(text.substr(dots + 2), "--k");
  } else if (auto dash = text.find('-', 1); dash != std::string::npos) {
    lo = parse_int(text.substr(0, dash), "--k");
    hi = parse_int(text.substr(dash + 1), "--k");
  } else {
    lo = hi = parse_int(text, "--k");
  }
  if (lo < 1 || hi < 1) throw InputError("--k must be at least 1");
  if (hi < lo) throw InputError("--k range is empty");
  std::vector<int> out;
  for (int k = lo; k <= hi; ++k) out.push_back(k);
  return out;
}

int single_length(const Options& opt) {
  const auto ks = parse_lengths(opt.k);
  if (ks.size() != 1) throw InputError("this command takes a single --k value");
  return ks.front();
}

Context build_context(const Options& opt) {
  Context ctx{load_dataset(opt.data), {}, {}};
  const Dataset& ds = ctx.dataset;

  std::vector<std::string> tie_names = split_list(opt.ties);
  if (tie_names.empty()) {
    for (const auto& t : ds.ties) tie_names.push_back(t.name);
  }
  for (const auto& name : tie_names) ctx.generators.push_back(ds.tie(name).relation);

  std::vector<CutoffSpec> cutoffs;
  for (const auto& text : opt.cutoffs) cutoffs.push_back(parse_cutoff(text));
  for (const auto& c : cutoffs) {
    const auto listed = split_list(opt.attributes);
    if (std::find(listed.begin(), listed.end(), c.attribute) == listed.end()) {
      throw InputError("--cutoff given for '" + c.attribute +
                       "', which is not listed in --attributes");
    }
  }
  for (const auto& name : split_list(opt.attributes)) {
    auto spec = std::find_if(cutoffs.begin(), cutoffs.end(),
                             [&](const CutoffSpec& c) { return c.attribute == name; });
    AttributeVector v = spec != cutoffs.end() ? binarize(ds, *spec) : binary_attribute(ds, name);
    ctx.generators.push_back(attribute_to_diagonal(v));
    ctx.attributes.emplace_back(name, std::move(v));
  }
  if (ctx.generators.empty()) throw InputError("no generators selected");
  return ctx;
}

RelationBox make_box(const Context& ctx, const Options& opt, int k) {
  BoxOptions box_opt;
  box_opt.include_transposes = opt.transposes;
  box_opt.attribute_length =
      opt.attribute_length == "free" ? AttributeLength::free : AttributeLength::counted;
  return build_relation_box(ctx.generators, k, box_opt);
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::size_t resolve_class(const Partition& p, const std::string& token) {
  const auto& labels = p.class_labels();
  if (auto it = std::find(labels.begin(), labels.end(), token); it != labels.end()) {
    return static_cast<std::size_t>(it - labels.begin());
  }
  const int id = parse_int(token, "--split class");
  if (id < 0 || static_cast<std::size_t>(id) >= p.class_count()) {
    throw InputError("unknown class '" + token + "'");
  }
  return static_cast<std::size_t>(id);
}

ContainmentPartition make_partition(const Context& ctx, const Options& opt) {
  ContainmentPartition result{Partition::discrete(ctx.dataset.actors), {}, {}};
  if (opt.mode == "structural") {
    result.partition = structural_equivalence_partition(ctx.generators);
  } else if (opt.mode == "manual") {
    if (opt.partition_file.empty()) throw InputError("--mode manual needs --partition FILE");
    result.partition = partition_from_csv(read_file(opt.partition_file), ctx.dataset.actors);
  } else {
    const auto box = make_box(ctx, opt, single_length(opt));
    const auto h = cumulated_hierarchy(box);
    result = containment_class_partition(
        h, opt.mode == "level" ? ContainmentMode::level : ContainmentMode::mutual);
  }

  for (const auto& split : opt.splits) {
    const auto colon = split.rfind(':');
    if (colon == std::string::npos) throw InputError("--split must be ATTRIBUTE:CLASS");
    const std::string name = split.substr(0, colon);
    auto it = std::find_if(ctx.attributes.begin(), ctx.attributes.end(),
                           [&](const auto& a) { return a.first == name; });
    if (it == ctx.attributes.end()) {
      throw InputError("--split attribute '" + name + "' is not listed in --attributes");
    }
    result.partition = attribute_split(result.partition, it->second,
                                       resolve_class(result.partition, split.substr(colon + 1)));
  }
  if (!opt.splits.empty() || opt.mode == "structural" || opt.mode == "manual") {
    result.isolated_classes = isolated_classes(result.partition, ctx.generators);
  }
  return result;
}

PositionalSystem make_positional_system(const Context& ctx, const Options& opt,
                                        std::ostream& err) {
  const ContainmentPartition cp = make_partition(ctx, opt);
  for (const auto& w : cp.warnings) err << "warning: " << w << '\n';
  BlockmodelOptions bm;
  if (!opt.keep_isolates) bm.excluded_classes = isolated_classes(cp.partition, ctx.generators);
  return blockmodel(ctx.generators, cp.partition, bm);
}

std::string matrices_csv(const std::vector<BooleanRelation>& relations) {
  std::string out;
  for (std::size_t r = 0; r < relations.size(); ++r) {
    if (r) out += '\n';
    out += "# " + relations[r].label() + '\n';
    out += relation_csv(relations[r]);
  }
  return out;
}

std::string plane_csv(const RelationBox& box, std::size_t actor) {
  const RolePlane plane = relation_plane(box, actor);
  std::ostringstream out;
  out << "string";
  for (const auto& label : box.actors()->labels()) out << ',' << label;
  out << '\n';
  for (std::size_t x = 0; x < plane.width(); ++x) {
    out << box.render(box.strings()[x].word);
    for (std::size_t j = 0; j < plane.actor_count(); ++j) out << ',' << (plane.at(x, j) ? 1 : 0);
    out << '\n';
  }
  return out.str();
}

// ---- commands ---------------------------------------------------------------

std::string cmd_rbox(const Options& opt) {
  const Context ctx = build_context(opt);
  const auto box = make_box(ctx, opt, single_length(opt));
  if (!opt.actor.empty()) {
    const std::size_t l = ctx.dataset.actors->index_of(opt.actor);
    if (opt.format == "json") {
      std::ostringstream out;
      out << "{\n  \"actor\": \"" << opt.actor << "\",\n  \"width\": " << box.width()
          << ",\n  \"role_set_size\": " << role_set(box, l).size() << "\n}\n";
      return out.str();
    }
    return plane_csv(box, l);
  }
  if (opt.format == "json") return relation_box_json(box);
  std::ostringstream out;
  out << "index,word,equal_words\n";
  for (std::size_t x = 0; x < box.width(); ++x) {
    const auto& s = box.strings()[x];
    out << x << ',' << box.render(s.word) << ',';
    for (std::size_t w = 1; w < s.all_words.size(); ++w) {
      if (w > 1) out << ' ';
      out << box.render(s.all_words[w]);
    }
    out << '\n';
  }
  return out.str();
}

std::string cmd_hierarchy(const Options& opt) {
  if (opt.actor.empty()) throw InputError("hierarchy needs --actor NAME");
  const Context ctx = build_context(opt);
  const auto box = make_box(ctx, opt, single_length(opt));
  const auto h = person_hierarchy(box, ctx.dataset.actors->index_of(opt.actor));
  return opt.format == "json" ? relation_json(h.cells) : relation_csv(h.cells);
}

std::string cmd_cph(const Options& opt, std::ostream& err) {
  const Context ctx = build_context(opt);
  const auto ks = parse_lengths(opt.k);
  std::string out;
  if (opt.format == "json" && ks.size() > 1) out += "[\n";
  for (std::size_t idx = 0; idx < ks.size(); ++idx) {
    const auto h = cumulated_hierarchy(make_box(ctx, opt, ks[idx]));
    if (h.transitivity_repaired()) {
      err << "warning: k=" << ks[idx] << ": transitive closure added " << h.repaired_cells
          << " cells to the union of person hierarchies\n";
    }
    if (opt.format == "json") {
      if (idx) out += ",\n";
      out += cumulated_hierarchy_json(h);
    } else {
      if (ks.size() > 1) out += (idx ? "\n# k=" : "# k=") + std::to_string(ks[idx]) + '\n';
      out += relation_csv(h.cells);
    }
  }
  if (opt.format == "json" && ks.size() > 1) out += "]\n";
  return out;
}

std::string cmd_levels(const Options& opt) {
  const Context ctx = build_context(opt);
  const auto h = cumulated_hierarchy(make_box(ctx, opt, single_length(opt)));
  const auto levels = hierarchy_levels(h);
  return opt.format == "json" ? levels_json(levels, *ctx.dataset.actors)
                              : levels_csv(levels, *ctx.dataset.actors);
}

std::string cmd_partition(const Options& opt, std::ostream& err) {
  const Context ctx = build_context(opt);
  const auto cp = make_partition(ctx, opt);
  for (const auto& w : cp.warnings) err << "warning: " << w << '\n';
  return opt.format == "json" ? partition_json(cp.partition, cp.isolated_classes, cp.warnings)
                              : partition_csv(cp.partition);
}

std::string cmd_blockmodel(const Options& opt, std::ostream& err) {
  const Context ctx = build_context(opt);
  const auto system = make_positional_system(ctx, opt, err);
  return opt.format == "json" ? positional_system_json(system) : matrices_csv(system.reduced);
}

std::string cmd_semigroup(const Options& opt, std::ostream& err) {
  const Context ctx = build_context(opt);
  std::vector<BooleanRelation> generators = ctx.generators;
  if (opt.reduce) generators = make_positional_system(ctx, opt, err).reduced;
  SemigroupOptions so;
  so.max_elements = opt.max_elements;
  so.adjoin_identity = opt.monoid;
  const auto s = generate_semigroup(generators, so);
  if (!s.complete) {
    err << "warning: closure stopped at " << s.order() << " elements (--max-elements)\n";
  }
  return opt.format == "json" ? semigroup_json(s, opt.equation_length) : cayley_csv(s);
}

std::string cmd_hasse(const Options& opt) {
  const Context ctx = build_context(opt);
  const auto h = cumulated_hierarchy(make_box(ctx, opt, single_length(opt)));
  const auto levels = hierarchy_levels(h);
  if (opt.format == "json") return levels_json(levels, *ctx.dataset.actors);
  return export_hasse(levels, *ctx.dataset.actors, "cph_k" + std::to_string(h.max_length));
}

void add_common(CLI::App* cmd, Options& opt, const std::string& default_format,
                std::vector<std::string> formats) {
  cmd->add_option("--data", opt.data, "Dataset file (JSON)")->capture_default_str();
  cmd->add_option("--ties", opt.ties, "Comma-separated tie types (default: all)");
  cmd->add_option("--attributes", opt.attributes,
                  "Comma-separated attributes used as diagonal generators");
  cmd->add_option("--cutoff", opt.cutoffs,
                  "Binarize an attribute: NAME:THRESHOLD[:gt|ge][:zero|error]");
  cmd->add_option("--k", opt.k, "Maximum word length (N, or A-B for cph)")->capture_default_str();
  cmd->add_option("--format", opt.format, "Output format")
      ->check(CLI::IsMember(std::move(formats)));
  cmd->add_option("--out", opt.out, "Write output to PATH instead of stdout");
  cmd->add_flag("--transposes", opt.transposes, "Add transposes of directed ties");
  cmd->add_option("--attribute-length", opt.attribute_length,
                  "Whether attribute letters count toward --k")
      ->check(CLI::IsMember({"counted", "free"}))
      ->capture_default_str();
  cmd->callback([&opt, default_format] {
    if (opt.format.empty()) opt.format = default_format;
  });
}

void add_partition_options(CLI::App* cmd, Options& opt) {
  cmd->add_option("--mode", opt.mode, "Partition: mutual, level, structural, manual")
      ->check(CLI::IsMember({"mutual", "level", "structural", "manual"}))
      ->capture_default_str();
  cmd->add_option("--partition", opt.partition_file, "actor,class CSV for --mode manual");
  cmd->add_option("--split", opt.splits,
                  "Split a class by an attribute: ATTRIBUTE:CLASS (label or 0-based id)");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Compositional equivalence analysis of multiplex networks", "cequiv"};
  app.require_subcommand(1);
  Options opt;

  auto* rbox = app.add_subcommand("rbox", "Distinct string relations up to length k");
  add_common(rbox, opt, "csv", {"csv", "json"});
  rbox->add_option("--actor", opt.actor, "Print this actor's relation plane");

  auto* hierarchy = app.add_subcommand("hierarchy", "Person hierarchy of one actor");
  add_common(hierarchy, opt, "csv", {"csv", "json"});
  hierarchy->add_option("--actor", opt.actor, "Actor name")->required();

  auto* cph = app.add_subcommand("cph", "Cumulated person hierarchy");
  add_common(cph, opt, "csv", {"csv", "json"});

  auto* levels = app.add_subcommand("levels", "Levels of the cumulated hierarchy");
  add_common(levels, opt, "csv", {"csv", "json"});

  auto* partition = app.add_subcommand("partition", "Actor partition");
  add_common(partition, opt, "csv", {"csv", "json"});
  add_partition_options(partition, opt);

  auto* blockmodel_cmd = app.add_subcommand("blockmodel", "Reduced relations of a partition");
  add_common(blockmodel_cmd, opt, "csv", {"csv", "json"});
  add_partition_options(blockmodel_cmd, opt);
  blockmodel_cmd->add_flag("--keep-isolates", opt.keep_isolates,
                           "Report classes of isolated actors too");

  auto* semigroup = app.add_subcommand("semigroup", "Semigroup of relations");
  add_common(semigroup, opt, "json", {"csv", "json"});
  add_partition_options(semigroup, opt);
  semigroup->add_flag("--reduce", opt.reduce, "Use the blockmodel's reduced relations");
  semigroup->add_flag("--keep-isolates", opt.keep_isolates,
                      "With --reduce, keep classes of isolated actors");
  semigroup->add_flag("--monoid", opt.monoid, "Adjoin the identity relation");
  semigroup->add_option("--max-elements", opt.max_elements, "Closure size cap")
      ->capture_default_str();
  semigroup->add_option("--equation-length", opt.equation_length,
                        "Longest word listed in equations")
      ->capture_default_str();

  auto* hasse = app.add_subcommand("hasse", "Hasse diagram of the cumulated hierarchy");
  add_common(hasse, opt, "dot", {"dot", "json"});

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err);
  }

  try {
    std::string result;
    if (*rbox) {
      result = cmd_rbox(opt);
    } else if (*hierarchy) {
      result = cmd_hierarchy(opt);
    } else if (*cph) {
      result = cmd_cph(opt, err);
    } else if (*levels) {
      result = cmd_levels(opt);
    } else if (*partition) {
      result = cmd_partition(opt, err);
    } else if (*blockmodel_cmd) {
      result = cmd_blockmodel(opt, err);
    } else if (*semigroup) {
      result = cmd_semigroup(opt, err);
    } else if (*hasse) {
      result = cmd_hasse(opt);
    }

    if (opt.out.empty()) {
      out << result;
    } else {
      std::ofstream file(opt.out, std::ios::binary);
      if (!file) throw InputError("cannot write '" + opt.out + "'");
      file << result;
    }
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}

}  // namespace cequiv::cli
