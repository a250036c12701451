#include "cli.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "dlout/depgraph.hpp"
#include "dlout/errors.hpp"
#include "dlout/oracles.hpp"
#include "dlout/outliers.hpp"
#include "dlout/parser.hpp"
#include "dlout/report.hpp"
#include "dlout/semantics.hpp"
#include "json.hpp"

namespace dlout::cli {

namespace {

using Json = nlohmann::ordered_json;

struct Common {
  std::string input;
  std::string backend;
  std::uint64_t budget = SearchBudget{}.max_nodes;
  std::string format = "text";
  bool strict_letters = false;
};

struct Settings {
  Common common;
  std::string goal;
  std::string outlier;
  std::string witness;
  bool general = false;
  bool strong = false;
  std::size_t k = 1;
  std::size_t h = 1;
  bool all_witnesses = false;
  int jobs = 0;
  bool no_prune = false;
  bool dot = false;
  std::string construction;
  std::string fragment = "NU";
  std::size_t letters = 6;
  std::size_t rules = 8;
  std::size_t tightness = 1;
  std::uint64_t seed = 0;
  bool normal = false;
};

void add_common(CLI::App* cmd, Common& common, bool with_input = true) {
  if (with_input) {
    cmd->add_option("file", common.input, "Theory file, or - for stdin")->required();
  }
  cmd->add_option("--backend", common.backend, "exhaustive or fast (default: by fragment)")
      ->check(CLI::IsMember({"exhaustive", "fast"}));
  cmd->add_option("--budget", common.budget, "Node cap for the exhaustive search");
  cmd->add_option("--format", common.format, "text or records")
      ->check(CLI::IsMember({"text", "records"}));
  cmd->add_flag("--strict-letters", common.strict_letters,
                "Reject letters with the reserved prefixes _y, _c, _l, _f");
}

std::string read_input(const std::string& path, std::istream& in) {
  std::ostringstream text;
  if (path == "-") {
    text << in.rdbuf();
    return text.str();
  }
  std::ifstream file(path);
  if (!file) throw std::invalid_argument("cannot open " + path);
  text << file.rdbuf();
  return text.str();
}

DefaultTheory load_theory(const Common& common, std::istream& in) {
  ParseOptions options;
  options.reject_reserved_letters = common.strict_letters;
  return parse_theory(read_input(common.input, in), options);
}

SearchBudget budget_of(const Common& common) { return SearchBudget{common.budget}; }

Backend backend_of(const Common& common, const DefaultTheory& theory) {
  if (common.backend == "fast") return Backend::fast;
  if (common.backend == "exhaustive") return Backend::exhaustive;
  return default_backend(theory);
}

DetectorOptions detector_options(const Settings& s, const DefaultTheory& theory) {
  DetectorOptions options;
  options.backend = backend_of(s.common, theory);
  options.budget = budget_of(s.common);
  options.jobs = s.jobs;
  options.prune_by_influence = !s.no_prune;
  return options;
}

bool records(const Common& common) { return common.format == "records"; }

Json literal_array(const LiteralSet& set) {
  auto out = Json::array();
  for (const auto& l : set) out.push_back(l.to_string());
  return out;
}

std::string braces(const std::vector<std::string>& names) {
  std::string out = "{";
  for (std::size_t i = 0; i < names.size(); ++i) out += (i ? "," : "") + names[i];
  return out + "}";
}

FragmentTag parse_fragment(const std::string& name) {
  for (auto tag : {FragmentTag::DF, FragmentTag::NMU, FragmentTag::NU, FragmentTag::DNU}) {
    if (to_string(tag) == name) return tag;
  }
  throw std::invalid_argument("unknown fragment '" + name + "'; expected DF, NMU, NU or DNU");
}

int do_classify(const Settings& s, std::ostream& out, std::istream& in) {
  Fragment f = classify(load_theory(s.common, in));
  if (records(s.common)) {
    Json record;
    record["fragment"] = to_string(f.tag);
    record["normal"] = f.normal;
    out << record.dump() << "\n";
  } else {
    out << to_string(f.tag) << (f.normal ? " normal" : " non-normal") << "\n";
  }
  return kOk;
}

int do_extensions(const Settings& s, std::ostream& out, std::istream& in) {
  DefaultTheory theory = load_theory(s.common, in);
  auto exts = extensions(theory, budget_of(s.common));
  for (const auto& e : exts) {
    if (records(s.common)) {
      Json record;
      record["literals"] = literal_array(e.literals);
      record["generating"] = e.generating;
      record["inconsistent"] = e.inconsistent;
      out << record.dump() << "\n";
    } else if (e.inconsistent) {
      out << "extension inconsistent\n";
    } else {
      out << "extension " << e.literals.to_string() << " generating [";
      for (std::size_t i = 0; i < e.generating.size(); ++i) {
        out << (i ? "," : "") << e.generating[i];
      }
      out << "]\n";
    }
  }
  if (exts.empty() && !records(s.common)) out << "no extensions\n";
  return kOk;
}

int do_entails(const Settings& s, std::ostream& out, std::istream& in) {
  DefaultTheory theory = load_theory(s.common, in);
  bool yes = entails(theory, parse_literal_list(s.goal), backend_of(s.common, theory),
                     budget_of(s.common));
  if (records(s.common)) {
    Json record;
    record["goal"] = literal_array(parse_literal_list(s.goal));
    record["entailed"] = yes;
    out << record.dump() << "\n";
  } else {
    out << (yes ? "entailed" : "not entailed") << "\n";
  }
  return yes ? kOk : kNegative;
}

int do_witness(const Settings& s, std::ostream& out, std::istream& in) {
  DefaultTheory theory = load_theory(s.common, in);
  OutlierDetector detector(theory, detector_options(s, theory));
  LiteralSet L = parse_literal_list(s.outlier);
  LiteralSet S = parse_literal_list(s.witness);
  bool general = detector.is_witness(L, S);
  bool strong = general && detector.is_strong_witness(L, S);
  if (records(s.common)) {
    Json record;
    record["outlier"] = literal_array(L);
    record["witness"] = literal_array(S);
    record["general"] = general;
    record["strong"] = strong;
    out << record.dump() << "\n";
  } else {
    out << "witness: " << (general ? "yes" : "no") << " (general), " << (strong ? "yes" : "no")
        << " (strong)\n";
  }
  return general ? kOk : kNegative;
}

int do_recognize(const Settings& s, std::ostream& out, std::istream& in) {
  DefaultTheory theory = load_theory(s.common, in);
  OutlierDetector detector(theory, detector_options(s, theory));
  LiteralSet L = parse_literal_list(s.outlier);
  OutlierReport report = s.general ? detector.recognize_general(L, s.h, s.all_witnesses)
                                   : detector.recognize_strong(L, s.all_witnesses);
  out << (records(s.common) ? to_record(report) : to_text(report));
  return report.is_outlier() ? kOk : kNegative;
}

int do_enumerate(const Settings& s, std::ostream& out, std::istream& in) {
  DefaultTheory theory = load_theory(s.common, in);
  OutlierDetector detector(theory, detector_options(s, theory));
  EnumerationResult result =
      s.general ? detector.enumerate_general(s.k, s.h) : detector.enumerate_strong(s.k);
  out << (records(s.common) ? to_records(result) : to_text(result));
  return kOk;
}

int do_graph(const Settings& s, std::ostream& out, std::istream& in) {
  DefaultTheory theory = load_theory(s.common, in);
  DependencyGraph graph = build_graph(theory);
  SccDecomposition sccs = decompose(graph);
  if (s.dot) {
    out << to_dot(graph, sccs);
    return kOk;
  }
  std::vector<std::vector<std::string>> components;
  for (const auto& c : sccs.components) {
    std::vector<std::string> names;
    for (auto v : c) names.push_back(graph.letter(v));
    components.push_back(names);
  }
  if (records(s.common)) {
    Json record;
    record["components"] = components;
    auto edges = Json::array();
    for (const auto& [from, to] : graph.edges()) edges.push_back(Json::array({from, to}));
    record["edges"] = edges;
    record["tightness"] = sccs.tightness;
    out << record.dump() << "\n";
    return kOk;
  }
  for (std::size_t i = 0; i < components.size(); ++i) {
    out << "C" << i + 1 << " " << braces(components[i]) << "\n";
  }
  for (const auto& [from, to] : graph.edges()) out << "edge " << from << " -> " << to << "\n";
  out << "tightness " << sccs.tightness << "\n";
  return kOk;
}

int do_reduce(const Settings& s, std::ostream& out, std::istream& in) {
  Construction construction = parse_construction(s.construction);
  Cnf3 phi = parse_dimacs(read_input(s.common.input, in));
  out << to_text(build(construction, phi).theory);
  return kOk;
}

int do_random(const Settings& s, std::ostream& out) {
  TheoryProfile profile;
  profile.fragment = parse_fragment(s.fragment);
  profile.letters = s.letters;
  profile.rules = s.rules;
  profile.tightness = s.tightness;
  profile.seed = s.seed;
  profile.normal = s.normal;
  out << to_text(random_theory(profile));
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
        std::istream& in) {
  CLI::App app{"Outlier detection in disjunction-free default theories", "dlout"};
  app.require_subcommand(1);
  // "-h" would clash with the witness cap "--h".
  app.set_help_flag("--help", "Print this help message and exit");
  Settings s;

  auto* classify_cmd = app.add_subcommand("classify", "Print the most specific fragment");
  add_common(classify_cmd, s.common);

  auto* extensions_cmd = app.add_subcommand("extensions", "List every extension");
  add_common(extensions_cmd, s.common);

  auto* entails_cmd = app.add_subcommand("entails", "Skeptical entailment of a literal list");
  add_common(entails_cmd, s.common);
  entails_cmd->add_option("--goal", s.goal, "Comma-separated literals")->required();

  auto* witness_cmd = app.add_subcommand("witness", "Check an outlier/witness pair");
  add_common(witness_cmd, s.common);
  witness_cmd->add_option("--L", s.outlier, "Outlier literals")->required();
  witness_cmd->add_option("--S", s.witness, "Witness literals")->required();

  auto* recognize_cmd = app.add_subcommand("recognize", "Decide whether L is an outlier");
  add_common(recognize_cmd, s.common);
  recognize_cmd->add_option("--L", s.outlier, "Outlier literals")->required();
  recognize_cmd->add_flag("--general", s.general, "General outlier with witnesses up to --h");
  recognize_cmd->add_option("--h", s.h, "Witness size cap for --general")
      ->check(CLI::PositiveNumber);
  recognize_cmd->add_flag("--all-witnesses", s.all_witnesses, "Report every witness");

  auto* enumerate_cmd = app.add_subcommand("enumerate", "List every outlier with up to k facts");
  add_common(enumerate_cmd, s.common);
  auto* strong_flag = enumerate_cmd->add_flag("--strong", s.strong, "Strong outliers (default)");
  enumerate_cmd->add_flag("--general", s.general, "General outliers with witnesses up to --h")
      ->excludes(strong_flag);
  enumerate_cmd->add_option("-k", s.k, "Outlier size cap")->check(CLI::PositiveNumber);
  enumerate_cmd->add_option("--h", s.h, "Witness size cap for --general")
      ->check(CLI::PositiveNumber);
  enumerate_cmd->add_option("--jobs", s.jobs, "Worker threads; 1 runs serially")
      ->check(CLI::NonNegativeNumber);
  enumerate_cmd->add_flag("--no-prune", s.no_prune, "Disable influence pruning");

  auto* graph_cmd = app.add_subcommand("graph", "Dependency graph and its components");
  add_common(graph_cmd, s.common);
  graph_cmd->add_flag("--dot", s.dot, "Graphviz output");

  auto* reduce_cmd = app.add_subcommand("reduce", "Build a reduction theory from DIMACS CNF");
  reduce_cmd->add_option("file", s.common.input, "CNF file, or - for stdin")->required();
  reduce_cmd->add_option("--construction", s.construction, "lemma4, thm8, thm9 or thm10")
      ->required();

  auto* random_cmd = app.add_subcommand("random", "Generate a seeded random theory");
  random_cmd->add_option("--fragment", s.fragment, "DF, NMU, NU or DNU");
  random_cmd->add_option("-n", s.letters, "Letters");
  random_cmd->add_option("-m", s.rules, "Rules");
  random_cmd->add_option("-c", s.tightness, "Tightness bound");
  random_cmd->add_option("--seed", s.seed, "Seed");
  random_cmd->add_flag("--normal", s.normal, "DF only: normal rules");

  // CLI11 consumes a reversed argument vector.
  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*classify_cmd) return do_classify(s, out, in);
    if (*extensions_cmd) return do_extensions(s, out, in);
    if (*entails_cmd) return do_entails(s, out, in);
    if (*witness_cmd) return do_witness(s, out, in);
    if (*recognize_cmd) return do_recognize(s, out, in);
    if (*enumerate_cmd) return do_enumerate(s, out, in);
    if (*graph_cmd) return do_graph(s, out, in);
    if (*reduce_cmd) return do_reduce(s, out, in);
    if (*random_cmd) return do_random(s, out);
  } catch (const ParseError& e) {
    err << "dlout: parse error at " << e.what() << "\n";
    return kUsage;
  } catch (const BudgetExceeded& e) {
    err << "dlout: " << e.what() << "\n";
    return kBudget;
  } catch (const std::exception& e) {
    err << "dlout: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}

}  // namespace dlout::cli
