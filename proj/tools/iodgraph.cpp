// Copyright 2026 The iodgraph Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "iodg/analysis.hpp"
#include "iodg/census.hpp"
#include "iodg/constructions.hpp"
#include "iodg/crossover.hpp"
#include "iodg/evolution.hpp"
#include "iodg/graph.hpp"
#include "iodg/partition.hpp"
#include "iodg/serialize.hpp"

namespace {

using json = nlohmann::ordered_json;
using namespace iodg;

// Exit codes: 0 ok, 1 usage, 2 validation/parse failure,
// 3 incompatibility/infeasibility, 4 budget exceeded.
int exit_code(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidArgument:
      return 1;
    case ErrorCode::Validation:
    case ErrorCode::Parse:
      return 2;
    case ErrorCode::Incompatible:
    case ErrorCode::Infeasible:
      return 3;
    case ErrorCode::BudgetExceeded:
      return 4;
  }
  return 1;
}

const char* code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidArgument:
      return "invalid-argument";
    case ErrorCode::Validation:
      return "validation";
    case ErrorCode::Parse:
      return "parse";
    case ErrorCode::Incompatible:
      return "incompatible";
    case ErrorCode::Infeasible:
      return "infeasible";
    case ErrorCode::BudgetExceeded:
      return "budget-exceeded";
  }
  return "error";
}

[[noreturn]] void fail(const Error& e) {
  json err;
  err["error"]["code"] = code_name(e.code());
  err["error"]["message"] = e.what();
  std::cerr << err.dump() << "\n";
  std::exit(exit_code(e.code()));
}

std::string slurp(const std::string& path) {
  if (path == "-") {
    std::ostringstream buf;
    buf << std::cin.rdbuf();
    return buf.str();
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::Parse, "cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::InvalidArgument, "cannot write " + path);
  out << text;
}

void emit_graph(const IODGraph& graph, const std::string& format,
                std::ostream& out) {
  out << (format == "dot" ? to_dot(graph) : to_json(graph));
}

json graph_to_json_value(const IODGraph& graph) {
  return json::parse(to_json(graph));
}

std::vector<std::string> split_ids(const std::string& csv) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : csv) {
    if (c == ',') {
      if (!cur.empty()) out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  if (!cur.empty()) out.push_back(cur);
  return out;
}

json partition_json(const IODGraph& graph, const IOPartition& p) {
  json j;
  j["psi"] = json::array();
  for (int v : p.psi) j["psi"].push_back(graph.node(v).id);
  j["omega"] = json::array();
  for (int v : p.omega) j["omega"].push_back(graph.node(v).id);
  return j;
}

json membrane_json(const CrossoverMembrane& m) {
  json j;
  j["edges"] = json::array();
  for (const auto& [s, d] : m.edges) j["edges"].push_back({s, d});
  auto pairs = [](const std::vector<std::pair<IdEdge, IdEdge>>& ps) {
    json arr = json::array();
    for (const auto& [a, b] : ps) {
      arr.push_back({{a.first, a.second}, {b.first, b.second}});
    }
    return arr;
  };
  j["forward_pairs"] = pairs(m.forward_pairs);
  j["backward_pairs"] = pairs(m.backward_pairs);
  return j;
}

std::vector<std::pair<IdEdge, IdEdge>> pairs_from_json(const json& arr,
                                                       const char* what) {
  std::vector<std::pair<IdEdge, IdEdge>> out;
  for (const auto& item : arr) {
    if (!item.is_array() || item.size() != 2 || item[0].size() != 2 ||
        item[1].size() != 2) {
      throw Error(ErrorCode::Parse,
                  std::string(what) + " entries must be [[s,d],[s,d]] pairs");
    }
    out.push_back({{item[0][0].get<std::string>(),
                    item[0][1].get<std::string>()},
                   {item[1][0].get<std::string>(),
                    item[1][1].get<std::string>()}});
  }
  return out;
}

json record_json(const CrossoverRecord& rec) {
  json j;
  j["format_version"] = kFormatVersion;
  j["input_parent"] = rec.input_parent;
  j["output_parent"] = rec.output_parent;
  j["psi"] = rec.psi;
  j["psi_prime"] = rec.psi_prime;
  j["seed"] = rec.seed;
  j["strict_ids"] = rec.strict_ids;
  j["membrane"] = membrane_json(rec.membrane);
  j["child"] = graph_to_json_value(rec.child);
  return j;
}

void stream_header(const std::string& stream, std::ostream& out) {
  json j;
  j["format_version"] = kFormatVersion;
  j["stream"] = stream;
  out << j.dump() << "\n";
}

// ---- subcommands ----------------------------------------------------------

struct ValidateArgs {
  std::string path;
};

int run_validate(const ValidateArgs& args) {
  IODGraph graph = load_graph(args.path);
  ValidationReport report = validate(graph);
  json j;
  j["format_version"] = kFormatVersion;
  j["ok"] = report.ok;
  j["violations"] = json::array();
  for (const auto& v : report.violations) {
    j["violations"].push_back(
        {{"kind", std::string(to_string(v.kind))}, {"detail", v.detail}});
  }
  std::cout << j.dump(2) << "\n";
  return report.ok ? 0 : 2;
}

struct ClassifyArgs {
  std::string path;
};

int run_classify(const ClassifyArgs& args) {
  IODGraph graph = load_graph(args.path);
  json j;
  j["format_version"] = kFormatVersion;
  j["informativeness"] = std::string(to_string(informativeness(graph)));
  j["actionability"] = std::string(to_string(actionability(graph)));
  DanglingReport report = no_dangling_nodes(graph);
  j["no_dangling_nodes"] = report.satisfied;
  j["dangling"] = json::array();
  for (int v : report.dangling) j["dangling"].push_back(graph.node(v).id);
  std::cout << j.dump(2) << "\n";
  return 0;
}

struct PartitionsArgs {
  std::string path;
  std::string filter = "all";
  std::string layers_path;
  std::uint64_t limit = 0;
  bool count_only = false;
};

int run_partitions(const PartitionsArgs& args) {
  IODGraph graph = load_graph(args.path);
  PartitionFilter filter = partition_filter_from_string(args.filter);
  std::optional<std::unordered_map<std::string, int>> layers;
  if (!args.layers_path.empty()) {
    json j = json::parse(slurp(args.layers_path));
    layers.emplace();
    for (auto it = j.begin(); it != j.end(); ++it) {
      (*layers)[it.key()] = it.value().get<int>();
    }
  }
  const auto* layer_ptr = layers ? &*layers : nullptr;
  if (args.count_only) {
    json j;
    j["format_version"] = kFormatVersion;
    j["count"] = count_partitions(graph, filter, layer_ptr);
    std::cout << j.dump() << "\n";
    return 0;
  }
  stream_header("partitions", std::cout);
  std::uint64_t emitted = 0;
  for_each_partition(
      graph, filter,
      [&](const IOPartition& p) {
        std::cout << partition_json(graph, p).dump() << "\n";
        ++emitted;
        return args.limit == 0 || emitted < args.limit;
      },
      layer_ptr);
  return 0;
}

struct MembranesArgs {
  std::string path_a, path_b;
  std::string psi_a, psi_b;
  bool dedupe = false;
  std::uint64_t limit = 0;
  bool strict_ids = false;
};

int run_membranes(const MembranesArgs& args) {
  IODGraph a = load_graph(args.path_a);
  IODGraph b = load_graph(args.path_b);
  IOPartition pa = make_partition_ids(a, split_ids(args.psi_a));
  IOPartition pb = make_partition_ids(b, split_ids(args.psi_b));
  stream_header("membranes", std::cout);
  std::uint64_t emitted = 0;
  for_each_crossover_membrane(
      a, pa, b, pb, args.dedupe,
      [&](const CrossoverMembrane& m) {
        std::cout << membrane_json(m).dump() << "\n";
        ++emitted;
        return args.limit == 0 || emitted < args.limit;
      },
      args.strict_ids);
  return 0;
}

struct CrossoverArgs {
  std::string path_a, path_b;
  std::string psi_a, psi_b;
  bool auto_contiguous = false;
  bool exhaustive = false;
  std::string matching = "sequential";
  std::string matching_file;
  bool tag_constrained = false;
  bool strict_ids = false;
  std::uint64_t seed = 0;
  std::uint64_t max_attempts = 4096;
  std::string out, record_path;
  std::string format = "json";
};

MatchingSpec matching_from_args(const CrossoverArgs& args) {
  MatchingSpec spec;
  spec.tag_constrained = args.tag_constrained;
  if (args.matching == "sequential") {
    spec.mode = MatchingMode::Sequential;
  } else if (args.matching == "random") {
    spec.mode = MatchingMode::SeededRandom;
    spec.seed = args.seed;
  } else if (args.matching == "file") {
    spec.mode = MatchingMode::Explicit;
    json j = json::parse(slurp(args.matching_file));
    spec.forward_pairs =
        pairs_from_json(j.value("forward_pairs", json::array()),
                        "forward_pairs");
    spec.backward_pairs =
        pairs_from_json(j.value("backward_pairs", json::array()),
                        "backward_pairs");
  } else {
    throw Error(ErrorCode::InvalidArgument,
                "unknown matching mode: " + args.matching);
  }
  return spec;
}

int run_crossover(const CrossoverArgs& args) {
  IODGraph a = load_graph(args.path_a);
  IODGraph b = load_graph(args.path_b);
  MatchingSpec spec = matching_from_args(args);

  CrossoverRecord rec;
  if (args.auto_contiguous) {
    CrossoverStrategy strategy;
    strategy.search = args.exhaustive ? CrossoverStrategy::Search::Exhaustive
                                      : CrossoverStrategy::Search::Seeded;
    strategy.matching = spec;
    strategy.max_attempts = args.max_attempts;
    strategy.strict_ids = args.strict_ids;
    rec = crossover(a, b, strategy, args.seed, args.path_a, args.path_b);
  } else {
    if (args.psi_a.empty() || args.psi_b.empty()) {
      throw Error(ErrorCode::InvalidArgument,
                  "pass --psi-a and --psi-b or --auto-contiguous");
    }
    IOPartition pa = make_partition_ids(a, split_ids(args.psi_a));
    IOPartition pb = make_partition_ids(b, split_ids(args.psi_b));
    CrossoverMembrane m =
        build_crossover_membrane(a, pa, b, pb, spec, args.strict_ids);
    rec.child = crossover_child(a, pa, b, pb, m, args.strict_ids);
    rec.input_parent = args.path_a;
    rec.output_parent = args.path_b;
    for (int v : pa.psi) rec.psi.push_back(a.node(v).id);
    for (int v : pb.psi) rec.psi_prime.push_back(b.node(v).id);
    rec.membrane = std::move(m);
    rec.seed = args.seed;
    rec.strict_ids = args.strict_ids;
  }

  std::ostringstream child_text;
  emit_graph(rec.child, args.format, child_text);
  if (args.out.empty()) {
    std::cout << child_text.str();
  } else {
    write_file(args.out, child_text.str());
  }
  if (!args.record_path.empty()) {
    write_file(args.record_path, record_json(rec).dump(2) + "\n");
  }
  return 0;
}

struct ConstructArgs {
  std::string kind;
  int j = 1, k = 1;
  std::string target = "fully";
  std::string out_dir = ".";
  std::string format = "json";
};

int run_construct(const ConstructArgs& args) {
  namespace fs = std::filesystem;
  fs::create_directories(args.out_dir);
  auto path_of = [&](const std::string& name) {
    std::string ext = args.format == "dot" ? ".dot" : ".json";
    return (fs::path(args.out_dir) / (name + ext)).string();
  };
  auto save = [&](const std::string& name, const IODGraph& graph) {
    std::ostringstream text;
    emit_graph(graph, args.format, text);
    write_file(path_of(name), text.str());
  };

  json summary;
  summary["format_version"] = kFormatVersion;
  summary["construction"] = args.kind;

  auto describe = [&](const ConstructionOutput& c, const std::string& prefix,
                      json& into) {
    IODGraph child = make_child(c);
    save(prefix + "input_parent", c.input_parent);
    save(prefix + "output_parent", c.output_parent);
    save(prefix + "child", child);
    into["files"] = {{"input_parent", path_of(prefix + "input_parent")},
                     {"output_parent", path_of(prefix + "output_parent")},
                     {"child", path_of(prefix + "child")}};
    into["parent_informativeness"] = {
        std::string(to_string(informativeness(c.input_parent))),
        std::string(to_string(informativeness(c.output_parent)))};
    into["expected_child"] = std::string(to_string(c.expected_child));
    into["child_informativeness"] =
        std::string(to_string(informativeness(child)));
  };

  if (args.kind == "theorem1") {
    ConstructionOutput c = build_theorem1_pair(
        args.j, args.k, informativeness_from_string(args.target));
    describe(c, "", summary);
  } else if (args.kind == "theorem5") {
    ConstructionOutput c = build_theorem5_pair(args.j);
    describe(c, "", summary);
  } else if (args.kind == "competing") {
    CompetingConventionsPair pair = build_competing_conventions_pair();
    describe(pair.bad, "bad_", summary["bad"]);
    describe(pair.good, "good_", summary["good"]);
  } else if (args.kind == "non-to-fully") {
    ConstructionOutput c = build_non_to_fully_pair();
    describe(c, "", summary);
  } else {
    throw Error(ErrorCode::InvalidArgument,
                "unknown construction: " + args.kind);
  }
  std::cout << summary.dump(2) << "\n";
  return 0;
}

struct CensusArgs {
  int inputs = 3, outputs = 2, intermediates = 5;
  std::string config_path;
  std::uint64_t sample_n = 0;
  std::uint64_t seed = 0;
  std::uint64_t budget = 1ull << 26;
  int threads = 0;
  std::string out;
  bool quiet = false;
};

CensusConfig census_config_from_json(const json& j) {
  CensusConfig c = default_census_config(j.value("num_inputs", 3),
                                         j.value("num_outputs", 2),
                                         j.value("num_intermediates", 5));
  if (j.contains("input_wiring")) {
    c.input_wiring = j["input_wiring"].get<std::vector<int>>();
  }
  if (j.contains("output_wiring")) {
    c.output_wiring = j["output_wiring"].get<std::vector<int>>();
  }
  if (j.contains("variable_universe")) {
    c.slots.clear();
    for (const auto& s : j["variable_universe"]) {
      c.slots.emplace_back(s[0].get<int>(), s[1].get<int>());
    }
  }
  if (j.contains("mode")) {
    const json& m = j["mode"];
    if (m.value("kind", "exhaustive") == "sample") {
      c.mode = CensusConfig::Mode::Sample;
      c.sample_n = m.value("n", std::uint64_t{100});
      c.seed = m.value("seed", std::uint64_t{0});
    }
  }
  return c;
}

int run_census_cmd(const CensusArgs& args) {
  CensusConfig config;
  if (!args.config_path.empty()) {
    config = census_config_from_json(json::parse(slurp(args.config_path)));
  } else {
    config = default_census_config(args.inputs, args.outputs,
                                   args.intermediates);
  }
  if (args.sample_n > 0) {
    config.mode = CensusConfig::Mode::Sample;
    config.sample_n = args.sample_n;
    config.seed = args.seed;
  }
  config.budget = args.budget;
  config.threads = args.threads;

  CensusProgress progress;
  if (!args.quiet) {
    progress = [](std::uint64_t done, std::uint64_t total) {
      std::cerr << "\rcensus: " << done << "/" << total << std::flush;
      if (done == total) std::cerr << "\n";
    };
  }
  CensusTable table = run_census(config, progress);
  if (args.out.empty()) {
    emit_csv(table, std::cout);
  } else {
    std::ostringstream buf;
    emit_csv(table, buf);
    write_file(args.out, buf.str());
  }
  return 0;
}

struct EvolveArgs {
  std::string config_path;
  std::string population_path;
  std::optional<std::uint64_t> seed;
};

int run_evolve(const EvolveArgs& args) {
  json cfg = json::parse(slurp(args.config_path));
  EvolutionConfig config;
  config.generations = cfg.value("generations", std::size_t{0});
  if (cfg.contains("fitness")) {
    const json& f = cfg["fitness"];
    std::string kind = f.value("kind", "informativeness-rank");
    if (kind == "target-reachability") {
      config.fitness = EvolutionConfig::Fitness::TargetReachability;
      for (const auto& p : f.value("pairs", json::array())) {
        config.target_pairs.emplace_back(p[0].get<std::string>(),
                                         p[1].get<std::string>());
      }
    } else if (kind != "informativeness-rank") {
      throw Error(ErrorCode::InvalidArgument, "unknown fitness: " + kind);
    }
  }
  if (cfg.contains("strategy")) {
    const json& s = cfg["strategy"];
    config.strategy.search = s.value("search", "seeded") == "exhaustive"
                                 ? CrossoverStrategy::Search::Exhaustive
                                 : CrossoverStrategy::Search::Seeded;
    config.strategy.filter =
        partition_filter_from_string(s.value("filter", "contiguous"));
    config.strategy.max_attempts =
        s.value("max_attempts", std::uint64_t{4096});
    config.strategy.strict_ids = s.value("strict_ids", false);
    if (s.contains("matching")) {
      const json& m = s["matching"];
      std::string mode = m.value("mode", "sequential");
      if (mode == "random") {
        config.strategy.matching.mode = MatchingMode::SeededRandom;
      } else if (mode == "explicit") {
        config.strategy.matching.mode = MatchingMode::Explicit;
        config.strategy.matching.forward_pairs = pairs_from_json(
            m.value("forward_pairs", json::array()), "forward_pairs");
        config.strategy.matching.backward_pairs = pairs_from_json(
            m.value("backward_pairs", json::array()), "backward_pairs");
      } else if (mode != "sequential") {
        throw Error(ErrorCode::InvalidArgument,
                    "unknown matching mode: " + mode);
      }
      config.strategy.matching.tag_constrained =
          m.value("tag_constrained", false);
    }
  }
  config.seed = cfg.value("seed", std::uint64_t{0});
  if (args.seed) config.seed = *args.seed;

  json pop_json = json::parse(slurp(args.population_path));
  std::vector<IODGraph> population;
  for (const auto& gj : pop_json.at("graphs")) {
    population.push_back(graph_from_json(gj.dump()));
  }

  auto history = evolve(std::move(population), config);
  stream_header("evolve", std::cout);
  for (const auto& gen : history) {
    json j;
    j["generation"] = gen.generation;
    j["distribution"] = {{"non", gen.informativeness[0]},
                         {"partially", gen.informativeness[1]},
                         {"very", gen.informativeness[2]},
                         {"fully", gen.informativeness[3]}};
    j["best_fitness"] = gen.best_fitness;
    std::cout << j.dump() << "\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"IOD graph crossover toolkit"};
  app.require_subcommand(1);

  ValidateArgs validate_args;
  auto* validate_cmd =
      app.add_subcommand("validate", "check a graph against the invariants");
  validate_cmd->add_option("graph", validate_args.path, "graph file (JSON or .dot, - for stdin)")
      ->required();

  ClassifyArgs classify_args;
  auto* classify_cmd = app.add_subcommand(
      "classify", "informativeness, actionability, dangling nodes");
  classify_cmd->add_option("graph", classify_args.path)->required();

  PartitionsArgs partitions_args;
  auto* partitions_cmd =
      app.add_subcommand("partitions", "enumerate IO partitions");
  partitions_cmd->add_option("graph", partitions_args.path)->required();
  partitions_cmd->add_option("--filter", partitions_args.filter,
                             "all|input-contiguous|output-contiguous|"
                             "contiguous|layer-respecting");
  partitions_cmd->add_option("--layers", partitions_args.layers_path,
                             "JSON map node id -> layer");
  partitions_cmd->add_option("--limit", partitions_args.limit);
  partitions_cmd->add_flag("--count-only", partitions_args.count_only);

  MembranesArgs membranes_args;
  auto* membranes_cmd =
      app.add_subcommand("membranes", "enumerate crossover membranes");
  membranes_cmd->add_option("input-parent", membranes_args.path_a)->required();
  membranes_cmd->add_option("output-parent", membranes_args.path_b)
      ->required();
  membranes_cmd->add_option("--psi-a", membranes_args.psi_a,
                            "comma-separated psi of the input parent")
      ->required();
  membranes_cmd->add_option("--psi-b", membranes_args.psi_b,
                            "comma-separated psi of the output parent")
      ->required();
  membranes_cmd->add_flag("--dedupe", membranes_args.dedupe);
  membranes_cmd->add_option("--limit", membranes_args.limit);
  membranes_cmd->add_flag("--strict-ids", membranes_args.strict_ids);

  CrossoverArgs crossover_args;
  auto* crossover_cmd = app.add_subcommand("crossover", "produce a child");
  crossover_cmd->add_option("input-parent", crossover_args.path_a)->required();
  crossover_cmd->add_option("output-parent", crossover_args.path_b)
      ->required();
  crossover_cmd->add_option("--psi-a", crossover_args.psi_a);
  crossover_cmd->add_option("--psi-b", crossover_args.psi_b);
  crossover_cmd->add_flag("--auto-contiguous",
                          crossover_args.auto_contiguous,
                          "search for contiguous compatible partitions");
  crossover_cmd->add_flag("--exhaustive", crossover_args.exhaustive);
  crossover_cmd->add_option("--matching", crossover_args.matching,
                            "sequential|random|file");
  crossover_cmd->add_option("--matching-file", crossover_args.matching_file);
  crossover_cmd->add_flag("--tag-constrained",
                          crossover_args.tag_constrained);
  crossover_cmd->add_flag("--strict-ids", crossover_args.strict_ids);
  crossover_cmd->add_option("--seed", crossover_args.seed);
  crossover_cmd->add_option("--max-attempts", crossover_args.max_attempts);
  crossover_cmd->add_option("--out", crossover_args.out, "child file");
  crossover_cmd->add_option("--record", crossover_args.record_path,
                            "provenance record file");
  crossover_cmd->add_option("--format", crossover_args.format, "json|dot");

  ConstructArgs construct_args;
  auto* construct_cmd =
      app.add_subcommand("construct", "build a named example pair");
  construct_cmd
      ->add_option("kind", construct_args.kind,
                   "theorem1|theorem5|competing|non-to-fully")
      ->required();
  construct_cmd->add_option("--j", construct_args.j);
  construct_cmd->add_option("--k", construct_args.k);
  construct_cmd->add_option("--target", construct_args.target,
                            "non|partially|very|fully");
  construct_cmd->add_option("--out-dir", construct_args.out_dir);
  construct_cmd->add_option("--format", construct_args.format, "json|dot");

  CensusArgs census_args;
  auto* census_cmd =
      app.add_subcommand("census", "informativeness by edge count");
  census_cmd->add_option("--inputs", census_args.inputs);
  census_cmd->add_option("--outputs", census_args.outputs);
  census_cmd->add_option("--intermediates", census_args.intermediates);
  census_cmd->add_option("--config", census_args.config_path,
                         "JSON config (overrides the count flags)");
  census_cmd->add_option("--sample", census_args.sample_n,
                         "stratified draws per edge count");
  census_cmd->add_option("--seed", census_args.seed);
  census_cmd->add_option("--budget", census_args.budget);
  census_cmd->add_option("--threads", census_args.threads);
  census_cmd->add_option("--out", census_args.out, "CSV file");
  census_cmd->add_flag("--quiet", census_args.quiet, "no progress on stderr");

  EvolveArgs evolve_args;
  std::uint64_t evolve_seed = 0;
  auto* evolve_cmd = app.add_subcommand("evolve", "run the generational loop");
  evolve_cmd->add_option("--config", evolve_args.config_path)->required();
  evolve_cmd->add_option("--population", evolve_args.population_path)
      ->required();
  auto* seed_opt = evolve_cmd->add_option("--seed", evolve_seed,
                                          "override the config seed");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    json err;
    err["error"]["code"] = "usage";
    err["error"]["message"] = e.what();
    std::cerr << err.dump() << "\n";
    return 1;
  }
  if (seed_opt->count() > 0) evolve_args.seed = evolve_seed;

  try {
    if (validate_cmd->parsed()) return run_validate(validate_args);
    if (classify_cmd->parsed()) return run_classify(classify_args);
    if (partitions_cmd->parsed()) return run_partitions(partitions_args);
    if (membranes_cmd->parsed()) return run_membranes(membranes_args);
    if (crossover_cmd->parsed()) return run_crossover(crossover_args);
    if (construct_cmd->parsed()) return run_construct(construct_args);
    if (census_cmd->parsed()) return run_census_cmd(census_args);
    if (evolve_cmd->parsed()) return run_evolve(evolve_args);
  } catch (const Error& e) {
    fail(e);
  } catch (const nlohmann::json::exception& e) {
    fail(Error(ErrorCode::Parse, e.what()));
  }
  return 1;
}
