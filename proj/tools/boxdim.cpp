// boxdim: certified interval / circular-arc intersection representations and
// exact small-graph oracles.
//
// Exit codes: 0 success (and verified, where applicable), 1 verification
// failure, 2 input error, 3 budget exceeded.

#include <chrono>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "boxdim/circular.hpp"
#include "boxdim/coloring.hpp"
#include "boxdim/errors.hpp"
#include "boxdim/graph.hpp"
#include "boxdim/interval.hpp"
#include "boxdim/oracle.hpp"
#include "boxdim/order.hpp"
#include "boxdim/poset.hpp"
#include "boxdim/prng.hpp"
#include "boxdim/report.hpp"

namespace {

using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitVerifyFail = 1;
constexpr int kExitInput = 2;
constexpr int kExitBudget = 3;

std::string read_input(const std::string& path) {
  if (path.empty() || path == "-") {
    std::ostringstream buf;
    buf << std::cin.rdbuf();
    return buf.str();
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open input file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_output(const std::string& path, const json& j) {
  const std::string text = j.dump(2) + "\n";
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open output file: " + path);
  out << text;
}

// graph6 records start at byte 63 ('?'); an edge list starts with a count.
std::string sniff_format(const std::string& text) {
  for (char c : text) {
    if (std::isspace(static_cast<unsigned char>(c))) continue;
    return (c >= '0' && c <= '9') ? "edgelist" : "graph6";
  }
  return "graph6";
}

struct GraphInput {
  boxdim::Graph graph;
  std::string format;
};

GraphInput load_graph(const std::string& in_path, const std::string& gen_spec,
                      std::string format) {
  if (!gen_spec.empty())
    return {boxdim::generate(gen_spec), "generated"};
  const std::string text = read_input(in_path);
  if (format == "auto") format = sniff_format(text);
  if (format == "graph6") {
    std::string line = text;
    if (const auto nl = line.find('\n'); nl != std::string::npos)
      line = line.substr(0, nl);
    return {boxdim::parse_graph6(line), "graph6"};
  }
  return {boxdim::parse_edge_list(text), "edgelist"};
}

boxdim::ReportInput describe(const boxdim::Graph& g, const std::string& format) {
  boxdim::ReportInput input;
  input.format = format;
  input.hash = boxdim::hex64(boxdim::fnv1a64(boxdim::to_graph6(g)));
  input.n = g.n();
  input.m = g.edge_count();
  return input;
}

struct PipelineRun {
  boxdim::ColoringCertificate cert;
  std::vector<boxdim::IntervalSystem> interval_systems;
  std::vector<boxdim::CircularSystem> circular_systems;
  bool verified = false;
};

PipelineRun run_pipeline(const boxdim::Graph& g, bool circular) {
  PipelineRun run;
  run.cert = boxdim::make_certificate(
      g, circular ? boxdim::ReachMode::Strong : boxdim::ReachMode::Weak);
  if (circular) {
    run.circular_systems = boxdim::build_circular_systems(g, run.cert);
    run.verified =
        boxdim::verify_circular_representation(g, run.circular_systems).ok;
  } else {
    run.interval_systems = boxdim::build_interval_systems(g, run.cert);
    run.verified = boxdim::verify_representation(g, run.interval_systems).ok;
  }
  return run;
}

// ---------------------------------------------------------------------------

struct ReprArgs {
  std::string mode;
  std::string in_path;
  std::string gen_spec;
  std::string format = "auto";
  std::string out_path;
  std::uint64_t seed = 0;
  bool timing = false;
};

int cmd_repr(const ReprArgs& args) {
  const auto started = std::chrono::steady_clock::now();
  const auto input = load_graph(args.in_path, args.gen_spec, args.format);
  const bool circular = args.mode == "circular";
  const auto run = run_pipeline(input.graph, circular);

  boxdim::Report report;
  report.input = describe(input.graph, input.format);
  report.mode = args.mode;
  report.seed = args.seed;
  report.order = run.cert.order.sequence();
  report.coloring = run.cert.coloring;
  report.interval_systems = run.interval_systems;
  report.circular_systems = run.circular_systems;
  report.verified = run.verified;
  const int c = run.cert.coloring.num_colors;
  if (circular) {
    report.bounds["col2_upper"] = boxdim::coloring_number_under_order(
        input.graph, run.cert.order, boxdim::ReachMode::Strong, 2);
    report.bounds["3c"] = 3ll * c;
  } else {
    report.bounds["wcol2_upper"] = boxdim::coloring_number_under_order(
        input.graph, run.cert.order, boxdim::ReachMode::Weak, 2);
    report.bounds["wcolstar2_upper"] = c;
    report.bounds["2c"] = 2ll * c;
  }
  if (args.timing)
    report.total_ms = std::chrono::duration<double, std::milli>(
                          std::chrono::steady_clock::now() - started)
                          .count();
  write_output(args.out_path, boxdim::to_json(report));
  return run.verified ? kExitOk : kExitVerifyFail;
}

// ---------------------------------------------------------------------------

struct OracleArgs {
  std::string target;
  std::string in_path;
  std::string gen_spec;
  std::string format = "auto";
  std::string out_path;
  int r = 2;
  int max_n = 0;               // 0 = per-target default
  std::uint64_t max_candidates = 0;
  double time_hint = 0.0;
};

boxdim::OracleBudget budget_for(const OracleArgs& args, int default_n) {
  boxdim::OracleBudget b;
  b.max_n = args.max_n > 0 ? args.max_n : default_n;
  if (args.max_candidates > 0) b.max_candidates = args.max_candidates;
  b.time_hint_seconds = args.time_hint;
  return b;
}

int cmd_oracle(const OracleArgs& args) {
  json j;
  j["target"] = args.target;
  try {
    if (args.target == "posetdim") {
      const auto poset = boxdim::parse_poset(read_input(args.in_path));
      const auto dim = boxdim::exact_poset_dimension(poset, budget_for(args, 8));
      j["value"] = dim.value;
      j["realizer"] = dim.realizer;
    } else {
      const auto input = load_graph(args.in_path, args.gen_spec, args.format);
      const auto& g = input.graph;
      if (args.target == "box" || args.target == "cdim") {
        const auto cover = args.target == "box"
                               ? boxdim::exact_boxicity(g, budget_for(args, 7))
                               : boxdim::exact_circular_dimension(
                                     g, budget_for(args, 6));
        j["value"] = cover.value;
        json factors = json::array();
        for (const auto& factor : cover.factors)
          factors.push_back(boxdim::to_graph6(factor));
        j["factors"] = factors;
      } else if (args.target == "chi") {
        j["value"] = boxdim::exact_chromatic_number(g, budget_for(args, 16));
      } else if (args.target == "wcol" || args.target == "col") {
        const auto mode = args.target == "wcol" ? boxdim::ReachMode::Weak
                                                : boxdim::ReachMode::Strong;
        const auto result = boxdim::exact_coloring_number(
            g, mode, args.r, budget_for(args, 9));
        j["value"] = result.value;
        j["r"] = args.r;
        j["witness_order"] = result.witness.sequence();
      } else {  // wcolstar
        const auto result = boxdim::exact_wcol_star2(g, budget_for(args, 7));
        j["value"] = result.value;
        j["witness_order"] = result.witness.sequence();
      }
    }
  } catch (const boxdim::BudgetExceeded& e) {
    j["error"] = "budget exceeded";
    j["message"] = e.what();
    if (e.best_upper()) j["best_upper"] = *e.best_upper();
    if (e.best_lower()) j["best_lower"] = *e.best_lower();
    write_output(args.out_path, j);
    return kExitBudget;
  }
  write_output(args.out_path, j);
  return kExitOk;
}

// ---------------------------------------------------------------------------

struct CorpusArgs {
  std::uint64_t count = 0;
  int n_min = 5;
  int n_max = 20;
  double p = 0.3;
  std::uint64_t seed = 0;
  std::string mode;
  std::string out_path;
  bool items = false;
};

int cmd_corpus(const CorpusArgs& args) {
  if (args.n_min < 1 || args.n_min > args.n_max)
    throw std::invalid_argument("corpus: need 1 <= n-min <= n-max");
  if (!(args.p >= 0.0 && args.p <= 1.0))
    throw std::invalid_argument("corpus: p must be in [0, 1]");
  const bool circular = args.mode == "circular";

  boxdim::SplitMix64 master(args.seed);
  std::uint64_t verified = 0;
  std::map<int, std::uint64_t> c_histogram;
  long long max_systems = 0;
  json items = json::array();

  for (std::uint64_t i = 0; i < args.count; ++i) {
    const int n = args.n_min +
                  static_cast<int>(master.next_below(
                      static_cast<std::uint64_t>(args.n_max - args.n_min) + 1));
    const std::uint64_t item_seed = master.next();
    const boxdim::Graph g = boxdim::make_gnp(n, args.p, item_seed);
    const auto run = run_pipeline(g, circular);
    const int c = run.cert.coloring.num_colors;
    const long long systems = circular ? 3ll * c : 2ll * c;
    if (run.verified) ++verified;
    ++c_histogram[c];
    max_systems = std::max(max_systems, systems);
    if (args.items)
      items.push_back({{"index", i},
                       {"n", n},
                       {"m", g.edge_count()},
                       {"seed", item_seed},
                       {"c", c},
                       {"systems", systems},
                       {"verified", run.verified}});
  }

  json summary;
  summary["mode"] = args.mode;
  summary["count"] = args.count;
  summary["verified"] = verified;
  summary["all_verified"] = verified == args.count;
  summary["p"] = args.p;
  summary["seed"] = args.seed;
  summary["n_min"] = args.n_min;
  summary["n_max"] = args.n_max;
  json hist;
  for (const auto& [c, cnt] : c_histogram) hist[std::to_string(c)] = cnt;
  summary["c_histogram"] = hist;
  summary[circular ? "max_3c" : "max_2c"] = max_systems;
  if (args.items) summary["items"] = items;
  write_output(args.out_path, summary);
  return verified == args.count ? kExitOk : kExitVerifyFail;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"certified intersection representations of graphs"};
  app.require_subcommand(1);

  ReprArgs repr;
  auto* repr_cmd = app.add_subcommand(
      "repr", "build and verify an interval / circular-arc representation");
  repr_cmd->add_option("--mode", repr.mode, "interval or circular")
      ->required()
      ->check(CLI::IsMember({"interval", "circular"}));
  repr_cmd->add_option("--in", repr.in_path, "input file (default: stdin)");
  repr_cmd->add_option("--gen", repr.gen_spec, "generate input, e.g. cycle(5)");
  repr_cmd->add_option("--format", repr.format, "graph6 | edgelist | auto")
      ->check(CLI::IsMember({"graph6", "edgelist", "auto"}));
  repr_cmd->add_option("--out", repr.out_path, "output file (default: stdout)");
  repr_cmd->add_option("--seed", repr.seed, "seed recorded in the report");
  repr_cmd->add_flag("--timing", repr.timing, "include wall-clock timing");

  OracleArgs oracle;
  auto* oracle_cmd =
      app.add_subcommand("oracle", "exact brute-force values on small inputs");
  oracle_cmd
      ->add_option("target", oracle.target,
                   "box | cdim | chi | wcol | col | wcolstar | posetdim")
      ->required()
      ->check(CLI::IsMember(
          {"box", "cdim", "chi", "wcol", "col", "wcolstar", "posetdim"}));
  oracle_cmd->add_option("--in", oracle.in_path, "input file (default: stdin)");
  oracle_cmd->add_option("--gen", oracle.gen_spec, "generate input");
  oracle_cmd->add_option("--format", oracle.format, "graph6 | edgelist | auto")
      ->check(CLI::IsMember({"graph6", "edgelist", "auto"}));
  oracle_cmd->add_option("--out", oracle.out_path, "output file");
  oracle_cmd->add_option("-r,--radius", oracle.r, "radius for wcol / col")
      ->check(CLI::NonNegativeNumber);
  oracle_cmd->add_option("--max-n", oracle.max_n, "override budget max n");
  oracle_cmd->add_option("--max-candidates", oracle.max_candidates,
                         "override budget candidate count");
  oracle_cmd->add_option("--time-hint", oracle.time_hint,
                         "wall-clock budget in seconds");

  CorpusArgs corpus;
  auto* corpus_cmd = app.add_subcommand(
      "corpus", "run the representation pipeline over seeded random graphs");
  corpus_cmd->add_option("--count", corpus.count, "number of graphs")
      ->required();
  corpus_cmd->add_option("--n-min", corpus.n_min, "smallest vertex count");
  corpus_cmd->add_option("--n-max", corpus.n_max, "largest vertex count");
  corpus_cmd->add_option("--p", corpus.p, "edge probability");
  corpus_cmd->add_option("--seed", corpus.seed, "master seed (default 0)");
  corpus_cmd->add_option("--mode", corpus.mode, "interval or circular")
      ->required()
      ->check(CLI::IsMember({"interval", "circular"}));
  corpus_cmd->add_option("--out", corpus.out_path, "output file");
  corpus_cmd->add_flag("--items", corpus.items, "include per-item results");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInput;
  }

  try {
    if (repr_cmd->parsed()) return cmd_repr(repr);
    if (oracle_cmd->parsed()) return cmd_oracle(oracle);
    return cmd_corpus(corpus);
  } catch (const boxdim::BudgetExceeded& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitBudget;
  } catch (const boxdim::FormatError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const std::logic_error& e) {
    // The constructions re-verify themselves; a breach is a bug, not input.
    std::cerr << "verification failure: " << e.what() << "\n";
    return kExitVerifyFail;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  }
}
