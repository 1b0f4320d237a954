// infocov command line: graph generation, seed selection, coverage
// evaluation and benchmark sweeps with machine-readable output.
//
// All commands are deterministic for a given --seed, including across
// INFOCOV_THREADS settings; wall-clock columns only appear with --timing.

#include <charconv>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "infocov/coverage.hpp"
#include "infocov/diffusion.hpp"
#include "infocov/generate.hpp"
#include "infocov/graph.hpp"
#include "infocov/selection.hpp"
#include "sha1.hpp"

using namespace infocov;
using nlohmann::json;

namespace {

std::string fmt(double v) {
  char buf[32];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, ptr);
}

std::string csv_quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += "\"\"";
    else out.push_back(c);
  }
  out += "\"";
  return out;
}

void write_text(const std::string& path, const std::string& text) {
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write output file '" + path + "'");
  out << text;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open file '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

struct CommonOptions {
  std::string graph_path;
  std::string model_name = "ic";
  std::string weights;
  double lambda = 1.0;
  std::uint32_t replications = 10000;
  std::uint64_t seed = 0;
  std::string out;
  std::string format = "csv";
  bool timing = false;
};

void add_common(CLI::App* cmd, CommonOptions& opt, bool with_estimator) {
  cmd->add_option("--graph", opt.graph_path, "edge-list graph file")
      ->required()
      ->check(CLI::ExistingFile);
  cmd->add_option("--model", opt.model_name, "diffusion model")
      ->check(CLI::IsMember({"ic", "lt"}))
      ->capture_default_str();
  cmd->add_option("--weights", opt.weights,
                  "parameter scheme: uniform:<p>, trivalency or wc "
                  "(omit to use weights from the file)");
  if (with_estimator) {
    cmd->add_option("--lambda", opt.lambda, "informed-node weight in [0,1]")
        ->check(CLI::Range(0.0, 1.0))
        ->capture_default_str();
    cmd->add_option("--replications", opt.replications, "Monte Carlo rounds per estimate")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
  }
  cmd->add_option("--seed", opt.seed, "master seed")->capture_default_str();
  cmd->add_option("--out", opt.out, "output path (stdout when omitted)");
  cmd->add_option("--format", opt.format, "output format")
      ->check(CLI::IsMember({"csv", "json"}))
      ->capture_default_str();
  cmd->add_flag("--timing", opt.timing, "append wall-clock columns (non-reproducible)");
}

DirectedGraph prepare_graph(const CommonOptions& opt, Model model) {
  DirectedGraph g = load_graph_file(opt.graph_path);
  if (!opt.weights.empty())
    g = assign_weights(std::move(g), WeightScheme::parse(opt.weights, opt.seed));
  if (model == Model::independent_cascade && !g.has_ic_probs())
    throw std::runtime_error(
        "--weights: graph has no ic probabilities; pass uniform:<p>, trivalency or wc");
  if (model == Model::linear_threshold) {
    if (!g.has_lt_weights())
      throw std::runtime_error("--weights: graph has no lt weights; pass wc or a 4-column file");
    const auto violations = validate_lt(g);
    if (!violations.empty())
      throw std::runtime_error("graph is invalid for lt: node " +
                               g.label(violations.front().node) +
                               " has incoming weight sum " +
                               fmt(violations.front().incoming_sum));
  }
  return g;
}

SelectionResult run_algorithm(const std::string& name, const DirectedGraph& g, Model model,
                              std::uint32_t k, const CoverageConfig& cfg) {
  if (name == "lazy-greedy")
    return lazy_greedy(g, model, k, cfg, GainEvaluator::monte_carlo);
  if (name == "effective-degree") return effective_degree_rank(g, k);
  if (name == "out-degree") return baseline_out_degree(g, k);
  if (name == "random") return baseline_random(g, k, cfg.master_seed);
  if (name == "exhaustive") return exhaustive_optimal(g, model, k, cfg.lambda);
  throw std::runtime_error("--algo: unknown algorithm '" + name + "'");
}

std::uint64_t total_evaluations(const std::string& name, const DirectedGraph& g,
                                const SelectionResult& r) {
  std::uint64_t total = std::accumulate(r.evaluations_per_step.begin(),
                                        r.evaluations_per_step.end(), std::uint64_t{0});
  if (name == "lazy-greedy") total += g.node_count();  // initial singleton sweep
  return total;
}

std::string seed_labels(const DirectedGraph& g, const std::vector<NodeId>& seeds) {
  std::string out;
  for (std::size_t i = 0; i < seeds.size(); ++i) {
    if (i) out += ' ';
    out += g.label(seeds[i]);
  }
  return out;
}

struct SelectRow {
  std::string algorithm;
  std::uint32_t k;
  double lambda;
  std::string seeds;
  double objective;
  double std_error;
  double expected_active;
  double expected_informed;
  std::uint64_t evaluations;
  double wall_ms;
};

json row_to_json(const SelectRow& row, bool with_breakdown, bool timing) {
  json j{{"algorithm", row.algorithm}, {"k", row.k},
         {"lambda", row.lambda},       {"seeds", row.seeds},
         {"objective", row.objective}, {"std_error", row.std_error},
         {"evaluations", row.evaluations}};
  if (with_breakdown) {
    j["expected_active"] = row.expected_active;
    j["expected_informed"] = row.expected_informed;
  }
  if (timing) j["wall_ms"] = row.wall_ms;
  return j;
}

std::string rows_to_csv(const std::vector<SelectRow>& rows, bool with_breakdown, bool timing) {
  std::string text = "algorithm,k,lambda,seeds,objective,std_error";
  if (with_breakdown) text += ",expected_active,expected_informed";
  text += ",evaluations";
  if (timing) text += ",wall_ms";
  text += "\n";
  for (const SelectRow& r : rows) {
    text += r.algorithm + ',' + std::to_string(r.k) + ',' + fmt(r.lambda) + ',' +
            csv_quote(r.seeds) + ',' + fmt(r.objective) + ',' + fmt(r.std_error);
    if (with_breakdown)
      text += ',' + fmt(r.expected_active) + ',' + fmt(r.expected_informed);
    text += ',' + std::to_string(r.evaluations);
    if (timing) text += ',' + fmt(r.wall_ms);
    text += "\n";
  }
  return text;
}

double elapsed_ms(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
      .count();
}

int cmd_select(const CommonOptions& opt, const std::vector<std::string>& algos,
               const std::vector<std::uint32_t>& ks) {
  const Model model = parse_model(opt.model_name);
  const DirectedGraph g = prepare_graph(opt, model);
  const CoverageConfig cfg{opt.lambda, opt.replications, opt.seed};

  std::vector<SelectRow> rows;
  for (const std::string& algo : algos) {
    for (std::uint32_t k : ks) {
      const auto start = std::chrono::steady_clock::now();
      const SelectionResult r = run_algorithm(algo, g, model, k, cfg);
      const double wall = elapsed_ms(start);
      const CoverageEstimate est =
          estimate_coverage(g, SeedSet{std::vector<NodeId>(r.seeds)}, model, cfg);
      rows.push_back({algo, k, opt.lambda, seed_labels(g, r.seeds), est.mean,
                      est.std_error, est.mean_active, est.mean_informed,
                      total_evaluations(algo, g, r), wall});
    }
  }

  if (opt.format == "json") {
    json out = json::array();
    for (const SelectRow& r : rows) out.push_back(row_to_json(r, false, opt.timing));
    write_text(opt.out, out.dump(2) + "\n");
  } else {
    write_text(opt.out, rows_to_csv(rows, false, opt.timing));
  }
  return 0;
}

int cmd_evaluate(const CommonOptions& opt, const std::string& seeds_path) {
  const Model model = parse_model(opt.model_name);
  const DirectedGraph g = prepare_graph(opt, model);

  std::vector<NodeId> ids;
  std::istringstream in(read_file(seeds_path));
  std::string line;
  while (std::getline(in, line)) {
    std::istringstream ls(line);
    std::string tok;
    while (ls >> tok) {
      if (tok[0] == '#') break;
      const auto id = g.id_of(tok);
      if (!id) throw std::runtime_error("unknown node label '" + tok + "' in " + seeds_path);
      ids.push_back(*id);
    }
  }
  const SeedSet seeds{std::move(ids)};

  const CoverageConfig cfg{opt.lambda, opt.replications, opt.seed};
  const CoverageEstimate est = estimate_coverage(g, seeds, model, cfg);

  if (opt.format == "json") {
    const json out{{"mean", est.mean},
                   {"std_error", est.std_error},
                   {"expected_active", est.mean_active},
                   {"expected_informed", est.mean_informed},
                   {"lambda", opt.lambda},
                   {"replications", est.replications_used},
                   {"seed", opt.seed},
                   {"seeds", seed_labels(g, seeds.ids())}};
    write_text(opt.out, out.dump(2) + "\n");
  } else {
    std::string text = "mean,std_error,expected_active,expected_informed,lambda,replications\n";
    text += fmt(est.mean) + ',' + fmt(est.std_error) + ',' + fmt(est.mean_active) + ',' +
            fmt(est.mean_informed) + ',' + fmt(opt.lambda) + ',' +
            std::to_string(est.replications_used) + "\n";
    write_text(opt.out, text);
  }
  return 0;
}

int cmd_generate(const std::string& kind, NodeId nodes, double edge_prob, NodeId attach,
                 std::uint64_t seed, const std::string& weights, const std::string& out) {
  auto finish = [&](DirectedGraph g, const std::string& path) {
    if (!weights.empty()) g = assign_weights(std::move(g), WeightScheme::parse(weights, seed));
    if (path.empty())
      std::cout << graph_to_text(g);
    else
      save_graph_file(g, path);
  };

  if (kind == "erdos-renyi") {
    finish(erdos_renyi(nodes, edge_prob, seed), out);
  } else if (kind == "scale-free") {
    finish(scale_free(nodes, attach, seed), out);
  } else if (kind == "star-chain") {
    if (out.empty()) throw std::runtime_error("--out: star-chain needs an output directory");
    std::filesystem::create_directories(out);
    for (const std::string& name : fixture_names())
      finish(fixture_graph(name), (std::filesystem::path(out) / (name + ".edges")).string());
  } else {
    throw std::runtime_error("--kind: unknown generator '" + kind + "'");
  }
  return 0;
}

int cmd_benchmark(const CommonOptions& opt, const std::vector<std::string>& algos,
                  const std::vector<std::uint32_t>& ks, std::string json_path) {
  const Model model = parse_model(opt.model_name);
  const DirectedGraph g = prepare_graph(opt, model);
  const CoverageConfig select_cfg{opt.lambda, opt.replications, opt.seed};
  // Held-out estimator streams: selection never sees them, so reported
  // values carry no reuse bias.
  const CoverageConfig heldout_cfg{opt.lambda, opt.replications, opt.seed + 1};

  std::vector<SelectRow> rows;
  for (const std::string& algo : algos) {
    for (std::uint32_t k : ks) {
      const auto start = std::chrono::steady_clock::now();
      const SelectionResult r = run_algorithm(algo, g, model, k, select_cfg);
      const double wall = elapsed_ms(start);
      const CoverageEstimate est =
          estimate_coverage(g, SeedSet{std::vector<NodeId>(r.seeds)}, model, heldout_cfg);
      rows.push_back({algo, k, opt.lambda, seed_labels(g, r.seeds), est.mean,
                      est.std_error, est.mean_active, est.mean_informed,
                      total_evaluations(algo, g, r), wall});
    }
  }

  write_text(opt.out, rows_to_csv(rows, true, opt.timing));

  if (json_path.empty() && !opt.out.empty())
    json_path = std::filesystem::path(opt.out).replace_extension("json").string();
  if (!json_path.empty()) {
    json summary{{"graph", opt.graph_path},
                 {"graph_sha1", tooling::git_blob_sha1(read_file(opt.graph_path))},
                 {"model", opt.model_name},
                 {"weights", opt.weights},
                 {"lambda", opt.lambda},
                 {"replications", opt.replications},
                 {"master_seed", opt.seed},
                 {"heldout_seed", opt.seed + 1},
                 {"algorithms", algos},
                 {"k", ks},
                 {"rows", json::array()}};
    for (const SelectRow& r : rows) summary["rows"].push_back(row_to_json(r, true, opt.timing));
    write_text(json_path, summary.dump(2) + "\n");
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"information coverage toolkit: cascade simulation, coverage "
               "estimation and seed selection on directed graphs"};
  app.require_subcommand(1);

  CommonOptions select_opt;
  std::vector<std::string> select_algos;
  std::vector<std::uint32_t> select_ks;
  CLI::App* select = app.add_subcommand("select", "run a seed-selection algorithm");
  add_common(select, select_opt, true);
  select->add_option("--algo", select_algos,
                     "lazy-greedy, effective-degree, out-degree, random or exhaustive")
      ->required()
      ->delimiter(',');
  select->add_option("--k", select_ks, "seed-set sizes")->required()->delimiter(',');

  CommonOptions eval_opt;
  std::string seeds_path;
  CLI::App* evaluate = app.add_subcommand("evaluate", "estimate coverage of a given seed set");
  add_common(evaluate, eval_opt, true);
  evaluate->add_option("--seeds", seeds_path, "file of seed node labels")
      ->required()
      ->check(CLI::ExistingFile);

  std::string gen_kind;
  NodeId gen_nodes = 100;
  double gen_edge_prob = 0.05;
  NodeId gen_attach = 3;
  std::uint64_t gen_seed = 0;
  std::string gen_weights, gen_out;
  CLI::App* generate = app.add_subcommand("generate", "write a synthetic graph file");
  generate->add_option("--kind", gen_kind, "erdos-renyi, scale-free or star-chain")->required();
  generate->add_option("--nodes", gen_nodes, "node count")->capture_default_str();
  generate->add_option("--edge-prob", gen_edge_prob, "erdos-renyi edge probability")
      ->capture_default_str();
  generate->add_option("--attach", gen_attach, "scale-free edges per new node")
      ->capture_default_str();
  generate->add_option("--seed", gen_seed, "generator seed")->capture_default_str();
  generate->add_option("--weights", gen_weights, "assign a weight scheme before writing");
  generate->add_option("--out", gen_out, "output file (directory for star-chain)");

  CommonOptions bench_opt;
  std::vector<std::string> bench_algos;
  std::vector<std::uint32_t> bench_ks;
  std::string bench_json;
  CLI::App* benchmark =
      app.add_subcommand("benchmark", "select with each algorithm, then evaluate held-out");
  add_common(benchmark, bench_opt, true);
  benchmark->add_option("--algo", bench_algos, "comma-separated algorithm list")
      ->required()
      ->delimiter(',');
  benchmark->add_option("--k", bench_ks, "seed-set sizes")->required()->delimiter(',');
  benchmark->add_option("--json", bench_json,
                        "summary path (default: --out with .json extension)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (select->parsed()) return cmd_select(select_opt, select_algos, select_ks);
    if (evaluate->parsed()) return cmd_evaluate(eval_opt, seeds_path);
    if (generate->parsed())
      return cmd_generate(gen_kind, gen_nodes, gen_edge_prob, gen_attach, gen_seed,
                          gen_weights, gen_out);
    if (benchmark->parsed())
      return cmd_benchmark(bench_opt, bench_algos, bench_ks, bench_json);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
