// matchram: exact toolkit for Ramsey matching numbers on s-connectors.
// Subcommands: verify, arrow, construct, distil, experiment.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "matchram/compression.hpp"
#include "matchram/connector.hpp"
#include "matchram/errors.hpp"
#include "matchram/io.hpp"
#include "matchram/matching.hpp"
#include "matchram/ramsey.hpp"
#include "matchram/suites.hpp"

namespace {

using matchram::Graph;
using matchram::TVector;

// Graph sources: a literal (K5, C7, P4, Petersen) or a file (.json or plain
// edge list).
Graph load_graph(const std::string& source) {
  if (source == "Petersen" || source == "petersen") return matchram::petersen_graph();
  if (source.size() >= 2 && (source[0] == 'K' || source[0] == 'C' || source[0] == 'P' || source[0] == 'E') &&
      std::isdigit(static_cast<unsigned char>(source[1]))) {
    const int n = std::stoi(source.substr(1));
    switch (source[0]) {
      case 'K': return matchram::complete_graph(n);
      case 'C': return matchram::cycle_graph(n);
      case 'P': return matchram::path_graph(n);
      case 'E': return matchram::empty_graph(n);
    }
  }
  std::ifstream in(source);
  if (!in) throw matchram::PreconditionError("cannot open graph file: " + source);
  if (source.size() >= 5 && source.substr(source.size() - 5) == ".json") {
    nlohmann::json j;
    in >> j;
    return matchram::graph_from_json(j);
  }
  return matchram::read_edge_list(in);
}

TVector parse_t(const std::string& csv) {
  std::vector<int> entries;
  std::stringstream ss(csv);
  std::string item;
  while (std::getline(ss, item, ',')) entries.push_back(std::stoi(item));
  return TVector(entries);
}

void emit_output(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) throw matchram::PreconditionError("cannot open output file: " + out_path);
  out << text;
}

std::uint64_t resolve_seed(const std::optional<std::uint64_t>& flag, bool required) {
  if (flag.has_value()) return *flag;
  if (const char* env = std::getenv("MATCHRAM_SEED")) return std::stoull(env);
  if (required)
    throw matchram::PreconditionError("sampling requires a seed: pass --seed or set MATCHRAM_SEED");
  return 0;
}

int run(int argc, char** argv) {
  CLI::App app{"exact Ramsey-matching toolkit for s-connectors"};
  app.require_subcommand(1);

  // ---- verify ----
  auto* verify = app.add_subcommand("verify", "run a verification suite");
  std::string suite = "all";
  std::optional<std::uint64_t> seed_flag;
  matchram::SuiteConfig cfg;
  std::string out_path, format = "json";
  bool unchecked = false;
  verify->add_option("--suite", suite, "suite name or 'all'");
  verify->add_option("--seed", seed_flag, "base seed for randomized instances");
  verify->add_option("--trials", cfg.trials, "randomized instances per suite");
  verify->add_option("--max-n", cfg.max_n, "order cap for the decomposition sweep");
  verify->add_option("--per-size", cfg.per_size, "graphs per order in the sweep");
  verify->add_option("--q", cfg.q, "colour count for the exactness table");
  verify->add_option("--max-r", cfg.max_bound, "bound cap for the exactness table");
  verify->add_option("--theorem-trials", cfg.theorem_trials, "trials for the sampled regime");
  verify->add_flag("--unchecked", unchecked, "skip the pipeline contract assertions");
  verify->add_option("--out", out_path, "write the report here instead of stdout");

  // ---- arrow ----
  auto* arrow = app.add_subcommand("arrow", "decide an arrowing instance exactly");
  std::string graph_spec, t_spec;
  matchram::ArrowGuard arrow_guard;
  arrow->add_option("--graph", graph_spec, "graph literal or file")->required();
  arrow->add_option("--t", t_spec, "comma-separated targets, e.g. 2,2")->required();
  arrow->add_option("--guard-edges", arrow_guard.max_edges, "edge-count search guard");
  arrow->add_option("--out", out_path, "write the report here instead of stdout");

  // ---- construct ----
  auto* construct = app.add_subcommand("construct", "emit a named colouring");
  std::string kind;
  int s_value = 1, q_value = 1;
  construct->add_option("kind", kind, "cl_extremal | sharp | split_star | konig | gnp_adversary")
      ->required();
  construct->add_option("--t", t_spec, "comma-separated targets");
  construct->add_option("--s", s_value, "connectivity parameter");
  construct->add_option("--q", q_value, "colour count");
  construct->add_option("--graph", graph_spec, "graph input for konig / gnp_adversary");
  construct->add_option("--out", out_path, "write the colouring here instead of stdout");

  // ---- distil ----
  auto* distil_cmd = app.add_subcommand("distil", "run the compression pipeline");
  std::string colouring_path, trace_path;
  matchram::SigmaGuard sigma_guard;
  distil_cmd->add_option("--graph", graph_spec, "host graph file")->required();
  distil_cmd->add_option("--colouring", colouring_path, "coloured-graph JSON file")->required();
  distil_cmd->add_option("--s", s_value, "connectivity parameter")->required();
  distil_cmd->add_option("--trace", trace_path, "write the pipeline trace (JSON lines) here");
  distil_cmd->add_option("--guard-sigma", sigma_guard.max_shared, "sigma search guard");
  distil_cmd->add_flag("--unchecked", unchecked, "skip the contract assertions");
  distil_cmd->add_option("--out", out_path, "write the summary here instead of stdout");

  // ---- experiment ----
  auto* experiment = app.add_subcommand("experiment", "sample adversarial colourings");
  int exp_n = 12, exp_trials = 100;
  double exp_p = 0.5;
  bool require_connector = false;
  experiment->add_option("--n", exp_n, "sampled graph order");
  experiment->add_option("--p", exp_p, "edge probability for the sampler");
  experiment->add_option("--t", t_spec, "comma-separated targets")->required();
  experiment->add_option("--s", s_value, "connectivity parameter (echoed, and enforced with "
                                         "--require-connector)");
  experiment->add_option("--trials", exp_trials, "number of trials");
  experiment->add_option("--seed", seed_flag, "base seed");
  experiment->add_flag("--require-connector", require_connector,
                       "resample until the graph passes the exact connectivity check");
  experiment->add_option("--format", format, "json or csv");
  experiment->add_option("--out", out_path, "write the table here instead of stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() != 0) {
      std::cerr << e.what() << '\n';
      return 2;
    }
    return app.exit(e);  // --help and friends
  }

  if (verify->parsed()) {
    std::vector<std::string> names;
    if (suite == "all")
      names = matchram::suite_names();
    else
      names = {suite};
    // cl, sharp and discussion are fully deterministic; everything else
    // samples and therefore needs a seed.
    bool samples = false;
    for (const auto& name : names)
      samples = samples || (name != "cl" && name != "sharp" && name != "discussion");
    cfg.seed = resolve_seed(seed_flag, /*required=*/samples);
    cfg.checked = !unchecked;
    nlohmann::json suites_json = nlohmann::json::array();
    bool all_passed = true;
    for (const auto& name : names) {
      const auto result = matchram::run_suite(name, cfg);
      all_passed = all_passed && result.passed;
      suites_json.push_back(result.to_json());
    }
    nlohmann::json report{{"claim", "verify"},
                          {"params", {{"suites", names}}},
                          {"method", "mixed"},
                          {"trials", cfg.trials},
                          {"seed", cfg.seed},
                          {"verdict", all_passed},
                          {"witnesses", suites_json}};
    emit_output(report.dump(2) + "\n", out_path);
    return all_passed ? 0 : 1;
  }

  if (arrow->parsed()) {
    const Graph g = load_graph(graph_spec);
    const TVector t = parse_t(t_spec);
    const auto verdict = matchram::arrows(g, t, arrow_guard);
    nlohmann::json witnesses = nlohmann::json::array();
    if (verdict.witness.has_value())
      witnesses.push_back(matchram::coloured_to_json(*verdict.witness));
    nlohmann::json report{{"claim", "arrows"},
                          {"params", {{"graph", graph_spec}, {"t", t.t}}},
                          {"method", "exhaustive"},
                          {"trials", 0},
                          {"seed", nullptr},
                          {"verdict", verdict.arrows},
                          {"nodes", verdict.nodes_explored},
                          {"witnesses", witnesses}};
    emit_output(report.dump(2) + "\n", out_path);
    return 0;
  }

  if (construct->parsed()) {
    std::optional<matchram::ColouredGraph> built;
    if (kind == "cl_extremal") {
      built = matchram::cl_extremal(parse_t(t_spec)).colouring;
    } else if (kind == "sharp") {
      built = matchram::sharp_construction(parse_t(t_spec), s_value).colouring;
    } else if (kind == "split_star") {
      built = matchram::split_star_colouring(q_value, s_value).colouring;
    } else if (kind == "konig") {
      built = matchram::konig_colouring(load_graph(graph_spec), parse_t(t_spec));
    } else if (kind == "gnp_adversary") {
      auto attempt = matchram::gnp_adversary_colouring(load_graph(graph_spec), parse_t(t_spec));
      if (!attempt.has_value()) {
        emit_output("{\"applicable\":false}\n", out_path);
        return 0;
      }
      built = std::move(*attempt);
    } else {
      throw matchram::PreconditionError("unknown construction: " + kind);
    }
    emit_output(matchram::coloured_to_json(*built).dump(2) + "\n", out_path);
    return 0;
  }

  if (distil_cmd->parsed()) {
    const Graph host = load_graph(graph_spec);
    std::ifstream in(colouring_path);
    if (!in) throw matchram::PreconditionError("cannot open colouring file: " + colouring_path);
    nlohmann::json cj;
    in >> cj;
    const auto colouring = matchram::coloured_from_json(cj, &host);
    const auto result = matchram::distil(colouring, s_value, !unchecked, sigma_guard);
    if (!trace_path.empty()) {
      std::ofstream trace_out(trace_path, std::ios::binary);
      if (!trace_out)
        throw matchram::PreconditionError("cannot open trace file: " + trace_path);
      trace_out << matchram::trace_to_jsonl(result.trace);
    }
    nlohmann::json report{{"claim", "distil"},
                          {"params", {{"graph", graph_spec}, {"s", s_value}}},
                          {"eta", result.eta},
                          {"kappa", result.kappa},
                          {"T", result.T},
                          {"c_star", result.c_star},
                          {"k_star", result.k_star},
                          {"k_prime", result.k_prime},
                          {"nu", matchram::nu_vector(result.result)}};
    emit_output(report.dump(2) + "\n", out_path);
    return 0;
  }

  if (experiment->parsed()) {
    const std::uint64_t seed = resolve_seed(seed_flag, /*required=*/true);
    const TVector t = parse_t(t_spec);
    std::ostringstream csv;
    csv << "trial,n,s,q,t,colour,nu,threshold,pass\n";
    nlohmann::json rows = nlohmann::json::array();
    std::string t_label;
    for (std::size_t i = 0; i < t.t.size(); ++i)
      t_label += (i ? "+" : "") + std::to_string(t.t[i]);
    for (int trial = 0; trial < exp_trials; ++trial) {
      const std::uint64_t trial_seed = seed + static_cast<std::uint64_t>(trial);
      Graph g = matchram::gen_gnp(exp_n, exp_p, trial_seed);
      if (require_connector) {
        std::uint64_t attempt = 1;
        while (!matchram::is_s_connector(g, s_value).verdict) {
          if (attempt > 1000)
            throw matchram::PreconditionError(
                "experiment: no s-connector found; raise --p or lower --s");
          g = matchram::gen_gnp(exp_n, exp_p, trial_seed + 7919 * attempt++);
        }
      }
      std::mt19937_64 rng(trial_seed);
      std::uniform_int_distribution<int> pick(1, t.q());
      std::vector<std::vector<matchram::Edge>> layers(t.q() + 1);
      if (trial % 2 == 0) {
        // uniform random adversary
        for (const auto& e : g.edges()) layers[pick(rng)].push_back(e);
      } else {
        // cover-guided adversary: random small sets claim their incident
        // edges by least colour, leftovers are random
        std::uniform_int_distribution<int> cpick(0, t.q());
        std::vector<int> cover(exp_n);
        for (auto& c : cover) c = cpick(rng);
        for (const auto& [u, v] : g.edges()) {
          const int cu = cover[u] == 0 ? t.q() + 1 : cover[u];
          const int cv = cover[v] == 0 ? t.q() + 1 : cover[v];
          const int c = std::min(cu, cv);
          layers[c <= t.q() ? c : pick(rng)].push_back({u, v});
        }
      }
      const matchram::ColouredGraph cg(g, std::move(layers));
      const auto nus = matchram::nu_vector(cg);
      for (int j = 0; j < t.q(); ++j) {
        const bool pass = nus[j] >= t.t[j];
        csv << trial << ',' << exp_n << ',' << s_value << ',' << t.q() << ',' << t_label << ','
            << (j + 1) << ',' << nus[j] << ',' << t.t[j] << ',' << (pass ? 1 : 0) << '\n';
        rows.push_back({{"trial", trial},
                        {"n", exp_n},
                        {"s", s_value},
                        {"q", t.q()},
                        {"t", t.t},
                        {"colour", j + 1},
                        {"nu", nus[j]},
                        {"threshold", t.t[j]},
                        {"pass", pass}});
      }
    }
    if (format == "csv")
      emit_output(csv.str(), out_path);
    else
      emit_output(rows.dump(2) + "\n", out_path);
    return 0;
  }

  return 2;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const matchram::ContractError& e) {
    std::cerr << "contract violation: " << e.what() << '\n';
    return 1;
  } catch (const matchram::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
}
