#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>

#include "CLI11.hpp"

#include "earl/errors.hpp"
#include "earl/harness.hpp"
#include "earl/markov.hpp"

namespace {

using namespace earl;

void write_output(const std::string& text, const std::string& path) {
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw ConfigError("cannot open output file '" + path + "'");
  out << text;
}

int cmd_run(const std::string& problem_text, const std::string& algo_name,
            const std::string& state, double epsilon, double alpha, double gamma, long runs,
            long cap, std::uint64_t seed, bool explicit_agent_flags,
            const std::string& trace_path, const std::string& qdump_path) {
  const ProblemSpec problem = parse_problem(problem_text);
  AlgoDescriptor algo;
  algo.variant = parse_variant(algo_name);
  if (algo.variant == Variant::RLS && explicit_agent_flags)
    throw ConfigError("rls takes no --state/--epsilon/--alpha/--gamma");
  algo.state_mode = parse_state_mode(state);
  algo.epsilon = epsilon;
  algo.alpha = alpha;
  algo.gamma = gamma;

  if (!trace_path.empty() || !qdump_path.empty()) {
    // trace and Q dump describe the first run of the cell
    std::ofstream trace;
    if (!trace_path.empty()) {
      trace.open(trace_path);
      if (!trace) throw ConfigError("cannot open trace file '" + trace_path + "'");
      trace << trace_csv_header() << '\n';
    }
    QTable q;
    const auto cfg = algo.make_config(cap, derive_run_seed(seed, 0, 0));
    run_traced(
        problem, cfg,
        [&](long generation, const StepOutcome& out) {
          if (trace.is_open()) trace << trace_csv_row(generation, out) << '\n';
        },
        &q);
    if (!qdump_path.empty()) {
      std::ofstream dump(qdump_path);
      if (!dump) throw ConfigError("cannot open qdump file '" + qdump_path + "'");
      dump << q.dump_csv();
    }
  }

  const auto samples = run_cell(problem, algo, runs, cap, seed, 0, 1);
  CellResult cell{problem, algo, summarize(samples), {}};
  std::cout << emit_table({cell}, TableFormat::Csv);
  return 0;
}

int cmd_table(const std::string& config_path, const std::string& format,
              const std::string& out_path) {
  const ExperimentGrid grid = parse_config_file(config_path);
  const auto results = run_grid(grid);
  const TableFormat fmt = format == "markdown" ? TableFormat::Markdown : TableFormat::Csv;
  write_output(emit_table(results, fmt), out_path);
  return 0;
}

int cmd_markov(long n, long k, const std::string& start) {
  const auto times = per_state_times_recurrence(ChainKind::ModifiedNoLearning, n, k);
  const auto rls = chain_rls(n, k);
  const auto modified = chain_modified_no_learning(n, k);

  std::string out = "state,per_state_expected,cumulative\n";
  Rational cumulative = 0;
  char buf[96];
  for (long i = 0; i < n; ++i) {
    cumulative += times.per_state[i];
    std::snprintf(buf, sizeof(buf), "%ld,%.17g,%.17g\n", i,
                  static_cast<double>(times.per_state[i]), static_cast<double>(cumulative));
    out += buf;
  }

  Rational t_rls, t_mod;
  if (start == "binomial") {
    const auto weights = binomial_start(n);
    t_rls = hitting_time_solve(rls, weights);
    t_mod = hitting_time_solve(modified, weights);
  } else {
    t_rls = hitting_time_solve(rls, 0L);
    t_mod = hitting_time_solve(modified, 0L);
  }
  std::snprintf(buf, sizeof(buf), "# T_rls=%.17g T_mod=%.17g ratio=%.17g\n",
                static_cast<double>(t_rls), static_cast<double>(t_mod),
                static_cast<double>(t_mod / t_rls));
  out += buf;
  std::cout << out;
  return 0;
}

int cmd_compare(const std::string& config_path, const std::string& cell_a,
                const std::string& cell_b, long m) {
  ExperimentGrid grid = parse_config_file(config_path);
  grid.retain_samples = true;
  const auto results = run_grid(grid);
  const auto report = compare_cells(results, cell_a, cell_b, m);
  std::cout << report.to_string();
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"benchmark laboratory for agent-selected auxiliary objectives"};
  app.require_subcommand(1);

  auto* run_cmd = app.add_subcommand("run", "run one (problem, algorithm) cell");
  std::string problem_text, algo_name = "rls", state = "ts";
  double epsilon = 0.1, alpha = 0.5, gamma = 0.5;
  long runs = 1000, cap = 1000000;
  std::uint64_t seed = 1;
  std::string trace_path, qdump_path;
  run_cmd->add_option("--problem", problem_text, "problem descriptor, e.g. xdivk:n=40,k=2,p=39")
      ->required();
  run_cmd->add_option("--algo", algo_name, "rls|earl|modified_learning|modified_no_learning")
      ->required();
  auto* state_opt = run_cmd->add_option("--state", state, "agent state mode: ts|ss");
  auto* eps_opt = run_cmd->add_option("--epsilon", epsilon, "exploration probability");
  auto* alpha_opt = run_cmd->add_option("--alpha", alpha, "learning rate");
  auto* gamma_opt = run_cmd->add_option("--gamma", gamma, "discount factor");
  run_cmd->add_option("--runs", runs, "independent runs");
  run_cmd->add_option("--cap", cap, "evaluation budget per run");
  run_cmd->add_option("--seed", seed, "base seed");
  run_cmd->add_option("--trace", trace_path, "write per-generation CSV of the first run");
  run_cmd->add_option("--qdump", qdump_path, "write final Q-table CSV of the first run");

  auto* table_cmd = app.add_subcommand("table", "run a config grid and emit the result table");
  std::string config_path, format = "csv", out_path;
  table_cmd->add_option("--config", config_path, "config file")->required();
  table_cmd->add_option("--format", format, "csv|markdown")
      ->check(CLI::IsMember({"csv", "markdown"}));
  table_cmd->add_option("--out", out_path, "output path (default stdout)");

  auto* markov_cmd = app.add_subcommand("markov", "analytic expected runtimes on xdivk");
  long n = 0, k = 0;
  std::string start = "zero";
  markov_cmd->add_option("--n", n, "string length")->required();
  markov_cmd->add_option("--k", k, "plateau width")->required();
  markov_cmd->add_option("--start", start, "start state: zero|binomial")
      ->check(CLI::IsMember({"zero", "binomial"}));

  auto* compare_cmd = app.add_subcommand("compare", "rank-test two cells of a config grid");
  std::string cell_a, cell_b;
  long m = 1;
  compare_cmd->add_option("--config", config_path, "config file")->required();
  compare_cmd->add_option("--cell-a", cell_a, "<problem descriptor>/<algo descriptor>")
      ->required();
  compare_cmd->add_option("--cell-b", cell_b, "<problem descriptor>/<algo descriptor>")
      ->required();
  compare_cmd->add_option("--m", m, "number of comparisons for the Bonferroni correction");

  try {
    app.parse(argc, argv);
    if (run_cmd->parsed()) {
      const bool agent_flags = state_opt->count() > 0 || eps_opt->count() > 0 ||
                               alpha_opt->count() > 0 || gamma_opt->count() > 0;
      return cmd_run(problem_text, algo_name, state, epsilon, alpha, gamma, runs, cap, seed,
                     agent_flags, trace_path, qdump_path);
    }
    if (table_cmd->parsed()) return cmd_table(config_path, format, out_path);
    if (markov_cmd->parsed()) return cmd_markov(n, k, start);
    if (compare_cmd->parsed()) return cmd_compare(config_path, cell_a, cell_b, m);
    return 1;
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  } catch (const earl::ConfigError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return 2;
  }
}
