#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "earl/algorithms.hpp"
#include "earl/errors.hpp"
#include "earl/problems.hpp"
#include "earl/stats.hpp"

namespace earl {

const char* variant_name(Variant v);
Variant parse_variant(std::string_view name);
const char* state_mode_name(StateMode m);
StateMode parse_state_mode(std::string_view name);

// Algorithm half of a grid cell: everything but cap and seed.
struct AlgoDescriptor {
  Variant variant = Variant::RLS;
  StateMode state_mode = StateMode::TargetState;
  double alpha = 0.5;
  double gamma = 0.5;
  double epsilon = 0.1;

  AlgorithmConfig make_config(long cap, std::uint64_t seed) const;
  std::string descriptor() const;  // e.g. "earl:state=ts,eps=0.1"
  std::string label() const;       // table column header
};

// Grammar: "<variant>[:key=value,...]" with keys state (ts|ss), eps,
// alpha, gamma. RLS takes no keys.
AlgoDescriptor parse_algorithm(std::string_view text);

struct ExperimentGrid {
  std::vector<ProblemSpec> problems;
  std::vector<AlgoDescriptor> algorithms;
  long runs_per_cell = 1000;
  long cap = 1000000;
  std::uint64_t base_seed = 1;
  int parallelism = 1;
  bool retain_samples = false;
};

struct CellResult {
  ProblemSpec problem;
  AlgoDescriptor algo;
  SampleSummary summary;
  // per-run evaluation counts (censored runs at cap); empty unless the
  // grid retained samples
  std::vector<long> evaluations;

  std::string key() const;  // "<problem descriptor>/<algo descriptor>"
};

// Per-run seed; depends only on (base, cell, run) so results do not
// depend on scheduling.
std::uint64_t derive_run_seed(std::uint64_t base, std::uint64_t cell_index,
                              std::uint64_t run_index);

std::vector<RunResult> run_cell(const ProblemSpec& problem, const AlgoDescriptor& algo,
                                long runs, long cap, std::uint64_t base_seed,
                                std::uint64_t cell_index, int parallelism);

std::vector<CellResult> run_grid(const ExperimentGrid& grid);

enum class TableFormat { Csv, Markdown };

std::string emit_table(const std::vector<CellResult>& results, TableFormat format);

struct ComparisonReport {
  std::string cell_a;
  std::string cell_b;
  std::size_t censored_a = 0;
  std::size_t censored_b = 0;
  double u = 0.0;
  double p_raw = 1.0;
  double p_corrected = 1.0;
  long m = 1;
  bool significant = false;  // corrected p < 0.05
  std::string verdict;

  std::string to_string() const;
};

// Cells are named by their key(); requires retained samples.
ComparisonReport compare_cells(const std::vector<CellResult>& results, std::string_view cell_a,
                               std::string_view cell_b, long m);

// Sections: [grid] (runs, cap, seed, parallelism), [problems] (problem =
// <descriptor> lines), [algorithms] (algo = <descriptor> lines). Unknown
// sections or keys are errors.
ExperimentGrid parse_config(std::istream& in);
ExperimentGrid parse_config_file(const std::string& path);

}  // namespace earl
