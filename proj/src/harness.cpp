#include "earl/harness.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <cstdio>
#include <fstream>
#include <istream>
#include <map>
#include <sstream>
#include <thread>

namespace earl {

const char* variant_name(Variant v) {
  switch (v) {
    case Variant::RLS: return "rls";
    case Variant::EARL: return "earl";
    case Variant::ModifiedLearning: return "modified_learning";
    case Variant::ModifiedNoLearning: return "modified_no_learning";
  }
  throw std::invalid_argument("variant_name: bad variant");
}

Variant parse_variant(std::string_view name) {
  if (name == "rls") return Variant::RLS;
  if (name == "earl") return Variant::EARL;
  if (name == "modified_learning") return Variant::ModifiedLearning;
  if (name == "modified_no_learning") return Variant::ModifiedNoLearning;
  throw ConfigError("unknown algorithm variant '" + std::string(name) +
                    "' (expected rls, earl, modified_learning or modified_no_learning)");
}

const char* state_mode_name(StateMode m) {
  return m == StateMode::TargetState ? "ts" : "ss";
}

StateMode parse_state_mode(std::string_view name) {
  if (name == "ts") return StateMode::TargetState;
  if (name == "ss") return StateMode::SingleState;
  throw ConfigError("unknown state mode '" + std::string(name) + "' (expected ts or ss)");
}

namespace {

std::string format_double(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%g", v);
  return buf;
}

std::string format_double_exact(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

}  // namespace

AlgorithmConfig AlgoDescriptor::make_config(long cap, std::uint64_t seed) const {
  AlgorithmConfig cfg;
  cfg.variant = variant;
  cfg.cap = cap;
  cfg.seed = seed;
  if (variant != Variant::RLS) {
    AgentConfig agent;
    agent.alpha = alpha;
    agent.gamma = gamma;
    agent.epsilon = epsilon;
    agent.state_mode = state_mode;
    cfg.agent = agent;
  }
  return cfg;
}

std::string AlgoDescriptor::descriptor() const {
  if (variant == Variant::RLS) return "rls";
  std::string out = variant_name(variant);
  out += ":state=";
  out += state_mode_name(state_mode);
  out += ",eps=" + format_double(epsilon);
  out += ",alpha=" + format_double(alpha);
  out += ",gamma=" + format_double(gamma);
  return out;
}

std::string AlgoDescriptor::label() const {
  switch (variant) {
    case Variant::RLS: return "RLS";
    case Variant::EARL:
      return std::string("EA+RL / ") + state_mode_name(state_mode) + ", eps=" +
             format_double(epsilon);
    case Variant::ModifiedLearning:
      return std::string("modified, learning / ") + state_mode_name(state_mode) + ", eps=" +
             format_double(epsilon);
    case Variant::ModifiedNoLearning:
      return std::string("modified, no-learning / ") + state_mode_name(state_mode) +
             ", eps=" + format_double(epsilon);
  }
  throw std::invalid_argument("label: bad variant");
}

AlgoDescriptor parse_algorithm(std::string_view text) {
  const auto colon = text.find(':');
  AlgoDescriptor algo;
  algo.variant = parse_variant(text.substr(0, colon));
  if (colon == std::string_view::npos) return algo;
  if (algo.variant == Variant::RLS)
    throw ConfigError("algorithm descriptor '" + std::string(text) + "': rls takes no keys");

  std::string_view rest = text.substr(colon + 1);
  while (!rest.empty()) {
    const auto comma = rest.find(',');
    const std::string_view item = rest.substr(0, comma);
    rest = comma == std::string_view::npos ? std::string_view{} : rest.substr(comma + 1);
    const auto eq = item.find('=');
    if (eq == std::string_view::npos || eq == 0)
      throw ConfigError("algorithm descriptor '" + std::string(text) +
                        "': expected key=value pairs");
    const std::string_view key = item.substr(0, eq);
    const std::string_view value = item.substr(eq + 1);
    if (key == "state") {
      algo.state_mode = parse_state_mode(value);
      continue;
    }
    double parsed = 0.0;
    const auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), parsed);
    if (ec != std::errc{} || ptr != value.data() + value.size())
      throw ConfigError("algorithm descriptor '" + std::string(text) + "': bad value for '" +
                        std::string(key) + "'");
    if (key == "eps")
      algo.epsilon = parsed;
    else if (key == "alpha")
      algo.alpha = parsed;
    else if (key == "gamma")
      algo.gamma = parsed;
    else
      throw ConfigError("algorithm descriptor '" + std::string(text) + "': unknown key '" +
                        std::string(key) + "'");
  }
  try {
    algo.make_config(1, 0).validate();
  } catch (const std::invalid_argument& e) {
    throw ConfigError("algorithm descriptor '" + std::string(text) + "': " + e.what());
  }
  return algo;
}

std::string CellResult::key() const {
  return earl::descriptor(problem) + "/" + algo.descriptor();
}

std::uint64_t derive_run_seed(std::uint64_t base, std::uint64_t cell_index,
                              std::uint64_t run_index) {
  std::uint64_t h = splitmix64(base);
  h = splitmix64(h ^ cell_index);
  h = splitmix64(h ^ run_index);
  return h;
}

std::vector<RunResult> run_cell(const ProblemSpec& problem, const AlgoDescriptor& algo,
                                long runs, long cap, std::uint64_t base_seed,
                                std::uint64_t cell_index, int parallelism) {
  if (runs < 1) throw std::invalid_argument("run_cell: runs must be at least 1");
  std::vector<RunResult> results(runs);
  const auto work = [&](std::atomic<long>& next) {
    for (long i = next.fetch_add(1); i < runs; i = next.fetch_add(1)) {
      const auto cfg = algo.make_config(cap, derive_run_seed(base_seed, cell_index, i));
      results[i] = run(problem, cfg);
    }
  };
  if (parallelism <= 1) {
    std::atomic<long> next{0};
    work(next);
  } else {
    std::atomic<long> next{0};
    std::vector<std::thread> workers;
    const long count = std::min<long>(parallelism, runs);
    workers.reserve(count);
    for (long t = 0; t < count; ++t) workers.emplace_back([&] { work(next); });
    for (auto& w : workers) w.join();
  }
  return results;
}

std::vector<CellResult> run_grid(const ExperimentGrid& grid) {
  if (grid.runs_per_cell < 1)
    throw ConfigError("grid: runs must be at least 1");
  if (grid.cap < 1) throw ConfigError("grid: cap must be at least 1");
  if (grid.parallelism < 1) throw ConfigError("grid: parallelism must be at least 1");
  std::vector<CellResult> out;
  std::uint64_t cell_index = 0;
  for (const auto& problem : grid.problems) {
    for (const auto& algo : grid.algorithms) {
      const auto runs = run_cell(problem, algo, grid.runs_per_cell, grid.cap, grid.base_seed,
                                 cell_index, grid.parallelism);
      CellResult cell{problem, algo, summarize(runs), {}};
      if (grid.retain_samples) {
        cell.evaluations.reserve(runs.size());
        for (const auto& r : runs) cell.evaluations.push_back(r.evaluations);
      }
      out.push_back(std::move(cell));
      ++cell_index;
    }
  }
  return out;
}

namespace {

const char* kCsvHeader =
    "problem,n,d,k,p,algorithm,state_mode,epsilon,runs,censored,mean_evals,std_err,display";

std::string csv_row(const CellResult& cell) {
  const ProblemSpec& pr = cell.problem;
  std::string row;
  switch (pr.kind) {
    case ProblemKind::OMd: row = "omd"; break;
    case ProblemKind::XdivK: row = "xdivk"; break;
    case ProblemKind::LeadingOnes: row = "leadingones"; break;
  }
  row += "," + std::to_string(pr.n);
  row += "," + (pr.kind == ProblemKind::OMd ? std::to_string(pr.d) : std::string());
  row += "," + (pr.kind == ProblemKind::XdivK ? std::to_string(pr.k) : std::string());
  row += "," + std::to_string(pr.p);
  row += ",";
  row += variant_name(cell.algo.variant);
  const bool has_agent = cell.algo.variant != Variant::RLS;
  row += "," + (has_agent ? std::string(state_mode_name(cell.algo.state_mode)) : std::string());
  row += "," + (has_agent ? format_double(cell.algo.epsilon) : std::string());
  row += "," + std::to_string(cell.summary.count);
  row += "," + std::to_string(cell.summary.censored);
  row += "," + (cell.summary.mean_defined ? format_double_exact(cell.summary.mean) : std::string());
  row += "," +
         (cell.summary.stderr_defined ? format_double_exact(cell.summary.std_err) : std::string());
  row += "," + cell.summary.display;
  return row;
}

}  // namespace

std::string emit_table(const std::vector<CellResult>& results, TableFormat format) {
  if (format == TableFormat::Csv) {
    std::string out = kCsvHeader;
    out += '\n';
    for (const auto& cell : results) {
      out += csv_row(cell);
      out += '\n';
    }
    return out;
  }

  // markdown: rows = problems, columns = algorithm labels, in first-seen
  // grid order
  std::vector<std::string> problems, algos;
  std::map<std::pair<std::string, std::string>, std::string> display;
  for (const auto& cell : results) {
    const std::string pr = descriptor(cell.problem);
    const std::string al = cell.algo.label();
    if (std::find(problems.begin(), problems.end(), pr) == problems.end()) problems.push_back(pr);
    if (std::find(algos.begin(), algos.end(), al) == algos.end()) algos.push_back(al);
    display[{pr, al}] = cell.summary.display;
  }
  std::string out = "| problem |";
  for (const auto& al : algos) out += " " + al + " |";
  out += "\n|---|";
  for (std::size_t i = 0; i < algos.size(); ++i) out += "---|";
  out += '\n';
  for (const auto& pr : problems) {
    out += "| " + pr + " |";
    for (const auto& al : algos) {
      const auto it = display.find({pr, al});
      out += " " + (it == display.end() ? std::string("-") : it->second) + " |";
    }
    out += '\n';
  }
  return out;
}

std::string ComparisonReport::to_string() const {
  std::ostringstream out;
  out << "cell_a: " << cell_a << " (censored " << censored_a << ")\n";
  out << "cell_b: " << cell_b << " (censored " << censored_b << ")\n";
  char buf[160];
  std::snprintf(buf, sizeof(buf), "U=%g p=%g m=%ld p_corrected=%g verdict=%s\n", u, p_raw, m,
                p_corrected, verdict.c_str());
  out << buf;
  return out.str();
}

ComparisonReport compare_cells(const std::vector<CellResult>& results, std::string_view cell_a,
                               std::string_view cell_b, long m) {
  const auto find_cell = [&](std::string_view key) -> const CellResult& {
    for (const auto& cell : results)
      if (cell.key() == key) return cell;
    throw ConfigError("compare: no cell named '" + std::string(key) + "'");
  };
  const CellResult& a = find_cell(cell_a);
  const CellResult& b = find_cell(cell_b);
  if (a.evaluations.empty() || b.evaluations.empty())
    throw ConfigError("compare: raw samples not retained; enable sample retention");

  std::vector<double> sa(a.evaluations.begin(), a.evaluations.end());
  std::vector<double> sb(b.evaluations.begin(), b.evaluations.end());
  const auto mw = mann_whitney_u(sa, sb);

  ComparisonReport report;
  report.cell_a = a.key();
  report.cell_b = b.key();
  report.censored_a = a.summary.censored;
  report.censored_b = b.summary.censored;
  report.u = mw.u_a;
  report.p_raw = mw.p;
  report.m = m;
  report.p_corrected = bonferroni(mw.p, m);
  report.significant = report.p_corrected < 0.05;
  report.verdict = report.significant ? "distinguishable" : "indistinguishable";
  return report;
}

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r'))
    s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r'))
    s.remove_suffix(1);
  return s;
}

long parse_long(std::string_view value, const std::string& where) {
  long parsed = 0;
  const auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), parsed);
  if (ec != std::errc{} || ptr != value.data() + value.size())
    throw ConfigError("config: bad number for " + where);
  return parsed;
}

}  // namespace

ExperimentGrid parse_config(std::istream& in) {
  ExperimentGrid grid;
  std::string section;
  std::string line;
  long line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::string_view text = line;
    const auto comment = text.find_first_of("#;");
    if (comment != std::string_view::npos) text = text.substr(0, comment);
    text = trim(text);
    if (text.empty()) continue;
    const std::string where = "line " + std::to_string(line_no);

    if (text.front() == '[') {
      if (text.back() != ']') throw ConfigError("config: unterminated section at " + where);
      section = std::string(text.substr(1, text.size() - 2));
      if (section != "grid" && section != "problems" && section != "algorithms")
        throw ConfigError("config: unknown section '" + section + "' at " + where);
      continue;
    }
    const auto eq = text.find('=');
    if (eq == std::string_view::npos)
      throw ConfigError("config: expected key = value at " + where);
    const std::string key{trim(text.substr(0, eq))};
    const std::string_view value = trim(text.substr(eq + 1));
    if (section.empty())
      throw ConfigError("config: entry before any section at " + where);

    if (section == "grid") {
      if (key == "runs")
        grid.runs_per_cell = parse_long(value, where);
      else if (key == "cap")
        grid.cap = parse_long(value, where);
      else if (key == "seed")
        grid.base_seed = static_cast<std::uint64_t>(parse_long(value, where));
      else if (key == "parallelism")
        grid.parallelism = static_cast<int>(parse_long(value, where));
      else
        throw ConfigError("config: unknown key '" + key + "' in [grid] at " + where);
    } else if (section == "problems") {
      if (key != "problem")
        throw ConfigError("config: unknown key '" + key + "' in [problems] at " + where);
      grid.problems.push_back(parse_problem(value));
    } else {
      if (key != "algo")
        throw ConfigError("config: unknown key '" + key + "' in [algorithms] at " + where);
      grid.algorithms.push_back(parse_algorithm(value));
    }
  }
  return grid;
}

ExperimentGrid parse_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("config: cannot open '" + path + "'");
  return parse_config(in);
}

}  // namespace earl
