#include "earl/algorithms.hpp"

#include <cstdio>

namespace earl {

RunResult run(const ProblemSpec& problem, const AlgorithmConfig& cfg) {
  QTable q;
  return detail::run_with(problem, cfg, detail::ProblemEvaluator{problem},
                          [](long, const StepOutcome&) {}, q);
}

RunResult run_traced(const ProblemSpec& problem, const AlgorithmConfig& cfg,
                     const TraceSink& sink, QTable* q_out) {
  QTable q;
  const RunResult result = detail::run_with(
      problem, cfg, detail::ProblemEvaluator{problem},
      [&](long generation, const StepOutcome& out) {
        if (sink) sink(generation, out);
      },
      q);
  if (q_out) *q_out = std::move(q);
  return result;
}

std::pair<BitString, StepOutcome> step_rls(const BitString& y, const ProblemSpec& problem,
                                           Rng& rng) {
  BitString current = y;
  BitString scratch(y.size());
  StepOutcome out = detail::generation_rls(current, scratch, problem, rng);
  return {std::move(current), out};
}

std::pair<BitString, StepOutcome> step_earl(const BitString& y, const ProblemSpec& problem,
                                            QTable& q, const AgentConfig& cfg, Rng& rng) {
  cfg.validate();
  BitString current = y;
  BitString scratch(y.size());
  StepOutcome out = detail::generation_earl(current, scratch, problem,
                                            detail::ProblemEvaluator{problem}, q, cfg, rng, rng);
  return {std::move(current), out};
}

std::pair<BitString, StepOutcome> step_modified(const BitString& y, const ProblemSpec& problem,
                                                QTable& q, const AgentConfig& cfg, bool learning,
                                                Rng& rng) {
  cfg.validate();
  BitString current = y;
  BitString scratch(y.size());
  StepOutcome out =
      detail::generation_modified(current, scratch, problem, detail::ProblemEvaluator{problem},
                                  q, cfg, learning, rng, rng);
  return {std::move(current), out};
}

std::string trace_csv_header() {
  return "generation,chosen_objective,accepted,reward,target_value,state";
}

// One row per generation; state is the state in which the choice was made.
std::string trace_csv_row(long generation, const StepOutcome& out) {
  char buf[128];
  std::snprintf(buf, sizeof(buf), "%ld,%s,%d,%.17g,%ld,%s", generation,
                out.chosen ? objective_name(*out.chosen) : "", out.accepted ? 1 : 0, out.reward,
                out.target_after, out.state_before.to_string().c_str());
  return buf;
}

}  // namespace earl
