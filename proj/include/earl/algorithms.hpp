#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <utility>

#include "earl/bitstring.hpp"
#include "earl/problems.hpp"
#include "earl/rl.hpp"
#include "earl/rng.hpp"

namespace earl {

enum class Variant { RLS, EARL, ModifiedLearning, ModifiedNoLearning };

struct AlgorithmConfig {
  Variant variant = Variant::RLS;
  std::optional<AgentConfig> agent;  // absent for RLS
  long cap = 1000000;
  std::uint64_t seed = 0;

  void validate() const {
    if (cap < 1) throw std::invalid_argument("AlgorithmConfig: cap must be at least 1");
    if (variant == Variant::RLS) {
      if (agent) throw std::invalid_argument("AlgorithmConfig: RLS carries no agent");
    } else {
      if (!agent) throw std::invalid_argument("AlgorithmConfig: agent settings required");
      agent->validate();
    }
  }
};

struct StepOutcome {
  std::optional<ObjectiveId> chosen;  // absent for RLS
  bool accepted = false;
  double reward = 0.0;
  Value saved_target = 0;  // target value before the step
  Value target_after = 0;  // target value of the kept individual
  StateId state_before;
  StateId state_after;
};

struct RunResult {
  long evaluations = 0;
  bool reached_optimum = false;
  Value best_target = 0;
  long cap = 0;
  std::uint64_t seed = 0;
};

namespace detail {

// Selector draws come from a substream separate from mutation draws, so
// the number of agent draws in a generation never shifts which bits later
// generations flip. RLS and any agent variant given the same seed see the
// same initial individual and the same mutation sequence.
inline constexpr std::uint64_t kAgentStreamSalt = 0x61676e74ULL;

struct ProblemEvaluator {
  const ProblemSpec& problem;
  Value operator()(ObjectiveId h, const BitString& y) const { return evaluate(h, problem, y); }
};

inline StepOutcome generation_rls(BitString& y, BitString& scratch, const ProblemSpec& problem,
                                  Rng& mut) {
  StepOutcome out;
  const Value before = target_value(problem, y);
  out.saved_target = before;
  out.state_before = StateId::target(before);
  scratch = y;
  scratch.flip(mut.next_index(static_cast<std::uint32_t>(y.size())));
  const Value after = target_value(problem, scratch);
  out.accepted = after >= before;
  if (out.accepted) std::swap(y, scratch);
  out.target_after = out.accepted ? after : before;
  out.state_after = StateId::target(out.target_after);
  return out;
}

// One generation of the unmodified agent-driven loop: the selected
// objective alone decides acceptance, so the target value may drop.
// Reward is the target-value change of the kept individual in both
// state modes; with target-value states this coincides with the state
// difference, and with a single state it keeps the learning signal
// alive instead of degenerating to zero.
template <class Eval>
StepOutcome generation_earl(BitString& y, BitString& scratch, const ProblemSpec& problem,
                            Eval&& eval, QTable& q, const AgentConfig& cfg, Rng& mut,
                            Rng& agent) {
  StepOutcome out;
  const Value before = target_value(problem, y);
  out.saved_target = before;
  out.state_before = state_from_value(cfg.state_mode, before);
  scratch = y;
  scratch.flip(mut.next_index(static_cast<std::uint32_t>(y.size())));
  const ObjectiveId h = select_objective(q, out.state_before, cfg.epsilon, agent);
  out.chosen = h;
  out.accepted = eval(h, scratch) >= eval(h, y);
  if (out.accepted) std::swap(y, scratch);
  out.target_after = out.accepted ? target_value(problem, y) : before;
  out.state_after = state_from_value(cfg.state_mode, out.target_after);
  out.reward = static_cast<double>(out.target_after - before);
  q_update(q, out.state_before, h, out.reward, out.state_after, cfg);
  return out;
}

// One generation of the best-preserving loop: acceptance additionally
// requires the target value not to drop, and the new state is computed
// after the decision (a rejected step keeps the old state).
// learning=true punishes a selection whose objective would have accepted
// a target-losing individual, as if it had been accepted; learning=false
// rewards only the realized target change, which is never negative.
template <class Eval>
StepOutcome generation_modified(BitString& y, BitString& scratch, const ProblemSpec& problem,
                                Eval&& eval, QTable& q, const AgentConfig& cfg, bool learning,
                                Rng& mut, Rng& agent) {
  StepOutcome out;
  const Value f = target_value(problem, y);
  out.saved_target = f;
  out.state_before = state_from_value(cfg.state_mode, f);
  scratch = y;
  scratch.flip(mut.next_index(static_cast<std::uint32_t>(y.size())));
  const ObjectiveId h = select_objective(q, out.state_before, cfg.epsilon, agent);
  out.chosen = h;
  const Value t_new = target_value(problem, scratch);
  const bool h_accepts = eval(h, scratch) >= eval(h, y);
  out.accepted = h_accepts && t_new >= f;
  if (out.accepted) std::swap(y, scratch);
  out.target_after = out.accepted ? t_new : f;
  out.state_after = state_from_value(cfg.state_mode, out.target_after);
  if (learning)
    out.reward = h_accepts ? static_cast<double>(t_new - f) : 0.0;
  else
    out.reward = static_cast<double>(out.target_after - f);
  q_update(q, out.state_before, h, out.reward, out.state_after, cfg);
  return out;
}

// Full run loop shared by all variants. Counts one evaluation for the
// initial individual plus one per generation, regardless of how many
// objective functions a generation computes. Censored runs report
// evaluations = cap.
template <class Eval, class Sink>
RunResult run_with(const ProblemSpec& problem, const AlgorithmConfig& cfg, Eval&& eval,
                   Sink&& sink, QTable& q) {
  cfg.validate();
  Rng mut(splitmix64(cfg.seed));
  Rng agent(splitmix64(cfg.seed ^ kAgentStreamSalt));
  const AgentConfig agent_cfg = cfg.agent.value_or(AgentConfig{});

  BitString y = random_bitstring(problem.n, mut);
  BitString scratch(problem.n);
  const Value optimum = optimum_value(problem);

  RunResult result;
  result.cap = cfg.cap;
  result.seed = cfg.seed;
  result.evaluations = 1;
  Value current = target_value(problem, y);
  result.best_target = current;

  long generation = 0;
  while (current != optimum && result.evaluations < cfg.cap) {
    StepOutcome out;
    switch (cfg.variant) {
      case Variant::RLS:
        out = generation_rls(y, scratch, problem, mut);
        break;
      case Variant::EARL:
        out = generation_earl(y, scratch, problem, eval, q, agent_cfg, mut, agent);
        break;
      case Variant::ModifiedLearning:
        out = generation_modified(y, scratch, problem, eval, q, agent_cfg, true, mut, agent);
        break;
      case Variant::ModifiedNoLearning:
        out = generation_modified(y, scratch, problem, eval, q, agent_cfg, false, mut, agent);
        break;
    }
    ++generation;
    ++result.evaluations;
    current = out.target_after;
    if (current > result.best_target) result.best_target = current;
    sink(generation, out);
  }
  result.reached_optimum = current == optimum;
  return result;
}

}  // namespace detail

using TraceSink = std::function<void(long generation, const StepOutcome&)>;

RunResult run(const ProblemSpec& problem, const AlgorithmConfig& cfg);
RunResult run_traced(const ProblemSpec& problem, const AlgorithmConfig& cfg,
                     const TraceSink& sink, QTable* q_out = nullptr);

// Single-generation forms of the run loops; the input individual is not
// modified. Draw order on the shared rng: mutation position first, then
// selector draws.
std::pair<BitString, StepOutcome> step_rls(const BitString& y, const ProblemSpec& problem,
                                           Rng& rng);
std::pair<BitString, StepOutcome> step_earl(const BitString& y, const ProblemSpec& problem,
                                            QTable& q, const AgentConfig& cfg, Rng& rng);
std::pair<BitString, StepOutcome> step_modified(const BitString& y, const ProblemSpec& problem,
                                                QTable& q, const AgentConfig& cfg, bool learning,
                                                Rng& rng);

std::string trace_csv_header();
std::string trace_csv_row(long generation, const StepOutcome& out);

}  // namespace earl
