#pragma once

#include <array>
#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "earl/problems.hpp"
#include "earl/rng.hpp"

namespace earl {

enum class StateMode { TargetState, SingleState };

struct AgentConfig {
  double alpha = 0.5;    // learning rate, (0, 1]
  double gamma = 0.5;    // discount factor, [0, 1]
  double epsilon = 0.1;  // exploration probability, [0, 1]
  StateMode state_mode = StateMode::TargetState;

  void validate() const {
    if (!(alpha > 0.0 && alpha <= 1.0))
      throw std::invalid_argument("AgentConfig: alpha must be in (0, 1]");
    if (!(gamma >= 0.0 && gamma <= 1.0))
      throw std::invalid_argument("AgentConfig: gamma must be in [0, 1]");
    if (!(epsilon >= 0.0 && epsilon <= 1.0))
      throw std::invalid_argument("AgentConfig: epsilon must be in [0, 1]");
  }
};

// Agent state: either the current target value, or one constant state for
// the whole run. All SingleState values compare equal.
class StateId {
 public:
  StateId() : mode_(StateMode::SingleState), value_(0) {}

  static StateId single() { return StateId(); }

  static StateId target(Value v) {
    if (v < 0) throw std::invalid_argument("StateId: target value must be non-negative");
    StateId s;
    s.mode_ = StateMode::TargetState;
    s.value_ = v;
    return s;
  }

  StateMode mode() const { return mode_; }
  Value value() const { return value_; }

  // Map key; SingleState uses a sentinel below any target value.
  long key() const { return mode_ == StateMode::SingleState ? -1 : static_cast<long>(value_); }

  std::string to_string() const {
    return mode_ == StateMode::SingleState ? "single" : std::to_string(value_);
  }

  friend bool operator==(const StateId& a, const StateId& b) { return a.key() == b.key(); }

 private:
  StateMode mode_;
  Value value_;
};

// Sparse action-value table; absent entries read as exactly 0.
class QTable {
 public:
  double get(const StateId& s, ObjectiveId h) const {
    const auto it = rows_.find(s.key());
    return it == rows_.end() ? 0.0 : it->second[static_cast<int>(h)];
  }

  void set(const StateId& s, ObjectiveId h, double value) {
    if (!std::isfinite(value))
      throw std::invalid_argument("QTable: stored values must be finite");
    rows_[s.key()][static_cast<int>(h)] = value;
  }

  std::array<double, 3> row_values(const StateId& s) const {
    const auto it = rows_.find(s.key());
    return it == rows_.end() ? std::array<double, 3>{0.0, 0.0, 0.0} : it->second;
  }

  std::size_t row_count() const { return rows_.size(); }

  struct Entry {
    long state_key;
    ObjectiveId objective;
    double value;
  };
  std::vector<Entry> entries() const;  // sorted by (state_key, objective)

  // "state,objective,value" rows; the single state prints as "single".
  std::string dump_csv() const;

 private:
  std::unordered_map<long, std::array<double, 3>> rows_;
};

inline StateId state_from_value(StateMode mode, Value target) {
  return mode == StateMode::SingleState ? StateId::single() : StateId::target(target);
}

inline StateId state_of(const ProblemSpec& problem, const BitString& y, StateMode mode) {
  return mode == StateMode::SingleState ? StateId::single()
                                        : StateId::target(target_value(problem, y));
}

// epsilon-greedy over the three objectives: explore uniformly over all of
// them, otherwise pick uniformly among the argmax set. Draw order: the
// epsilon coin (only when epsilon > 0), then the explore/tie-break index
// (only when needed).
ObjectiveId select_objective(const QTable& q, const StateId& s, double epsilon, Rng& rng);

// Q(s,h) += alpha * (r + gamma * max_h' Q(s_next,h') - Q(s,h))
void q_update(QTable& q, const StateId& s, ObjectiveId h, double r, const StateId& s_next,
              const AgentConfig& cfg);

}  // namespace earl
