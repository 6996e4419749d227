#include "earl/rl.hpp"

#include <algorithm>
#include <cstdio>

namespace earl {

std::vector<QTable::Entry> QTable::entries() const {
  std::vector<Entry> out;
  out.reserve(rows_.size() * 3);
  std::vector<long> keys;
  keys.reserve(rows_.size());
  for (const auto& [key, row] : rows_) keys.push_back(key);
  std::sort(keys.begin(), keys.end());
  for (const long key : keys) {
    const auto& row = rows_.at(key);
    for (int h = 0; h < 3; ++h)
      out.push_back({key, static_cast<ObjectiveId>(h), row[h]});
  }
  return out;
}

std::string QTable::dump_csv() const {
  std::string out = "state,objective,value\n";
  char buf[64];
  for (const auto& e : entries()) {
    out += e.state_key < 0 ? "single" : std::to_string(e.state_key);
    out += ',';
    out += objective_name(e.objective);
    std::snprintf(buf, sizeof(buf), ",%.17g\n", e.value);
    out += buf;
  }
  return out;
}

ObjectiveId select_objective(const QTable& q, const StateId& s, double epsilon, Rng& rng) {
  if (!(epsilon >= 0.0 && epsilon <= 1.0))
    throw std::invalid_argument("select_objective: epsilon must be in [0, 1]");
  if (epsilon > 0.0 && rng.next_unit() < epsilon)
    return static_cast<ObjectiveId>(rng.next_index(3));
  const auto row = q.row_values(s);
  const double best = std::max({row[0], row[1], row[2]});
  ObjectiveId argmax[3];
  std::uint32_t count = 0;
  for (int h = 0; h < 3; ++h)
    if (row[h] == best) argmax[count++] = static_cast<ObjectiveId>(h);
  return count == 1 ? argmax[0] : argmax[rng.next_index(count)];
}

void q_update(QTable& q, const StateId& s, ObjectiveId h, double r, const StateId& s_next,
              const AgentConfig& cfg) {
  if (!std::isfinite(r)) throw std::invalid_argument("q_update: reward must be finite");
  const auto next = q.row_values(s_next);
  const double best_next = std::max({next[0], next[1], next[2]});
  const double old = q.get(s, h);
  q.set(s, h, old + cfg.alpha * (r + cfg.gamma * best_next - old));
}

}  // namespace earl
