#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>

#include "earl/bitstring.hpp"

namespace earl {

using Value = long;

enum class ProblemKind { OMd, XdivK, LeadingOnes };

// The set H the agent selects from: the target objective plus the two
// non-stationary auxiliary objectives.
enum class ObjectiveId { Target = 0, Aux1 = 1, Aux2 = 2 };

const char* objective_name(ObjectiveId h);

// A problem instance: target objective plus the switch point p shared by
// the auxiliary pair. Build through the factories, which validate.
struct ProblemSpec {
  ProblemKind kind = ProblemKind::LeadingOnes;
  std::size_t n = 0;
  std::size_t d = 0;  // OMd only: zero bits in the mask
  std::size_t k = 0;  // XdivK only
  std::size_t p = 0;  // auxiliary switch point
  std::optional<BitString> mask;  // OMd only: first d positions 0, rest 1

  // p defaults to n/2 when omitted.
  static ProblemSpec omd(std::size_t n, std::size_t d,
                         std::optional<std::size_t> p = std::nullopt);
  static ProblemSpec xdivk(std::size_t n, std::size_t k,
                           std::optional<std::size_t> p = std::nullopt);
  static ProblemSpec leading_ones(std::size_t n,
                                  std::optional<std::size_t> p = std::nullopt);
};

inline Value onemax(const BitString& y) { return static_cast<Value>(y.ones()); }

inline Value zeromax(const BitString& y) {
  return static_cast<Value>(y.size() - y.ones());
}

// The auxiliary pair: below or at the switch point, Aux1 is OneMax and
// Aux2 is ZeroMax; above it they swap.
inline Value aux_value(ObjectiveId which, const BitString& y, std::size_t p) {
  if (which == ObjectiveId::Target)
    throw std::invalid_argument("aux_value: expected Aux1 or Aux2");
  const bool low = y.ones() <= p;
  const bool as_onemax = (which == ObjectiveId::Aux1) == low;
  return as_onemax ? onemax(y) : zeromax(y);
}

Value target_value(const ProblemSpec& problem, const BitString& y);
Value optimum_value(const ProblemSpec& problem);
Value evaluate(ObjectiveId h, const ProblemSpec& problem, const BitString& y);

// Descriptor form used in configs and CSV, e.g. "xdivk:n=40,k=2,p=39".
std::string descriptor(const ProblemSpec& problem);
ProblemSpec parse_problem(std::string_view text);

}  // namespace earl
