#include "earl/problems.hpp"

#include <charconv>
#include <map>
#include <vector>

#include "earl/errors.hpp"

namespace earl {

const char* objective_name(ObjectiveId h) {
  switch (h) {
    case ObjectiveId::Target: return "target";
    case ObjectiveId::Aux1: return "aux1";
    case ObjectiveId::Aux2: return "aux2";
  }
  throw std::invalid_argument("objective_name: bad objective");
}

namespace {

std::size_t default_p(std::size_t n, std::optional<std::size_t> p) {
  return p ? *p : n / 2;
}

void check_common(std::size_t n, std::size_t p) {
  if (n == 0) throw std::invalid_argument("problem: n must be at least 1");
  if (p > n) throw std::invalid_argument("problem: switch point p must be in [0, n]");
}

}  // namespace

ProblemSpec ProblemSpec::omd(std::size_t n, std::size_t d, std::optional<std::size_t> p) {
  const std::size_t sp = default_p(n, p);
  check_common(n, sp);
  if (d > n) throw std::invalid_argument("omd: d must be in [0, n]");
  ProblemSpec spec;
  spec.kind = ProblemKind::OMd;
  spec.n = n;
  spec.d = d;
  spec.p = sp;
  BitString mask(n);
  for (std::size_t i = d; i < n; ++i) mask.set(i, true);
  spec.mask = std::move(mask);
  return spec;
}

ProblemSpec ProblemSpec::xdivk(std::size_t n, std::size_t k, std::optional<std::size_t> p) {
  const std::size_t sp = default_p(n, p);
  check_common(n, sp);
  if (k == 0 || k >= n || n % k != 0)
    throw std::invalid_argument("xdivk: k must satisfy 1 <= k < n and k | n");
  ProblemSpec spec;
  spec.kind = ProblemKind::XdivK;
  spec.n = n;
  spec.k = k;
  spec.p = sp;
  return spec;
}

ProblemSpec ProblemSpec::leading_ones(std::size_t n, std::optional<std::size_t> p) {
  const std::size_t sp = default_p(n, p);
  check_common(n, sp);
  ProblemSpec spec;
  spec.kind = ProblemKind::LeadingOnes;
  spec.n = n;
  spec.p = sp;
  return spec;
}

Value target_value(const ProblemSpec& problem, const BitString& y) {
  if (y.size() != problem.n)
    throw std::invalid_argument("target_value: individual length does not match problem");
  switch (problem.kind) {
    case ProblemKind::OMd:
      return static_cast<Value>(problem.n - hamming_distance(y, *problem.mask));
    case ProblemKind::XdivK:
      return static_cast<Value>(y.ones() / problem.k);
    case ProblemKind::LeadingOnes:
      return static_cast<Value>(y.leading_ones());
  }
  throw std::invalid_argument("target_value: bad problem kind");
}

Value optimum_value(const ProblemSpec& problem) {
  switch (problem.kind) {
    case ProblemKind::OMd:
    case ProblemKind::LeadingOnes:
      return static_cast<Value>(problem.n);
    case ProblemKind::XdivK:
      return static_cast<Value>(problem.n / problem.k);
  }
  throw std::invalid_argument("optimum_value: bad problem kind");
}

Value evaluate(ObjectiveId h, const ProblemSpec& problem, const BitString& y) {
  if (h == ObjectiveId::Target) return target_value(problem, y);
  if (y.size() != problem.n)
    throw std::invalid_argument("evaluate: individual length does not match problem");
  return aux_value(h, y, problem.p);
}

std::string descriptor(const ProblemSpec& problem) {
  std::string out;
  switch (problem.kind) {
    case ProblemKind::OMd:
      out = "omd:n=" + std::to_string(problem.n) + ",d=" + std::to_string(problem.d);
      break;
    case ProblemKind::XdivK:
      out = "xdivk:n=" + std::to_string(problem.n) + ",k=" + std::to_string(problem.k);
      break;
    case ProblemKind::LeadingOnes:
      out = "leadingones:n=" + std::to_string(problem.n);
      break;
  }
  out += ",p=" + std::to_string(problem.p);
  return out;
}

namespace {

std::size_t parse_count(std::string_view text, std::string_view what) {
  std::size_t value = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || ptr != text.data() + text.size())
    throw ConfigError("problem descriptor: bad value for '" + std::string(what) + "'");
  return value;
}

}  // namespace

ProblemSpec parse_problem(std::string_view text) {
  const auto colon = text.find(':');
  const std::string_view kind = text.substr(0, colon);
  std::map<std::string, std::size_t, std::less<>> kv;
  if (colon != std::string_view::npos) {
    std::string_view rest = text.substr(colon + 1);
    while (!rest.empty()) {
      const auto comma = rest.find(',');
      const std::string_view item = rest.substr(0, comma);
      rest = comma == std::string_view::npos ? std::string_view{} : rest.substr(comma + 1);
      const auto eq = item.find('=');
      if (eq == std::string_view::npos || eq == 0)
        throw ConfigError("problem descriptor '" + std::string(text) + "': expected key=value pairs");
      kv.emplace(std::string(item.substr(0, eq)), parse_count(item.substr(eq + 1), item.substr(0, eq)));
    }
  }

  const auto take = [&](std::string_view key) -> std::optional<std::size_t> {
    const auto it = kv.find(key);
    if (it == kv.end()) return std::nullopt;
    const std::size_t v = it->second;
    kv.erase(it);
    return v;
  };
  const auto require = [&](std::string_view key) -> std::size_t {
    const auto v = take(key);
    if (!v)
      throw ConfigError("problem descriptor '" + std::string(text) + "': missing '" +
                        std::string(key) + "'");
    return *v;
  };

  try {
    ProblemSpec spec = [&] {
      if (kind == "omd") {
        const std::size_t n = require("n"), d = require("d");
        return ProblemSpec::omd(n, d, take("p"));
      }
      if (kind == "xdivk") {
        const std::size_t n = require("n"), k = require("k");
        return ProblemSpec::xdivk(n, k, take("p"));
      }
      if (kind == "leadingones") {
        const std::size_t n = require("n");
        return ProblemSpec::leading_ones(n, take("p"));
      }
      throw ConfigError("problem descriptor '" + std::string(text) +
                        "': unknown kind (expected omd, xdivk or leadingones)");
    }();
    if (!kv.empty())
      throw ConfigError("problem descriptor '" + std::string(text) + "': unknown key '" +
                        kv.begin()->first + "'");
    return spec;
  } catch (const std::invalid_argument& e) {
    throw ConfigError("problem descriptor '" + std::string(text) + "': " + e.what());
  }
}

}  // namespace earl
