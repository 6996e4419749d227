#include "earl/stats.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numeric>

namespace earl {

SampleSummary summarize(const std::vector<RunResult>& samples, double min_finish_fraction) {
  if (samples.empty()) throw std::invalid_argument("summarize: empty sample");
  if (!(min_finish_fraction >= 0.0 && min_finish_fraction <= 1.0))
    throw std::invalid_argument("summarize: min_finish_fraction must be in [0, 1]");
  SampleSummary s;
  s.count = samples.size();
  std::vector<double> finished;
  finished.reserve(samples.size());
  for (const auto& r : samples) {
    if (r.reached_optimum)
      finished.push_back(static_cast<double>(r.evaluations));
    else
      ++s.censored;
  }
  s.mean_defined = !finished.empty();
  if (s.mean_defined) {
    s.mean = std::accumulate(finished.begin(), finished.end(), 0.0) / finished.size();
    if (finished.size() >= 2) {
      double ss = 0.0;
      for (const double v : finished) ss += (v - s.mean) * (v - s.mean);
      s.std_dev = std::sqrt(ss / (finished.size() - 1));
      s.std_err = s.std_dev / std::sqrt(static_cast<double>(finished.size()));
      s.stderr_defined = true;
    }
  }
  const double finish_fraction = static_cast<double>(finished.size()) / s.count;
  s.displayed_inf = finish_fraction < min_finish_fraction;
  if (s.displayed_inf) {
    s.display = "inf";
  } else {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.4g", s.mean);
    s.display = buf;
  }
  return s;
}

namespace {

// midranks doubled so ties stay integral; returns doubled ranks pooled in
// sorted order plus the doubled rank sum of sample a
struct PooledRanks {
  std::vector<long> doubled;       // doubled midrank of each pooled sorted value
  std::vector<bool> from_a;       // group of each pooled sorted value
  long doubled_rank_sum_a = 0;
  double tie_term = 0.0;          // sum of t^3 - t over tie groups
};

PooledRanks pool_and_rank(const std::vector<double>& a, const std::vector<double>& b) {
  struct Item {
    double value;
    bool in_a;
  };
  std::vector<Item> pooled;
  pooled.reserve(a.size() + b.size());
  for (const double v : a) pooled.push_back({v, true});
  for (const double v : b) pooled.push_back({v, false});
  std::sort(pooled.begin(), pooled.end(),
            [](const Item& x, const Item& y) { return x.value < y.value; });

  PooledRanks out;
  out.doubled.resize(pooled.size());
  out.from_a.resize(pooled.size());
  std::size_t i = 0;
  while (i < pooled.size()) {
    std::size_t j = i;
    while (j < pooled.size() && pooled[j].value == pooled[i].value) ++j;
    const long t = static_cast<long>(j - i);
    // midrank of positions i+1 .. j, doubled: (i+1 + j)
    const long doubled_midrank = static_cast<long>(i + 1 + j);
    for (std::size_t idx = i; idx < j; ++idx) {
      out.doubled[idx] = doubled_midrank;
      out.from_a[idx] = pooled[idx].in_a;
      if (pooled[idx].in_a) out.doubled_rank_sum_a += doubled_midrank;
    }
    if (t > 1) out.tie_term += static_cast<double>(t) * t * t - t;
    i = j;
  }
  return out;
}

}  // namespace

MannWhitneyResult mann_whitney_u(const std::vector<double>& a, const std::vector<double>& b) {
  if (a.empty() || b.empty())
    throw std::invalid_argument("mann_whitney_u: samples must be non-empty");
  const double na = static_cast<double>(a.size());
  const double nb = static_cast<double>(b.size());
  const double n = na + nb;
  const auto ranks = pool_and_rank(a, b);

  MannWhitneyResult result;
  result.u_a = ranks.doubled_rank_sum_a / 2.0 - na * (na + 1.0) / 2.0;
  result.u_b = na * nb - result.u_a;

  const double variance =
      na * nb / 12.0 * ((n + 1.0) - ranks.tie_term / (n * (n - 1.0)));
  if (variance <= 0.0) {
    result.p = 1.0;  // all pooled values identical
    return result;
  }
  const double mean_u = na * nb / 2.0;
  const double z = std::max(0.0, (std::abs(result.u_a - mean_u) - 0.5) / std::sqrt(variance));
  result.p = std::min(1.0, std::erfc(z / std::sqrt(2.0)));
  return result;
}

double mann_whitney_exact_p(const std::vector<double>& a, const std::vector<double>& b) {
  if (a.empty() || b.empty())
    throw std::invalid_argument("mann_whitney_exact_p: samples must be non-empty");
  const long na = static_cast<long>(a.size());
  const long n = static_cast<long>(a.size() + b.size());
  const auto ranks = pool_and_rank(a, b);

  // everything in quadrupled units: 4U = 2 * doubled_rank_sum - 2 na(na+1),
  // 4 * mean U = 2 na nb, so comparisons stay integral
  const long u4_obs = 2 * ranks.doubled_rank_sum_a - 2 * na * (na + 1);
  const long mean4 = 2 * na * static_cast<long>(b.size());
  const long dev_obs = std::abs(u4_obs - mean4);

  long long as_extreme = 0, total = 0;
  // enumerate all assignments of na pooled positions to sample a
  const auto recurse = [&](auto&& self, long next_pos, long picked, long doubled_sum) -> void {
    if (picked == na) {
      ++total;
      const long dev = std::abs(2 * doubled_sum - 2 * na * (na + 1) - mean4);
      if (dev >= dev_obs) ++as_extreme;
      return;
    }
    if (n - next_pos < na - picked) return;
    for (long pos = next_pos; pos <= n - (na - picked); ++pos)
      self(self, pos + 1, picked + 1, doubled_sum + ranks.doubled[pos]);
  };
  recurse(recurse, 0, 0, 0);
  return static_cast<double>(as_extreme) / static_cast<double>(total);
}

double bonferroni(double p, long m) {
  if (m < 1) throw std::invalid_argument("bonferroni: m must be at least 1");
  return std::min(1.0, p * static_cast<double>(m));
}

}  // namespace earl
