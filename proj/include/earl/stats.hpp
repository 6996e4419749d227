#pragma once

#include <string>
#include <vector>

#include "earl/algorithms.hpp"

namespace earl {

struct SampleSummary {
  std::size_t count = 0;
  std::size_t censored = 0;
  double mean = 0.0;     // over uncensored runs
  double std_dev = 0.0;  // sample standard deviation
  double std_err = 0.0;
  bool mean_defined = false;
  bool stderr_defined = false;  // needs at least two uncensored runs
  bool displayed_inf = false;
  std::string display;  // formatted mean, or "inf"
};

// Aggregates evaluation counts of the uncensored runs. The cell displays
// "inf" when fewer than min_finish_fraction of the runs finished.
SampleSummary summarize(const std::vector<RunResult>& samples,
                        double min_finish_fraction = 0.5);

struct MannWhitneyResult {
  double u_a = 0.0;
  double u_b = 0.0;
  double p = 1.0;  // two-sided
};

// Midrank U statistic; p from the normal approximation with tie-corrected
// variance and 0.5 continuity correction. Identical samples give p = 1.
MannWhitneyResult mann_whitney_u(const std::vector<double>& a, const std::vector<double>& b);

// Exact two-sided p by enumerating all C(|a|+|b|, |a|) group assignments
// of the pooled midranks: P(|U - mean| >= |observed U - mean|). Intended
// for small samples; cost grows binomially.
double mann_whitney_exact_p(const std::vector<double>& a, const std::vector<double>& b);

double bonferroni(double p, long m);

}  // namespace earl
