#pragma once

#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace earl {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Birth-death chain over ones-counts 0..n; state n is absorbing. Backward
// probability is 0 at plateau boundaries (x divisible by k), which is what
// makes the expected hitting time finite despite the plateaus.
struct BirthDeathChain {
  long n = 0;
  std::vector<Rational> forward;   // index 0..n
  std::vector<Rational> backward;  // index 0..n
  std::vector<Rational> stay;      // index 0..n
};

enum class ChainKind { ModifiedNoLearning, Rls };

// Chain of the best-preserving no-learning loop on XdivK: at every state
// forward = 2(n-x)/(3n); backward = 2x/(3n) except 0 at x = 0 mod k.
BirthDeathChain chain_modified_no_learning(long n, long k);

// Plain RLS chain on XdivK: forward = (n-x)/n; backward = x/n except 0 at
// x = 0 mod k, where the chain stays instead.
BirthDeathChain chain_rls(long n, long k);

// Expected transitions E(i -> i+1) for each state, plus totals.
struct HittingTimes {
  long n = 0;
  std::vector<Rational> per_state;  // index 0..n-1

  Rational total_from_state(long start) const;
  // weights over states 0..n, must sum to 1
  Rational total_from_distribution(const std::vector<Rational>& weights) const;
};

// Closed-form per-state recurrence, evaluated exactly:
//   modified: z_{dk}   = 3n / (2(n-dk))
//             z_{dk+t} = z_{dk+t-1} * (dk+t)/(n-dk-t) + 3n/(2(n-dk-t))
//   rls:      a_{dk}   = n / (n-dk)
//             a_{dk+t} = a_{dk+t-1} * (dk+t)/(n-dk-t) + n/(n-dk-t)
HittingTimes per_state_times_recurrence(ChainKind kind, long n, long k);

// Independent oracle: solves E(x) = 1 + f E(x+1) + b E(x-1) + s E(x),
// E(n) = 0, by forward elimination over the tridiagonal system. Returns
// E(x) for every state. Throws InvariantError for non-stochastic chains.
std::vector<Rational> hitting_times_all(const BirthDeathChain& chain);
Rational hitting_time_solve(const BirthDeathChain& chain, long start_state);
Rational hitting_time_solve(const BirthDeathChain& chain,
                            const std::vector<Rational>& start_distribution);

// Start distribution of a uniform random bit string: C(n,i) / 2^n.
std::vector<Rational> binomial_start(long n);

struct AsymptoticEntry {
  long n;
  Rational total;      // T(n) from state 0, RLS chain
  double over_nk;      // T(n) / n^k
  double over_nk1;     // T(n) / n^(k+1)
};

struct DoublingEntry {
  long n_from, n_to;   // n_to = 2 * n_from
  double ratio;        // T(n_to) / T(n_from)
  bool within_band;    // ratio in [2^k, 2^(k+1)], compared exactly
};

struct AsymptoticReport {
  long k = 0;
  std::vector<AsymptoticEntry> entries;
  std::vector<DoublingEntry> doublings;
  double min_over_nk = 0, max_over_nk = 0;
  double min_over_nk1 = 0, max_over_nk1 = 0;

  bool last_doublings_within_band(std::size_t count) const;
};

// Growth sanity report for T_rls over an increasing range of n.
AsymptoticReport asymptotic_bounds_check(const std::vector<long>& ns, long k);

}  // namespace earl
