#include "earl/markov.hpp"

#include <stdexcept>

#include "earl/errors.hpp"

namespace earl {

namespace {

void check_nk(long n, long k) {
  if (n < 1) throw std::invalid_argument("chain: n must be at least 1");
  if (k < 1 || k >= n || n % k != 0)
    throw std::invalid_argument("chain: k must satisfy 1 <= k < n and k | n");
}

BirthDeathChain make_chain(long n, long k, const Rational& scale) {
  // scale = 2/3 for the modified chain, 1 for RLS; probabilities are
  // scale * (n-x)/n forward and scale * x/n backward (0 at plateau
  // boundaries), remainder stays.
  BirthDeathChain chain;
  chain.n = n;
  chain.forward.assign(n + 1, 0);
  chain.backward.assign(n + 1, 0);
  chain.stay.assign(n + 1, 0);
  for (long x = 0; x < n; ++x) {
    chain.forward[x] = scale * Rational(n - x, n);
    if (x % k != 0) chain.backward[x] = scale * Rational(x, n);
    chain.stay[x] = 1 - chain.forward[x] - chain.backward[x];
  }
  chain.stay[n] = 1;
  return chain;
}

}  // namespace

BirthDeathChain chain_modified_no_learning(long n, long k) {
  check_nk(n, k);
  return make_chain(n, k, Rational(2, 3));
}

BirthDeathChain chain_rls(long n, long k) {
  check_nk(n, k);
  return make_chain(n, k, 1);
}

Rational HittingTimes::total_from_state(long start) const {
  if (start < 0 || start > n)
    throw std::invalid_argument("HittingTimes: start state out of range");
  Rational total = 0;
  for (long i = start; i < n; ++i) total += per_state[i];
  return total;
}

Rational HittingTimes::total_from_distribution(const std::vector<Rational>& weights) const {
  if (static_cast<long>(weights.size()) != n + 1)
    throw std::invalid_argument("HittingTimes: distribution must cover states 0..n");
  Rational sum = 0;
  for (const auto& w : weights) {
    if (w < 0) throw std::invalid_argument("HittingTimes: negative weight");
    sum += w;
  }
  if (sum != 1) throw std::invalid_argument("HittingTimes: distribution must sum to 1");
  // suffix sums of per_state give the total from each start state
  Rational total = 0;
  Rational suffix = 0;
  for (long start = n - 1; start >= 0; --start) {
    suffix += per_state[start];
    total += weights[start] * suffix;
  }
  return total;
}

HittingTimes per_state_times_recurrence(ChainKind kind, long n, long k) {
  check_nk(n, k);
  const Rational mult = kind == ChainKind::ModifiedNoLearning ? Rational(3, 2) : Rational(1);
  HittingTimes times;
  times.n = n;
  times.per_state.assign(n, 0);
  for (long dk = 0; dk < n; dk += k) {
    times.per_state[dk] = mult * Rational(n, n - dk);
    for (long t = 1; t < k && dk + t < n; ++t) {
      const long i = dk + t;
      times.per_state[i] =
          times.per_state[i - 1] * Rational(i, n - i) + mult * Rational(n, n - i);
    }
  }
  return times;
}

std::vector<Rational> hitting_times_all(const BirthDeathChain& chain) {
  const long n = chain.n;
  if (n < 1 || static_cast<long>(chain.forward.size()) != n + 1 ||
      static_cast<long>(chain.backward.size()) != n + 1 ||
      static_cast<long>(chain.stay.size()) != n + 1)
    throw InvariantError("hitting_times_all: malformed chain");
  for (long x = 0; x <= n; ++x) {
    if (chain.forward[x] < 0 || chain.backward[x] < 0 || chain.stay[x] < 0)
      throw InvariantError("hitting_times_all: negative transition probability");
    if (chain.forward[x] + chain.backward[x] + chain.stay[x] != 1)
      throw InvariantError("hitting_times_all: transition row does not sum to 1");
  }
  if (chain.backward[0] != 0)
    throw InvariantError("hitting_times_all: state 0 cannot move backward");
  for (long x = 0; x < n; ++x)
    if (chain.forward[x] == 0)
      throw InvariantError("hitting_times_all: absorbing state before the optimum");

  // E(x) = A(x) + B(x) E(x+1) by forward elimination
  std::vector<Rational> a(n), b(n);
  a[0] = 1 / chain.forward[0];
  b[0] = 1;
  for (long x = 1; x < n; ++x) {
    const Rational denom = 1 - chain.stay[x] - chain.backward[x] * b[x - 1];
    a[x] = (1 + chain.backward[x] * a[x - 1]) / denom;
    b[x] = chain.forward[x] / denom;
  }
  std::vector<Rational> expected(n + 1);
  expected[n] = 0;
  for (long x = n - 1; x >= 0; --x) expected[x] = a[x] + b[x] * expected[x + 1];
  return expected;
}

Rational hitting_time_solve(const BirthDeathChain& chain, long start_state) {
  if (start_state < 0 || start_state > chain.n)
    throw std::invalid_argument("hitting_time_solve: start state out of range");
  return hitting_times_all(chain)[start_state];
}

Rational hitting_time_solve(const BirthDeathChain& chain,
                            const std::vector<Rational>& start_distribution) {
  if (static_cast<long>(start_distribution.size()) != chain.n + 1)
    throw std::invalid_argument("hitting_time_solve: distribution must cover states 0..n");
  Rational sum = 0;
  for (const auto& w : start_distribution) {
    if (w < 0) throw std::invalid_argument("hitting_time_solve: negative weight");
    sum += w;
  }
  if (sum != 1) throw std::invalid_argument("hitting_time_solve: distribution must sum to 1");
  const auto expected = hitting_times_all(chain);
  Rational total = 0;
  for (long x = 0; x <= chain.n; ++x) total += start_distribution[x] * expected[x];
  return total;
}

std::vector<Rational> binomial_start(long n) {
  if (n < 1) throw std::invalid_argument("binomial_start: n must be at least 1");
  std::vector<Rational> weights(n + 1);
  const BigInt denom = BigInt(1) << n;
  BigInt binom = 1;
  for (long i = 0; i <= n; ++i) {
    weights[i] = Rational(binom, denom);
    if (i < n) binom = binom * (n - i) / (i + 1);
  }
  return weights;
}

bool AsymptoticReport::last_doublings_within_band(std::size_t count) const {
  if (doublings.size() < count) return false;
  for (std::size_t i = doublings.size() - count; i < doublings.size(); ++i)
    if (!doublings[i].within_band) return false;
  return true;
}

AsymptoticReport asymptotic_bounds_check(const std::vector<long>& ns, long k) {
  if (ns.empty()) throw std::invalid_argument("asymptotic_bounds_check: empty range");
  AsymptoticReport report;
  report.k = k;
  Rational prev_total;
  for (std::size_t i = 0; i < ns.size(); ++i) {
    const long n = ns[i];
    if (i > 0 && n <= ns[i - 1])
      throw std::invalid_argument("asymptotic_bounds_check: n values must increase");
    const Rational total = per_state_times_recurrence(ChainKind::Rls, n, k).total_from_state(0);
    BigInt nk = 1;
    for (long j = 0; j < k; ++j) nk *= n;
    AsymptoticEntry entry;
    entry.n = n;
    entry.total = total;
    entry.over_nk = static_cast<double>(total / Rational(nk));
    entry.over_nk1 = static_cast<double>(total / Rational(nk * n));
    report.entries.push_back(entry);
    if (i > 0 && n == 2 * ns[i - 1]) {
      const Rational ratio = total / prev_total;
      DoublingEntry doubling;
      doubling.n_from = ns[i - 1];
      doubling.n_to = n;
      doubling.ratio = static_cast<double>(ratio);
      doubling.within_band =
          ratio >= Rational(BigInt(1) << k) && ratio <= Rational(BigInt(1) << (k + 1));
      report.doublings.push_back(doubling);
    }
    prev_total = total;
  }
  report.min_over_nk = report.max_over_nk = report.entries.front().over_nk;
  report.min_over_nk1 = report.max_over_nk1 = report.entries.front().over_nk1;
  for (const auto& e : report.entries) {
    report.min_over_nk = std::min(report.min_over_nk, e.over_nk);
    report.max_over_nk = std::max(report.max_over_nk, e.over_nk);
    report.min_over_nk1 = std::min(report.min_over_nk1, e.over_nk1);
    report.max_over_nk1 = std::max(report.max_over_nk1, e.over_nk1);
  }
  return report;
}

}  // namespace earl
