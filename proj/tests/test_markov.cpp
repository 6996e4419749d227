#include <cmath>
#include <cstdint>
#include <vector>

#include "doctest.h"
#include "earl/errors.hpp"
#include "earl/markov.hpp"
#include "earl/rng.hpp"

using namespace earl;

namespace {

Rational rat(long num, long den = 1) { return Rational(num, den); }

Rational row_sum(const BirthDeathChain& c, long x) {
  return c.forward[x] + c.backward[x] + c.stay[x];
}

// Monte-Carlo absorption time of a birth-death chain, for cross-checking
// the exact solvers against something that knows nothing about them.
double simulate_mean(const BirthDeathChain& chain, long start, int runs, std::uint64_t seed,
                     double* std_err = nullptr) {
  Rng rng(seed);
  std::vector<double> fwd(chain.n + 1), back(chain.n + 1);
  for (long x = 0; x <= chain.n; ++x) {
    fwd[x] = static_cast<double>(chain.forward[x]);
    back[x] = static_cast<double>(chain.backward[x]);
  }
  double total = 0, total_sq = 0;
  for (int r = 0; r < runs; ++r) {
    long x = start;
    long steps = 0;
    while (x != chain.n) {
      const double u = rng.next_unit();
      if (u < fwd[x])
        ++x;
      else if (u < fwd[x] + back[x])
        --x;
      ++steps;
    }
    total += steps;
    total_sq += static_cast<double>(steps) * steps;
  }
  const double mean = total / runs;
  if (std_err) {
    const double var = (total_sq - runs * mean * mean) / (runs - 1);
    *std_err = std::sqrt(var / runs);
  }
  return mean;
}

}  // namespace

TEST_SUITE("markov") {

TEST_CASE("chain coefficients on n=4 k=2") {
  const auto mod = chain_modified_no_learning(4, 2);
  CHECK(mod.forward[0] == rat(2, 3));
  CHECK(mod.backward[0] == 0);
  CHECK(mod.stay[0] == rat(1, 3));
  CHECK(mod.forward[1] == rat(1, 2));
  CHECK(mod.backward[1] == rat(1, 6));
  CHECK(mod.stay[1] == rat(1, 3));
  CHECK(mod.backward[2] == 0);  // plateau boundary
  CHECK(mod.forward[2] == rat(1, 3));
  CHECK(mod.forward[4] == 0);
  CHECK(mod.stay[4] == 1);

  const auto rls = chain_rls(4, 2);
  CHECK(rls.forward[2] == rat(1, 2));
  CHECK(rls.backward[2] == 0);
  CHECK(rls.stay[2] == rat(1, 2));
  CHECK(rls.forward[3] == rat(1, 4));
  CHECK(rls.backward[3] == rat(3, 4));
  CHECK(rls.stay[3] == 0);

  for (long x = 0; x <= 4; ++x) {
    CHECK(row_sum(mod, x) == 1);
    CHECK(row_sum(rls, x) == 1);
    CHECK(mod.backward[x] >= 0);
    CHECK(rls.backward[x] >= 0);
  }
}

TEST_CASE("chain construction rejects invalid plateau sizes") {
  CHECK_THROWS_AS(chain_rls(5, 2), std::invalid_argument);     // k does not divide n
  CHECK_THROWS_AS(chain_rls(4, 4), std::invalid_argument);     // k = n
  CHECK_THROWS_AS(chain_rls(4, 0), std::invalid_argument);
  CHECK_THROWS_AS(chain_modified_no_learning(9, 2), std::invalid_argument);
  CHECK_NOTHROW(chain_modified_no_learning(9, 3));
}

TEST_CASE("recurrence values on n=4 k=2 match the hand calculation") {
  const auto mod = per_state_times_recurrence(ChainKind::ModifiedNoLearning, 4, 2);
  REQUIRE(mod.per_state.size() == 4);
  CHECK(mod.per_state[0] == rat(3, 2));
  CHECK(mod.per_state[1] == rat(5, 2));
  CHECK(mod.per_state[2] == rat(3));
  CHECK(mod.per_state[3] == rat(15));
  CHECK(mod.total_from_state(0) == rat(22));

  const auto rls = per_state_times_recurrence(ChainKind::Rls, 4, 2);
  CHECK(rls.per_state[0] == rat(1));
  CHECK(rls.per_state[1] == rat(5, 3));
  CHECK(rls.per_state[2] == rat(2));
  CHECK(rls.per_state[3] == rat(10));
  CHECK(rls.total_from_state(0) == rat(44, 3));
  CHECK(rls.total_from_state(2) == rat(12));
  CHECK(rls.total_from_state(4) == 0);
}

TEST_CASE("per-state ratio between the two chains is exactly 3/2") {
  for (const auto& [n, k] : {std::pair<long, long>{4, 2}, {12, 2}, {12, 3}, {40, 2}, {60, 3}}) {
    const auto mod = per_state_times_recurrence(ChainKind::ModifiedNoLearning, n, k);
    const auto rls = per_state_times_recurrence(ChainKind::Rls, n, k);
    for (long x = 0; x < n; ++x)
      CHECK(mod.per_state[x] == rat(3, 2) * rls.per_state[x]);
    CHECK(mod.total_from_state(0) == rat(3, 2) * rls.total_from_state(0));
    const auto start = binomial_start(n);
    CHECK(mod.total_from_distribution(start) == rat(3, 2) * rls.total_from_distribution(start));
  }
}

TEST_CASE("recurrence agrees with the tridiagonal solver for every state") {
  for (const auto& [n, k] : {std::pair<long, long>{4, 2}, {10, 2}, {12, 3}, {40, 2}, {60, 3}}) {
    const auto chain_m = chain_modified_no_learning(n, k);
    const auto chain_r = chain_rls(n, k);
    const auto times_m = hitting_times_all(chain_m);
    const auto times_r = hitting_times_all(chain_r);
    const auto rec_m = per_state_times_recurrence(ChainKind::ModifiedNoLearning, n, k);
    const auto rec_r = per_state_times_recurrence(ChainKind::Rls, n, k);
    for (long x = 0; x <= n; ++x) {
      CHECK(times_m[x] == rec_m.total_from_state(x));
      CHECK(times_r[x] == rec_r.total_from_state(x));
    }
    CHECK(times_m[n] == 0);
    CHECK(hitting_time_solve(chain_r, 0) == rec_r.total_from_state(0));
    const auto start = binomial_start(n);
    CHECK(hitting_time_solve(chain_m, start) == rec_m.total_from_distribution(start));
  }
}

TEST_CASE("binomial start distribution") {
  const auto w4 = binomial_start(4);
  REQUIRE(w4.size() == 5);
  CHECK(w4[0] == rat(1, 16));
  CHECK(w4[1] == rat(4, 16));
  CHECK(w4[2] == rat(6, 16));
  CHECK(w4[4] == rat(1, 16));
  for (long n : {1, 7, 40}) {
    const auto w = binomial_start(n);
    Rational sum = 0;
    for (const auto& v : w) sum += v;
    CHECK(sum == 1);
  }
}

TEST_CASE("binomial-start totals on n=40 k=2 keep the exact 3/2 ratio") {
  const auto start = binomial_start(40);
  const auto t_rls = per_state_times_recurrence(ChainKind::Rls, 40, 2)
                         .total_from_distribution(start);
  const auto t_mod = per_state_times_recurrence(ChainKind::ModifiedNoLearning, 40, 2)
                         .total_from_distribution(start);
  CHECK(t_mod == rat(3, 2) * t_rls);
  const double rls_d = static_cast<double>(t_rls);
  const double mod_d = static_cast<double>(t_mod);
  CHECK(rls_d == doctest::Approx(1154.6).epsilon(0.001));
  CHECK(mod_d == doctest::Approx(1731.9).epsilon(0.001));
}

TEST_CASE("solver rejects malformed chains and distributions") {
  auto chain = chain_rls(4, 2);
  chain.stay[1] += rat(1, 100);  // row no longer sums to 1
  CHECK_THROWS_AS(hitting_times_all(chain), InvariantError);

  auto chain2 = chain_rls(4, 2);
  chain2.forward[2] = 0;  // absorbing interior state, unreachable optimum
  chain2.stay[2] = rat(1);
  CHECK_THROWS_AS(hitting_times_all(chain2), InvariantError);

  const auto good = chain_rls(4, 2);
  std::vector<Rational> bad_weights(5, rat(1, 4));  // sums to 5/4
  CHECK_THROWS_AS(hitting_time_solve(good, bad_weights), std::invalid_argument);
  CHECK_THROWS_AS(hitting_time_solve(good, 9), std::invalid_argument);  // no such state
}

TEST_CASE("exact totals sit within three standard errors of simulation") {
  const auto chain_m = chain_modified_no_learning(12, 2);
  const auto chain_r = chain_rls(12, 3);
  double se = 0;
  const double sim_m = simulate_mean(chain_m, 0, 20000, 42, &se);
  const double exact_m = static_cast<double>(hitting_time_solve(chain_m, 0));
  CHECK(std::abs(sim_m - exact_m) < 3 * se);
  const double sim_r = simulate_mean(chain_r, 3, 20000, 43, &se);
  const double exact_r = static_cast<double>(hitting_time_solve(chain_r, 3));
  CHECK(std::abs(sim_r - exact_r) < 3 * se);
}

TEST_CASE("asymptotic report tracks doublings of n") {
  const auto report = asymptotic_bounds_check({8, 16, 32, 64}, 2);
  CHECK(report.k == 2);
  REQUIRE(report.entries.size() == 4);
  REQUIRE(report.doublings.size() == 3);
  for (const auto& d : report.doublings) {
    CHECK(d.n_to == 2 * d.n_from);
    CHECK(d.ratio > 1.0);
  }
  // doubling ratios stay under 2^k here, so both normalized columns shrink
  CHECK(report.min_over_nk > 0);
  for (std::size_t i = 1; i < report.entries.size(); ++i) {
    CHECK(report.entries[i].over_nk < report.entries[i - 1].over_nk);
    CHECK(report.entries[i].over_nk1 < report.entries[i - 1].over_nk1);
  }
  CHECK(report.max_over_nk == report.entries.front().over_nk);
  CHECK(report.min_over_nk1 == report.entries.back().over_nk1);
  CHECK(report.last_doublings_within_band(0));

  const auto r3 = asymptotic_bounds_check({9, 18, 36}, 3);
  CHECK(r3.doublings.size() == 2);

  CHECK_THROWS_AS(asymptotic_bounds_check({16, 8}, 2), std::invalid_argument);
  CHECK_THROWS_AS(asymptotic_bounds_check({8, 9}, 2), std::invalid_argument);  // 2 does not divide 9
}

TEST_CASE("doubling ratios for k=2 approach 4 from below") {
  const auto report = asymptotic_bounds_check({8, 16, 32, 64, 128}, 2);
  REQUIRE(report.doublings.size() == 4);
  for (const auto& d : report.doublings) {
    CHECK(d.ratio < 4.0);
    CHECK_FALSE(d.within_band);
  }
  CHECK(report.doublings[3].ratio > report.doublings[2].ratio);
  CHECK(report.doublings[3].ratio == doctest::Approx(3.9194).epsilon(0.001));
  CHECK_FALSE(report.last_doublings_within_band(3));
}

}  // TEST_SUITE
