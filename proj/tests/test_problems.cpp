#include <stdexcept>

#include "doctest.h"
#include "earl/errors.hpp"
#include "earl/problems.hpp"

using namespace earl;

TEST_SUITE("problems") {

TEST_CASE("onemax and zeromax") {
  CHECK(onemax(BitString::from_string("0000")) == 0);
  CHECK(onemax(BitString::from_string("1011")) == 3);
  CHECK(onemax(BitString::from_string("1111")) == 4);
  CHECK(zeromax(BitString::from_string("0000")) == 4);
  CHECK(zeromax(BitString::from_string("1011")) == 1);

  Rng rng(3);
  for (int i = 0; i < 50; ++i) {
    const BitString y = random_bitstring(23, rng);
    CHECK(onemax(y) + zeromax(y) == 23);
  }
}

TEST_CASE("auxiliary pair switches at the switch point") {
  BitString y(10);
  for (std::size_t i = 0; i < 3; ++i) y.set(i, true);  // x = 3
  CHECK(aux_value(ObjectiveId::Aux1, y, 5) == 3);
  CHECK(aux_value(ObjectiveId::Aux2, y, 5) == 7);
  for (std::size_t i = 3; i < 7; ++i) y.set(i, true);  // x = 7
  CHECK(aux_value(ObjectiveId::Aux1, y, 5) == 3);
  CHECK(aux_value(ObjectiveId::Aux2, y, 5) == 7);
  y.set(6, false);
  y.set(5, false);  // x = 5, boundary takes the first branch
  CHECK(aux_value(ObjectiveId::Aux1, y, 5) == 5);
  CHECK(aux_value(ObjectiveId::Aux2, y, 5) == 5);
  CHECK_THROWS_AS(aux_value(ObjectiveId::Target, y, 5), std::invalid_argument);
}

TEST_CASE("aux values always sum to n") {
  Rng rng(11);
  for (int i = 0; i < 200; ++i) {
    const BitString y = random_bitstring(17, rng);
    const std::size_t p = rng.next_index(18);
    CHECK(aux_value(ObjectiveId::Aux1, y, p) + aux_value(ObjectiveId::Aux2, y, p) == 17);
  }
}

TEST_CASE("omd target counts mask matches") {
  const auto spec = ProblemSpec::omd(4, 2);
  CHECK(spec.mask->to_string() == "0011");
  CHECK(target_value(spec, BitString::from_string("0011")) == 4);
  CHECK(target_value(spec, BitString::from_string("1100")) == 0);
  CHECK(target_value(spec, BitString::from_string("0010")) == 3);
  CHECK(optimum_value(spec) == 4);
}

TEST_CASE("omd with d=0 equals onemax") {
  const auto spec = ProblemSpec::omd(12, 0);
  Rng rng(4);
  for (int i = 0; i < 100; ++i) {
    const BitString y = random_bitstring(12, rng);
    CHECK(target_value(spec, y) == onemax(y));
  }
}

TEST_CASE("xdivk target floors the ones count") {
  const auto k2 = ProblemSpec::xdivk(4, 2);
  CHECK(target_value(k2, BitString::from_string("1111")) == 2);
  CHECK(target_value(k2, BitString::from_string("1100")) == 1);
  CHECK(target_value(k2, BitString::from_string("1000")) == 0);
  const auto k3 = ProblemSpec::xdivk(6, 3);
  CHECK(target_value(k3, BitString::from_string("111110")) == 1);
  CHECK(optimum_value(ProblemSpec::xdivk(40, 2)) == 20);
}

TEST_CASE("xdivk depends only on the ones count") {
  const auto spec = ProblemSpec::xdivk(12, 3);
  Rng rng(8);
  for (int i = 0; i < 100; ++i) {
    const BitString y = random_bitstring(12, rng);
    BitString rotated(12);
    for (std::size_t pos = 0; pos < 12; ++pos) rotated.set((pos + 5) % 12, y.get(pos));
    CHECK(target_value(spec, y) == target_value(spec, rotated));
  }
}

TEST_CASE("leadingones target") {
  const auto spec = ProblemSpec::leading_ones(4);
  CHECK(target_value(spec, BitString::from_string("1101")) == 2);
  CHECK(target_value(spec, BitString::from_string("0111")) == 0);
  CHECK(target_value(spec, BitString::from_string("1111")) == 4);
  CHECK(optimum_value(ProblemSpec::leading_ones(11)) == 11);
}

TEST_CASE("evaluate dispatches over the objective set") {
  const auto spec = ProblemSpec::xdivk(4, 2, 3);
  CHECK(evaluate(ObjectiveId::Target, spec, BitString::from_string("1100")) == 1);

  const auto everywhere_onemax = ProblemSpec::leading_ones(6, 6);  // p = n
  Rng rng(2);
  for (int i = 0; i < 50; ++i) {
    const BitString y = random_bitstring(6, rng);
    CHECK(evaluate(ObjectiveId::Aux1, everywhere_onemax, y) == onemax(y));
  }
  const auto p_zero = ProblemSpec::leading_ones(4, 0);
  CHECK(evaluate(ObjectiveId::Aux2, p_zero, BitString::from_string("1011")) == 3);
}

TEST_CASE("length mismatch is rejected") {
  const auto spec = ProblemSpec::leading_ones(5);
  CHECK_THROWS_AS(target_value(spec, BitString(4)), std::invalid_argument);
  CHECK_THROWS_AS(evaluate(ObjectiveId::Aux1, spec, BitString(6)), std::invalid_argument);
}

TEST_CASE("factory validation") {
  CHECK_THROWS_AS(ProblemSpec::xdivk(4, 3), std::invalid_argument);   // k does not divide n
  CHECK_THROWS_AS(ProblemSpec::xdivk(4, 4), std::invalid_argument);   // k = n
  CHECK_THROWS_AS(ProblemSpec::xdivk(4, 0), std::invalid_argument);
  CHECK_THROWS_AS(ProblemSpec::omd(4, 5), std::invalid_argument);     // d > n
  CHECK_THROWS_AS(ProblemSpec::leading_ones(0), std::invalid_argument);
  CHECK_THROWS_AS(ProblemSpec::leading_ones(4, 5), std::invalid_argument);  // p > n
}

TEST_CASE("switch point defaults to n/2") {
  CHECK(ProblemSpec::leading_ones(11).p == 5);
  CHECK(ProblemSpec::xdivk(40, 2).p == 20);
  CHECK(ProblemSpec::omd(100, 50).p == 50);
  CHECK(ProblemSpec::xdivk(40, 2, 39).p == 39);
}

TEST_CASE("descriptor round trip") {
  for (const char* text : {"leadingones:n=11,p=5", "xdivk:n=40,k=2,p=39", "omd:n=100,d=50,p=50"}) {
    const ProblemSpec spec = parse_problem(text);
    CHECK(descriptor(spec) == text);
  }
  const ProblemSpec defaulted = parse_problem("leadingones:n=11");
  CHECK(descriptor(defaulted) == "leadingones:n=11,p=5");
}

TEST_CASE("descriptor errors") {
  CHECK_THROWS_AS(parse_problem("jump:n=10"), ConfigError);
  CHECK_THROWS_AS(parse_problem("leadingones"), ConfigError);          // missing n
  CHECK_THROWS_AS(parse_problem("leadingones:n=ten"), ConfigError);
  CHECK_THROWS_AS(parse_problem("xdivk:n=40"), ConfigError);           // missing k
  CHECK_THROWS_AS(parse_problem("xdivk:n=40,k=3"), ConfigError);       // k does not divide n
  CHECK_THROWS_AS(parse_problem("omd:n=10,d=2,q=1"), ConfigError);     // unknown key
  CHECK_THROWS_AS(parse_problem("omd:n=10,d=2,p="), ConfigError);
}

}  // TEST_SUITE
