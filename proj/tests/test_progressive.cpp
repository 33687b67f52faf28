#include <gtest/gtest.h>

#include "oracle.hpp"
#include "regsys/error.hpp"
#include "regsys/fixtures.hpp"
#include "regsys/fuzz.hpp"
#include "regsys/progressive.hpp"

using namespace regsys;

namespace {

BoolVec bv(const char* bits) { return BoolVec::parse(bits); }
Rational r(std::int64_t n, std::int64_t d = 1) { return Rational(n, d); }

ProgressiveFn round_robin() {
  return make_progressive(2, {}, ProgressiveTail{r(0), r(2), {{r(0), bv("10")}, {r(1), bv("01")}}});
}

TickSequence integers() { return TickSequence({}, PeriodicTicks{r(0), r(1), {r(0)}}); }

}  // namespace

TEST(MakeProgressive, Examples) {
  auto every_integer = make_progressive(1, {}, ProgressiveTail{r(0), r(1), {{r(0), bv("1")}}});
  EXPECT_EQ(every_integer.at(r(3)), bv("1"));

  try {
    make_progressive(2, {}, ProgressiveTail{r(0), r(1), {{r(0), bv("10")}}});
    FAIL() << "expected NotProgressiveError";
  } catch (const NotProgressiveError& e) {
    EXPECT_EQ(e.coordinate(), 2U);
  }

  auto rr = round_robin();
  for (std::int64_t t = 0; t < 6; ++t) {
    EXPECT_EQ(rr.at(r(t)), t % 2 == 0 ? bv("10") : bv("01"));
  }
}

TEST(MakeProgressive, PrefixTicksDoNotCountForCoverage) {
  EXPECT_THROW(make_progressive(2, {{r(0), bv("01")}}, ProgressiveTail{r(1), r(1), {{r(0), bv("10")}}}),
               NotProgressiveError);
}

TEST(MakeProgressive, OrderingErrors) {
  EXPECT_THROW(make_progressive(1, {{r(1), bv("1")}, {r(0), bv("1")}},
                                ProgressiveTail{r(2), r(1), {{r(0), bv("1")}}}),
               OrderingError);
  EXPECT_THROW(make_progressive(1, {}, ProgressiveTail{r(0), r(1), {{r(1, 2), bv("1")}, {r(0), bv("1")}}}),
               OrderingError);
  EXPECT_THROW(make_progressive(1, {{r(5), bv("1")}}, ProgressiveTail{r(2), r(1), {{r(0), bv("1")}}}),
               OrderingError);
  EXPECT_THROW(make_progressive(1, {}, ProgressiveTail{r(0), r(1), {{r(1), bv("1")}}}), OrderingError);
}

TEST(EvalProgressive, Examples) {
  EXPECT_EQ(eval_progressive(round_robin(), r(1)), bv("01"));
  EXPECT_EQ(eval_progressive(round_robin(), r(1, 3)), bv("00"));
  EXPECT_EQ(eval_progressive(round_robin(), r(-2)), bv("00"));
  auto p = make_progressive(2, {{r(5), bv("11")}}, ProgressiveTail{r(6), r(1), {{r(0), bv("11")}}});
  EXPECT_EQ(eval_progressive(p, r(5)), bv("11"));
  EXPECT_EQ(eval_progressive(p, r(11, 2)), bv("00"));
}

TEST(ProductProgressive, EvensAgainstOdds) {
  auto evens = fixtures::even_ticks(1);
  auto odds = fixtures::odd_ticks(1);
  auto p = product_progressive(evens, odds);
  EXPECT_EQ(p.width(), 2U);
  for (std::int64_t t = 0; t < 12; ++t) {
    EXPECT_EQ(p.at(r(t)), t % 2 == 0 ? bv("10") : bv("01"));
    EXPECT_EQ(p.at(r(2 * t + 1, 2)), bv("00"));
  }
  EXPECT_TRUE(same_points(p.tick_sequence(), integers()));
}

TEST(ProductProgressive, WithItself) {
  auto rr = round_robin();
  auto p = product_progressive(rr, rr);
  for (std::int64_t t = -1; t < 8; ++t) {
    EXPECT_EQ(p.at(r(t)), concat(rr.at(r(t)), rr.at(r(t))));
  }
}

TEST(ProductProgressive, PointwiseLawOnRandomPairs) {
  fuzz::Rng rng(21);
  for (int i = 0; i < 300; ++i) {
    auto a = fuzz::random_progressive(1 + rng.below(2), rng);
    auto b = fuzz::random_progressive(1 + rng.below(2), rng);
    auto p = product_progressive(a, b);
    // Re-running validation on the output must succeed.
    EXPECT_NO_THROW(make_progressive(p.width(), p.prefix(), p.tail()));
    std::set<RatTime> times = oracle::tick_times(a, r(30));
    times.merge(oracle::tick_times(b, r(30)));
    EXPECT_EQ(oracle::tick_times(p, r(30)), times);
    for (const auto& t : oracle::covering_grid(times)) {
      ASSERT_EQ(oracle::tick_at(p, t), concat(oracle::tick_at(a, t), oracle::tick_at(b, t)));
    }
  }
}

// Every coordinate fires in any window of one period length inside the tail.
TEST(ProgressiveProperties, CoverageInEveryTailWindow) {
  fuzz::Rng rng(22);
  for (int i = 0; i < 200; ++i) {
    auto rho = fuzz::random_progressive(1 + rng.below(3), rng);
    const auto& tail = rho.tail();
    for (int w = 0; w < 5; ++w) {
      RatTime lo = tail.start + tail.period * Rational(w, 3);
      BoolVec fired = BoolVec::zeros(rho.width());
      for (const auto& t : oracle::tick_times(rho, lo + tail.period)) {
        if (t >= lo) fired = fired | oracle::tick_at(rho, t);
      }
      ASSERT_EQ(fired, BoolVec::ones(rho.width()));
    }
  }
}

TEST(ReindexOn, Examples) {
  auto evens = fixtures::even_ticks(1);
  std::vector<TimedValue> want{{r(0), bv("1")}, {r(1), bv("0")}, {r(2), bv("1")}, {r(3), bv("0")}};
  EXPECT_EQ(reindex_on(evens, integers(), 4), want);

  auto rr = round_robin();
  auto own = reindex_on(rr, rr.tick_sequence(), 6);
  ASSERT_EQ(own.size(), 6U);
  for (const auto& e : own) EXPECT_EQ(e.value, rr.at(e.t));

  EXPECT_TRUE(reindex_on(evens, integers(), 0).empty());
}

TEST(ReindexOn, CoverageErrors) {
  auto thirds = fixtures::third_ticks(1);
  EXPECT_THROW(reindex_on(thirds, integers(), 4), CoverageError);
  EXPECT_THROW(reindex_on(fixtures::integer_ticks(1), TickSequence({r(0), r(1)}, std::nullopt), 2),
               CoverageError);
}

TEST(ProgressiveEqual, DifferentRepresentations) {
  auto a = fixtures::integer_ticks(1);
  auto b = make_progressive(1, {{r(0), bv("1")}, {r(1), bv("1")}},
                            ProgressiveTail{r(2), r(2), {{r(0), bv("1")}, {r(1), bv("1")}}});
  EXPECT_TRUE(progressive_equal(a, b));
  EXPECT_FALSE(progressive_equal(a, fixtures::even_ticks(1)));
  auto zero_tick = make_progressive(1, {{r(-1), bv("0")}}, ProgressiveTail{r(0), r(1), {{r(0), bv("1")}}});
  EXPECT_TRUE(progressive_equal(zero_tick, a));
  EXPECT_EQ(zero_tick.without_zero_prefix_ticks(), a);
}
