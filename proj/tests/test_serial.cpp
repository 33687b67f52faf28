#include <gtest/gtest.h>

#include "oracle.hpp"
#include "regsys/error.hpp"
#include "regsys/fixtures.hpp"
#include "regsys/fuzz.hpp"
#include "regsys/io.hpp"
#include "regsys/orbit.hpp"
#include "regsys/serial.hpp"

using namespace regsys;

namespace {

BoolVec bv(const char* bits) { return BoolVec::parse(bits); }
Rational r(std::int64_t n, std::int64_t d = 1) { return Rational(n, d); }

GeneratorFn buffer() {
  return GeneratorFn::from_function(1, 1, [](const BoolVec&, const BoolVec& l) { return l; });
}
GeneratorFn inverter() {
  return GeneratorFn::from_function(1, 1, [](const BoolVec&, const BoolVec& l) { return ~l; });
}
GeneratorFn toggle() {
  return GeneratorFn::from_function(1, 1, [](const BoolVec& m, const BoolVec&) { return ~m; });
}

Signal step5() { return Signal(1, bv("0"), {{r(5), bv("1")}}); }

// h over every orbit of f with a fixed δ set and a fixed schedule list.
RegularSystem downstream(const RegularSystem& f, const GeneratorFn& psi, std::vector<BoolVec> deltas,
                         std::vector<ProgressiveFn> rhos) {
  return fixtures::closure_downstream(
      f, psi, [&](std::size_t, const Signal&) { return deltas; },
      [&](const BoolVec&, std::size_t, const Signal&) { return rhos; });
}

std::string data(const std::string& rel) { return std::string(REGSYS_DATA_DIR) + "/" + rel; }

}  // namespace

TEST(SetOracle, Singletons) {
  RegularSystem f(buffer(), {step5()}, {{0, {bv("0")}}}, {{bv("0"), 0, {fixtures::integer_ticks(1)}}});
  auto h = downstream(f, inverter(), {bv("1")}, {fixtures::integer_ticks(1)});
  SignalSet s = serial_set_oracle(f, h, 0);
  ASSERT_EQ(s.size(), 1U);
  EXPECT_EQ(s.width(), 2U);
  Signal x = orbit(buffer(), fixtures::integer_ticks(1), bv("0"), step5());
  Signal y = orbit(inverter(), fixtures::integer_ticks(1), bv("1"), x);
  EXPECT_TRUE(signals_equal(s.members()[0], product_signal(x, y)));
}

TEST(SetOracle, TwoOrbitsUpstream) {
  RegularSystem f(toggle(), {Signal::constant(bv("0"))}, {{0, {bv("0")}}},
                  {{bv("0"), 0, {fixtures::integer_ticks(1), fixtures::even_ticks(1)}}});
  auto h = downstream(f, GeneratorFn::identity(1, 1), {bv("1")}, {fixtures::odd_ticks(1)});
  SignalSet s = serial_set_oracle(f, h, 0);
  EXPECT_EQ(s.size(), 2U);
  // State identity downstream: y is the constant δ.
  for (const auto& xy : s) {
    for (std::int64_t k = -2; k < 12; ++k) EXPECT_EQ(xy.at(r(k, 2)).tail(1), bv("1"));
  }
}

TEST(SetOracle, StateSpaceViolation) {
  RegularSystem f(buffer(), {step5()}, {{0, {bv("0")}}}, {{bv("0"), 0, {fixtures::integer_ticks(1)}}});
  RegularSystem h(inverter(), {Signal::constant(bv("1"))}, {{0, {bv("0")}}},
                  {{bv("0"), 0, {fixtures::integer_ticks(1)}}});
  EXPECT_THROW(serial_set_oracle(f, h, 0), CompositionError);
  EXPECT_THROW(build_serial_initial(f, h, 0), CompositionError);
  EXPECT_THROW(verify_serial_theorem(f, h), CompositionError);
}

TEST(BuildInitial, ExistentialUnion) {
  // Two ρ' with different orbits, each orbit admitting a different δ.
  RegularSystem f(toggle(), {Signal::constant(bv("0"))}, {{0, {bv("0")}}},
                  {{bv("0"), 0, {fixtures::integer_ticks(1), fixtures::even_ticks(1)}}});
  auto h = fixtures::closure_downstream(
      f, GeneratorFn::identity(1, 1),
      [](std::size_t j, const Signal&) { return std::vector<BoolVec>{BoolVec(1, j)}; },
      [](const BoolVec&, std::size_t, const Signal&) { return std::vector<ProgressiveFn>{fixtures::integer_ticks(1)}; });
  auto init = build_serial_initial(f, h, 0);
  std::sort(init.begin(), init.end());
  EXPECT_EQ(init, (std::vector<BoolVec>{bv("00"), bv("01")}));

  auto single = build_serial_initial(f, h, 0, SerialVariant::kSingleWitness);
  EXPECT_EQ(single.size(), 1U);

  // Each (μ,δ) keeps only the ρ whose orbit admits δ.
  for (const auto& md : init) {
    auto pairs = build_serial_computation(f, h, md, 0);
    ASSERT_EQ(pairs.size(), 1U);
    Signal x = orbit(toggle(), pairs[0].first, bv("0"), Signal::constant(bv("0")));
    EXPECT_EQ(h.initial_states(h.input_index(x)), std::vector<BoolVec>{md.tail(1)});
  }
  auto dropped = build_serial_computation(f, h, bv("00"), 0, SerialVariant::kDropDeltaFilter);
  EXPECT_EQ(dropped.size(), 2U);
}

TEST(BuildInitial, TwoInitialStatesSameDownstream) {
  RegularSystem f(GeneratorFn::identity(1, 1), {Signal::constant(bv("0"))}, {{0, {bv("0"), bv("1")}}},
                  {{bv("0"), 0, {fixtures::integer_ticks(1)}}, {bv("1"), 0, {fixtures::integer_ticks(1)}}});
  auto h = downstream(f, GeneratorFn::identity(1, 1), {bv("1")}, {fixtures::integer_ticks(1)});
  auto init = build_serial_initial(f, h, 0);
  std::sort(init.begin(), init.end());
  EXPECT_EQ(init, (std::vector<BoolVec>{bv("01"), bv("11")}));
}

TEST(BuildComputation, TwoDownstreamSchedules) {
  RegularSystem f(buffer(), {step5()}, {{0, {bv("0")}}}, {{bv("0"), 0, {fixtures::integer_ticks(1)}}});
  auto h = downstream(f, inverter(), {bv("0")}, {fixtures::integer_ticks(1), fixtures::third_ticks(1)});
  EXPECT_EQ(build_serial_computation(f, h, bv("00"), 0).size(), 2U);
  EXPECT_THROW(build_serial_computation(f, h, bv("01"), 0), ValidationError);
}

TEST(SerialRegular, BufferThenInverter) {
  RegularSystem f(buffer(), {step5()}, {{0, {bv("0")}}}, {{bv("0"), 0, {fixtures::integer_ticks(1)}}});
  auto h = downstream(f, inverter(), {bv("0")}, {fixtures::integer_ticks(1)});
  SignalSet s = serial_regular(f, h, 0);
  ASSERT_EQ(s.size(), 1U);
  const Signal& xy = s.members()[0];
  // Hand-stepped composed recurrence: x follows u at each tick, y is the
  // negation of x read at the same tick.
  EXPECT_EQ(xy.at(r(-1)), bv("00"));
  for (std::int64_t t = 0; t < 5; ++t) EXPECT_EQ(xy.at(r(t)), bv("01"));
  for (std::int64_t t = 5; t < 9; ++t) EXPECT_EQ(xy.at(r(t)), bv("10"));
  EXPECT_TRUE(s == serial_set_oracle(f, h, 0));
}

TEST(SerialRegular, IdentityTimesIdentity) {
  RegularSystem f(GeneratorFn::identity(1, 1), {Signal::constant(bv("0"))}, {{0, {bv("0"), bv("1")}}},
                  {{bv("0"), 0, {fixtures::integer_ticks(1)}}, {bv("1"), 0, {fixtures::even_ticks(1)}}});
  auto h = downstream(f, GeneratorFn::identity(1, 1), {bv("0"), bv("1")}, {fixtures::odd_ticks(1)});
  SignalSet s = serial_regular(f, h, 0);
  SignalSet want(2);
  for (const char* c : {"00", "01", "10", "11"}) want.insert(Signal::constant(bv(c)));
  EXPECT_TRUE(s == want);
}

TEST(ClassicalComposition, LosesTheIntermediateState) {
  RegularSystem f(buffer(), {step5()}, {{0, {bv("0")}}}, {{bv("0"), 0, {fixtures::integer_ticks(1)}}});
  auto h = downstream(f, inverter(), {bv("0")}, {fixtures::integer_ticks(1)});
  SignalSet c = classical_composition(f, h, 0);
  EXPECT_EQ(c.width(), 1U);
  EXPECT_EQ(serial_set_oracle(f, h, 0).width(), 2U);
}

TEST(ComposedOrbit, IdentityAndBufferInverter) {
  for (const auto& u : fixtures::standard_inputs(1)) {
    for (const auto& s : fixtures::standard_schedules(1, 1)) {
      EXPECT_TRUE(check_lemma6(GeneratorFn::identity(1, 1), GeneratorFn::identity(1, 1), bv("1"), bv("0"), s.rho,
                               s.rho2, u));
      EXPECT_TRUE(check_lemma6(buffer(), inverter(), bv("0"), bv("1"), s.rho, s.rho2, u));
    }
  }
  EXPECT_THROW(check_lemma6(buffer(), inverter(), bv("00"), bv("1"), fixtures::integer_ticks(1),
                            fixtures::integer_ticks(1), step5()),
               DimensionError);
}

// The composed orbit checked against the naive step-by-step simulation of
// the two stages, independently of orbit() and product_signal().
TEST(ComposedOrbit, ComposedOrbitMatchesStagedSimulation) {
  fuzz::Rng rng(51);
  for (int i = 0; i < 120; ++i) {
    const std::size_t n = 1 + rng.below(2), m = 1 + rng.below(2), p = 1 + rng.below(2);
    auto phi = fuzz::random_generator(n, m, rng);
    auto psi = fuzz::random_generator(p, n, rng);
    auto rho = fuzz::random_progressive(n, rng);
    auto rho2 = fuzz::random_progressive(p, rng);
    Signal u = fuzz::random_signal(m, rng);
    BoolVec mu(n, rng.below(std::uint64_t{1} << n));
    BoolVec delta(p, rng.below(std::uint64_t{1} << p));
    ASSERT_TRUE(check_lemma6(phi, psi, mu, delta, rho, rho2, u));

    Signal composed = orbit(compose_serial(phi, psi), product_progressive(rho, rho2), concat(mu, delta), u);
    const RatTime horizon = r(40);
    std::set<RatTime> times = oracle::signal_times(u, horizon);
    times.merge(oracle::tick_times(rho, horizon));
    times.merge(oracle::tick_times(rho2, horizon));
    BoolVec a = mu, b = delta;
    std::vector<std::pair<RatTime, BoolVec>> steps;
    for (const auto& t : times) {
      a = oracle::masked(phi, oracle::tick_at(rho, t), a, oracle::signal_at(u, t));
      b = oracle::masked(psi, oracle::tick_at(rho2, t), b, a);
      steps.emplace_back(t, concat(a, b));
    }
    for (const auto& t : oracle::covering_grid(times)) {
      if (t > horizon) break;
      ASSERT_EQ(composed.at(t), oracle::value_at(steps, concat(mu, delta), t));
    }
  }
}

TEST(Verify, StandardFixturesPass) {
  for (std::uint64_t a : {0U, 5U, 9U, 15U}) {
    auto f = fixtures::standard_upstream(GeneratorFn::enumerate(1, 1, a));
    for (std::uint64_t b : {0U, 6U, 10U, 13U}) {
      auto h = fixtures::standard_downstream(f, GeneratorFn::enumerate(1, 1, b));
      auto report = verify_serial_theorem(f, h);
      EXPECT_TRUE(report.overall) << summarize(report);
      EXPECT_EQ(report.cases.size(), f.inputs().size());
      for (const auto& c : report.cases) {
        EXPECT_TRUE(c.passed());
        EXPECT_FALSE(c.counterexample);
      }
    }
  }
}

TEST(Verify, SingletonSystems) {
  RegularSystem f(buffer(), {step5()}, {{0, {bv("0")}}}, {{bv("0"), 0, {fixtures::integer_ticks(1)}}});
  auto h = downstream(f, inverter(), {bv("0")}, {fixtures::integer_ticks(1)});
  auto report = verify_serial_theorem(f, h);
  ASSERT_EQ(report.cases.size(), 1U);
  EXPECT_TRUE(report.overall);
}

TEST(Verify, MutationsAreDetectedOnBundledPair) {
  auto f = io::load_system(data("systems/mutation_f.json"));
  auto h = io::load_system(data("systems/mutation_h.json"));
  EXPECT_TRUE(verify_serial_theorem(f, h).overall);
  for (auto variant : {SerialVariant::kDropDeltaFilter, SerialVariant::kSingleWitness}) {
    auto report = verify_serial_theorem(f, h, variant);
    EXPECT_FALSE(report.overall) << to_string(variant);
    bool found = false;
    for (const auto& c : report.cases) {
      if (!c.passed()) {
        ASSERT_TRUE(c.counterexample);
        EXPECT_EQ(c.counterexample->check, "lemma8");
        EXPECT_TRUE(c.counterexample->witness);
        found = true;
      }
    }
    EXPECT_TRUE(found);
  }
}

TEST(Verify, RandomPairsPass) {
  auto outcome = fuzz::fuzz_serial(1, 1, 1, 60, 52);
  EXPECT_EQ(outcome.checked, 60U);
  EXPECT_TRUE(outcome.passed());
  auto wide = fuzz::fuzz_serial(2, 1, 2, 20, 53);
  EXPECT_TRUE(wide.passed());
}

TEST(Fuzz, SeededRunsAreReproducible) {
  fuzz::Rng a(99), b(99);
  for (int i = 0; i < 20; ++i) {
    EXPECT_EQ(to_string(fuzz::random_signal(2, a)), to_string(fuzz::random_signal(2, b)));
  }
  EXPECT_THROW(fuzz::fuzz_serial(1, 1, 1, 0, 1), ValidationError);
  EXPECT_THROW(fuzz::exhaustive_serial(2, 2, 2), ValidationError);
}

TEST(SerialVariant, Names) {
  for (auto v : {SerialVariant::kFaithful, SerialVariant::kDropDeltaFilter, SerialVariant::kSingleWitness}) {
    EXPECT_EQ(serial_variant_from_string(to_string(v)), v);
  }
  EXPECT_THROW(serial_variant_from_string("bogus"), Error);
}
