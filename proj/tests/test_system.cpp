#include <gtest/gtest.h>

#include "regsys/error.hpp"
#include "regsys/fixtures.hpp"
#include "regsys/fuzz.hpp"
#include "regsys/orbit.hpp"
#include "regsys/system.hpp"

using namespace regsys;

namespace {

BoolVec bv(const char* bits) { return BoolVec::parse(bits); }
Rational r(std::int64_t n, std::int64_t d = 1) { return Rational(n, d); }

GeneratorFn toggle() {
  return GeneratorFn::from_function(1, 1, [](const BoolVec& m, const BoolVec&) { return ~m; });
}

Signal zero() { return Signal::constant(bv("0")); }

RegularSystem single(const GeneratorFn& g, const BoolVec& mu, const ProgressiveFn& rho, const Signal& u) {
  return RegularSystem(g, {u}, {{0, {mu}}}, {{mu, 0, {rho}}});
}

}  // namespace

TEST(SignalSet, DeduplicatesSemantically) {
  SignalSet s(1);
  Signal a(1, bv("0"), {{r(1), bv("1")}});
  Signal a_noisy(1, bv("0"), {{r(0), bv("0")}, {r(1), bv("1")}});
  EXPECT_TRUE(s.insert(a));
  EXPECT_FALSE(s.insert(a_noisy));
  EXPECT_TRUE(s.insert(zero()));
  EXPECT_EQ(s.size(), 2U);
  EXPECT_TRUE(s.contains(a_noisy));
  EXPECT_EQ(s.index_of(zero()), 1U);

  SignalSet t(1);
  t.insert(zero());
  t.insert(a_noisy);
  EXPECT_TRUE(s == t);
  t.insert(Signal::constant(bv("1")));
  EXPECT_FALSE(s == t);
  ASSERT_TRUE(t.first_missing_from(s));
  EXPECT_TRUE(signals_equal(*t.first_missing_from(s), Signal::constant(bv("1"))));
  EXPECT_FALSE(s.first_missing_from(t));
}

TEST(RegularSystem, Validation) {
  auto rho = fixtures::integer_ticks(1);
  // i_f missing for an input.
  EXPECT_THROW(RegularSystem(toggle(), {zero(), Signal::constant(bv("1"))}, {{0, {bv("0")}}},
                             {{bv("0"), 0, {rho}}}),
               ValidationError);
  // Empty initial set.
  EXPECT_THROW(RegularSystem(toggle(), {zero()}, {{0, {}}}, {}), ValidationError);
  // π_f missing on Δ_f.
  EXPECT_THROW(RegularSystem(toggle(), {zero()}, {{0, {bv("0"), bv("1")}}}, {{bv("0"), 0, {rho}}}),
               ValidationError);
  // π_f keyed outside Δ_f.
  EXPECT_THROW(RegularSystem(toggle(), {zero()}, {{0, {bv("0")}}},
                             {{bv("0"), 0, {rho}}, {bv("1"), 0, {rho}}}),
               ValidationError);
  // Empty computation set.
  EXPECT_THROW(RegularSystem(toggle(), {zero()}, {{0, {bv("0")}}}, {{bv("0"), 0, {}}}), ValidationError);
  // Width mismatches.
  EXPECT_THROW(single(toggle(), bv("00"), rho, zero()), DimensionError);
  EXPECT_THROW(single(toggle(), bv("0"), fixtures::integer_ticks(2), zero()), DimensionError);
  EXPECT_THROW(single(toggle(), bv("0"), rho, Signal::constant(bv("00"))), DimensionError);
  // Two semantically equal inputs.
  Signal zero_noisy(1, bv("0"), {{r(3), bv("0")}});
  EXPECT_THROW(RegularSystem(toggle(), {zero(), zero_noisy}, {{0, {bv("0")}}, {1, {bv("0")}}},
                             {{bv("0"), 0, {rho}}, {bv("0"), 1, {rho}}}),
               ValidationError);
}

TEST(RegularSystem, LookupBySemanticEquality) {
  auto f = single(toggle(), bv("0"), fixtures::integer_ticks(1), zero());
  Signal zero_noisy(1, bv("0"), {{r(3), bv("0")}});
  EXPECT_EQ(f.input_index(zero_noisy), 0U);
  EXPECT_THROW(f.input_index(Signal::constant(bv("1"))), UnknownInputError);
  EXPECT_THROW(evaluate_system(f, Signal::constant(bv("1"))), UnknownInputError);
  EXPECT_THROW(f.computations(bv("1"), 0), ValidationError);
}

TEST(EvaluateSystem, Singleton) {
  auto rho = fixtures::integer_ticks(1);
  auto f = single(toggle(), bv("0"), rho, zero());
  SignalSet s = evaluate_system(f, zero());
  ASSERT_EQ(s.size(), 1U);
  EXPECT_TRUE(signals_equal(s.members()[0], orbit(toggle(), rho, bv("0"), zero())));
}

TEST(EvaluateSystem, IdentityGivesConstants) {
  auto id = GeneratorFn::identity(1, 1);
  RegularSystem f(id, {zero()}, {{0, {bv("0"), bv("1")}}},
                  {{bv("0"), 0, {fixtures::integer_ticks(1)}},
                   {bv("1"), 0, {fixtures::even_ticks(1), fixtures::third_ticks(1)}}});
  SignalSet s = evaluate_system(f, 0);
  SignalSet want(1);
  want.insert(zero());
  want.insert(Signal::constant(bv("1")));
  EXPECT_TRUE(s == want);
}

TEST(EvaluateSystem, EqualOrbitsCollapse) {
  auto a = fixtures::integer_ticks(1);
  auto b = make_progressive(1, {{r(0), bv("1")}}, ProgressiveTail{r(1), r(2), {{r(0), bv("1")}, {r(1), bv("1")}}});
  RegularSystem f(toggle(), {zero()}, {{0, {bv("0")}}}, {{bv("0"), 0, {a, b}}});
  EXPECT_EQ(evaluate_system(f, 0).size(), 1U);
}

TEST(EvaluateSystem, NonemptyAndDeterministicOnRandomSystems) {
  fuzz::Rng rng(41);
  for (int i = 0; i < 50; ++i) {
    auto f = fuzz::random_upstream(fuzz::random_generator(2, 1, rng), rng);
    for (std::size_t k = 0; k < f.inputs().size(); ++k) {
      SignalSet a = evaluate_system(f, k);
      EXPECT_FALSE(a.empty());
      EXPECT_TRUE(a == evaluate_system(f, f.inputs()[k]));
      EXPECT_TRUE(a == evaluate_system(f, k));
    }
  }
}

// Listing each ρ twice does not change f(u).
TEST(EvaluateSystem, DuplicateEntriesDoNotChangeTheSet) {
  fuzz::Rng rng(42);
  for (int i = 0; i < 30; ++i) {
    auto f = fuzz::random_upstream(fuzz::random_generator(2, 1, rng), rng);
    auto computation = f.computation_entries();
    for (auto& e : computation) {
      auto copy = e.rhos;
      e.rhos.insert(e.rhos.end(), copy.begin(), copy.end());
    }
    RegularSystem doubled(f.generator(), f.inputs(), f.initial_entries(), computation);
    for (std::size_t k = 0; k < f.inputs().size(); ++k) {
      EXPECT_TRUE(evaluate_system(f, k) == evaluate_system(doubled, k));
    }
  }
}

TEST(CheckStateSpace, Examples) {
  auto f = fixtures::standard_upstream(toggle());
  auto h = fixtures::standard_downstream(f, GeneratorFn::identity(1, 1));
  EXPECT_TRUE(static_cast<bool>(check_state_space(f, h)));

  // Drop the last input of h: that orbit becomes the witness.
  auto inputs = h.inputs();
  Signal dropped = inputs.back();
  inputs.pop_back();
  std::vector<InitialEntry> initial;
  std::vector<ComputationEntry> computation;
  for (const auto& e : h.initial_entries()) {
    if (e.input_index < inputs.size()) initial.push_back(e);
  }
  for (const auto& e : h.computation_entries()) {
    if (e.input_index < inputs.size()) computation.push_back(e);
  }
  RegularSystem partial(h.generator(), inputs, initial, computation);
  auto report = check_state_space(f, partial);
  EXPECT_FALSE(static_cast<bool>(report));
  ASSERT_TRUE(report.witness);
  EXPECT_TRUE(signals_equal(report.witness->second, dropped));

  // No overlap at all.
  Signal far(1, bv("1"), {{r(1000), bv("0")}});
  RegularSystem disjoint(h.generator(), {far}, {{0, {bv("0")}}}, {{bv("0"), 0, {fixtures::integer_ticks(1)}}});
  auto none = check_state_space(f, disjoint);
  EXPECT_FALSE(none.ok);
  ASSERT_TRUE(none.witness);
  EXPECT_EQ(none.witness->first, 0U);

  EXPECT_THROW(check_state_space(f, single(GeneratorFn::identity(1, 2), bv("0"), fixtures::integer_ticks(1),
                                           Signal::constant(bv("00")))),
               DimensionError);
}
