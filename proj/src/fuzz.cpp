#include "regsys/fuzz.hpp"

#include <algorithm>
#include <array>
#include <limits>

#include "regsys/error.hpp"
#include "regsys/fixtures.hpp"

namespace regsys::fuzz {
namespace {

const std::array<RatTime, 5> kPeriods = {Rational(1, 2), Rational(1), Rational(3, 2), Rational(2),
                                         Rational(3)};

RatTime random_period(Rng& rng) { return kPeriods[rng.below(kPeriods.size())]; }

BoolVec random_vec(std::size_t width, Rng& rng) {
  return BoolVec(width, rng.below(std::uint64_t{1} << width));
}

// `count` distinct sorted offsets in [0, period) on a grid of period/6, the
// first one being 0 when `from_zero` is set.
std::vector<RatTime> random_offsets(const RatTime& period, std::size_t count, bool from_zero, Rng& rng) {
  std::vector<std::int64_t> slots(6);
  for (std::int64_t i = 0; i < 6; ++i) slots[i] = i;
  for (std::size_t i = slots.size(); i > 1; --i) std::swap(slots[i - 1], slots[rng.below(i)]);
  if (from_zero) {
    std::iter_swap(slots.begin(), std::find(slots.begin(), slots.end(), 0));
  }
  slots.resize(std::min<std::size_t>(count, 6));
  std::sort(slots.begin(), slots.end());
  std::vector<RatTime> out;
  for (auto s : slots) out.push_back(period * Rational(s, 6));
  return out;
}

// One or two distinct indices below `universe`.
std::vector<std::size_t> pick_subset(std::size_t universe, Rng& rng) {
  std::vector<std::size_t> out{static_cast<std::size_t>(rng.below(universe))};
  if (universe > 1 && rng.coin()) {
    std::size_t other = rng.below(universe - 1);
    if (other >= out[0]) ++other;
    out.push_back(other);
  }
  return out;
}

std::vector<BoolVec> random_states(std::size_t width, Rng& rng) {
  std::vector<BoolVec> out;
  for (auto code : pick_subset(std::size_t{1} << width, rng)) out.push_back(BoolVec(width, code));
  return out;
}

std::vector<ProgressiveFn> random_schedules(std::size_t width, Rng& rng) {
  std::vector<ProgressiveFn> out{random_progressive(width, rng)};
  if (rng.coin()) out.push_back(random_progressive(width, rng));
  return out;
}

}  // namespace

std::uint64_t Rng::below(std::uint64_t n) {
  if (n == 0) throw Error("Rng::below(0)");
  const std::uint64_t max = std::numeric_limits<std::uint64_t>::max();
  const std::uint64_t limit = max - max % n;
  std::uint64_t x;
  do {
    x = engine_();
  } while (x >= limit);
  return x % n;
}

GeneratorFn random_generator(std::size_t state_width, std::size_t input_width, Rng& rng) {
  std::vector<std::uint32_t> table(std::size_t{1} << (state_width + input_width));
  for (auto& v : table) v = static_cast<std::uint32_t>(rng.below(std::uint64_t{1} << state_width));
  return GeneratorFn(state_width, input_width, std::move(table));
}

RatTime random_time(Rng& rng, std::int64_t lo, std::int64_t hi) {
  const std::int64_t den = static_cast<std::int64_t>(rng.below(4)) + 1;
  const std::int64_t span = (hi - lo) * den;
  return Rational(lo * den + static_cast<std::int64_t>(rng.below(span + 1)), den);
}

Signal random_signal(std::size_t width, Rng& rng) {
  BoolVec initial = random_vec(width, rng);
  std::vector<TimedValue> switches;
  RatTime t = random_time(rng, -3, 1);
  const std::size_t count = rng.below(4);
  for (std::size_t i = 0; i < count; ++i) {
    switches.push_back({t, random_vec(width, rng)});
    t += random_time(rng, 0, 2) + Rational(1, 2);
  }
  if (rng.below(3) == 0) return Signal(width, initial, std::move(switches));

  RatTime start = switches.empty() ? random_time(rng, -2, 2) : switches.back().t + Rational(static_cast<std::int64_t>(rng.below(3)), 2);
  RatTime period = random_period(rng);
  std::vector<TimedValue> pattern;
  for (const auto& o : random_offsets(period, rng.below(3) + 1, true, rng)) {
    pattern.push_back({o, random_vec(width, rng)});
  }
  return Signal(width, initial, std::move(switches), PeriodicTail{start, period, std::move(pattern)});
}

ProgressiveFn random_progressive(std::size_t width, Rng& rng) {
  std::vector<TimedValue> prefix;
  RatTime t = random_time(rng, -3, 1);
  const std::size_t count = rng.below(4);
  for (std::size_t i = 0; i < count; ++i) {
    prefix.push_back({t, random_vec(width, rng)});
    t += random_time(rng, 0, 2) + Rational(1, 3);
  }
  RatTime start = prefix.empty() ? random_time(rng, -2, 2) : t;
  RatTime period = random_period(rng);
  std::vector<TimedValue> pattern;
  for (const auto& o : random_offsets(period, rng.below(4) + 1, false, rng)) {
    pattern.push_back({o, random_vec(width, rng)});
  }
  BoolVec fired = BoolVec::zeros(width);
  for (const auto& e : pattern) fired = fired | e.value;
  if (fired != BoolVec::ones(width)) {
    auto& e = pattern[rng.below(pattern.size())];
    e.value = e.value | ~fired;
  }
  return ProgressiveFn(width, std::move(prefix), ProgressiveTail{start, period, std::move(pattern)});
}

RegularSystem random_upstream(const GeneratorFn& phi, Rng& rng) {
  const std::size_t n = phi.state_width();
  const std::size_t m = phi.input_width();
  std::vector<Signal> inputs;
  const std::size_t wanted = rng.below(3) + 1;
  while (inputs.size() < wanted) {
    Signal u = random_signal(m, rng);
    bool fresh = std::none_of(inputs.begin(), inputs.end(),
                              [&](const Signal& v) { return signals_equal(u, v); });
    if (fresh) inputs.push_back(std::move(u));
  }
  std::vector<InitialEntry> initial;
  std::vector<ComputationEntry> computation;
  for (std::size_t k = 0; k < inputs.size(); ++k) {
    auto states = random_states(n, rng);
    for (const auto& mu : states) computation.push_back({mu, k, random_schedules(n, rng)});
    initial.push_back({k, std::move(states)});
  }
  return RegularSystem(phi, std::move(inputs), std::move(initial), std::move(computation));
}

RegularSystem random_downstream(const RegularSystem& f, const GeneratorFn& psi, Rng& rng) {
  const std::size_t p = psi.state_width();
  return fixtures::closure_downstream(
      f, psi, [&](std::size_t, const Signal&) { return random_states(p, rng); },
      [&](const BoolVec&, std::size_t, const Signal&) { return random_schedules(p, rng); });
}

namespace {

void record(SweepOutcome& outcome, VerificationReport report) {
  if (!report.overall) {
    if (!outcome.first_failure) {
      outcome.first_failure = outcome.checked;
      outcome.first_failure_report = std::move(report);
    }
    ++outcome.failed;
  }
  ++outcome.checked;
}

}  // namespace

SweepOutcome fuzz_serial(std::size_t n, std::size_t m, std::size_t p, std::size_t count,
                         std::uint64_t seed, SerialVariant variant) {
  if (count == 0) throw ValidationError("fuzz count must be at least 1");
  Rng rng(seed);
  SweepOutcome outcome;
  for (std::size_t i = 0; i < count; ++i) {
    GeneratorFn phi = random_generator(n, m, rng);
    GeneratorFn psi = random_generator(p, n, rng);
    RegularSystem f = random_upstream(phi, rng);
    RegularSystem h = random_downstream(f, psi, rng);
    record(outcome, verify_serial_theorem(f, h, variant));
  }
  return outcome;
}

SweepOutcome exhaustive_serial(std::size_t n, std::size_t m, std::size_t p, SerialVariant variant) {
  const std::uint64_t upstream = GeneratorFn::generator_count(n, m);
  const std::uint64_t downstream = GeneratorFn::generator_count(p, n);
  if (upstream > kMaxExhaustivePairs || downstream > kMaxExhaustivePairs / upstream) {
    throw ValidationError("exhaustive sweep at these widths exceeds " + std::to_string(kMaxExhaustivePairs) +
                          " generator pairs");
  }
  SweepOutcome outcome;
  for (std::uint64_t a = 0; a < upstream; ++a) {
    RegularSystem f = fixtures::standard_upstream(GeneratorFn::enumerate(n, m, a));
    for (std::uint64_t b = 0; b < downstream; ++b) {
      RegularSystem h = fixtures::standard_downstream(f, GeneratorFn::enumerate(p, n, b));
      record(outcome, verify_serial_theorem(f, h, variant));
    }
  }
  return outcome;
}

}  // namespace regsys::fuzz
