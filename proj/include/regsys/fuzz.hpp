#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>

#include "regsys/serial.hpp"
#include "regsys/system.hpp"

// Seeded random generation of generators, signals, schedules and systems.
// Every draw goes through Rng::below, so a seed reproduces the same run on
// any platform.
namespace regsys::fuzz {

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  // Uniform in [0, n), n > 0.
  std::uint64_t below(std::uint64_t n);
  bool coin() { return below(2) == 1; }

 private:
  std::mt19937_64 engine_;
};

GeneratorFn random_generator(std::size_t state_width, std::size_t input_width, Rng& rng);

// Random time in [lo, hi] on the grid of multiples of 1/den for den in {1,2,3,4}.
RatTime random_time(Rng& rng, std::int64_t lo, std::int64_t hi);

// Structurally valid, not necessarily canonical. Periods are drawn from
// {1/2, 1, 3/2, 2, 3} so that frame periods stay small.
Signal random_signal(std::size_t width, Rng& rng);

// Valid progressive function; prefix ticks may carry 0^n.
ProgressiveFn random_progressive(std::size_t width, Rng& rng);

// 1..3 distinct random inputs, i_f and π_f of size 1..2.
RegularSystem random_upstream(const GeneratorFn& phi, Rng& rng);

// Closure of f's states as inputs, i_h and π_h of size 1..2.
RegularSystem random_downstream(const RegularSystem& f, const GeneratorFn& psi, Rng& rng);

struct SweepOutcome {
  std::size_t checked = 0;
  std::size_t failed = 0;
  std::optional<std::size_t> first_failure;
  std::optional<VerificationReport> first_failure_report;

  bool passed() const { return failed == 0; }
};

// `count` random (f, h) pairs with widths n, m, p from one seeded stream.
SweepOutcome fuzz_serial(std::size_t n, std::size_t m, std::size_t p, std::size_t count,
                         std::uint64_t seed, SerialVariant variant = SerialVariant::kFaithful);

// Every generator pair at widths n, m, p over the standard fixture systems.
// Refuses sweeps of more than kMaxExhaustivePairs pairs.
inline constexpr std::uint64_t kMaxExhaustivePairs = 4096;
SweepOutcome exhaustive_serial(std::size_t n, std::size_t m, std::size_t p,
                               SerialVariant variant = SerialVariant::kFaithful);

}  // namespace regsys::fuzz
