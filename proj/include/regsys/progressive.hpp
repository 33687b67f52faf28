#pragma once

#include <cstddef>
#include <vector>

#include "regsys/bool_vec.hpp"
#include "regsys/signal.hpp"
#include "regsys/tick_sequence.hpp"

namespace regsys {

// Periodic tick schedule of a progressive function: at start + k*period +
// offset the function takes the pattern value.
struct ProgressiveTail {
  RatTime start;
  RatTime period;
  std::vector<TimedValue> pattern;  // strictly increasing offsets in [0, period)

  friend bool operator==(const ProgressiveTail&, const ProgressiveTail&) = default;
};

// A progressive function ρ: R -> B^n. It is 0 off its tick times, and every
// coordinate is 1 at infinitely many ticks, which for this representation
// means at some tail pattern entry. Zero-valued ticks are allowed and kept.
class ProgressiveFn {
 public:
  // Validates ordering (OrderingError) and coverage (NotProgressiveError).
  ProgressiveFn(std::size_t width, std::vector<TimedValue> prefix, ProgressiveTail tail);

  std::size_t width() const { return width_; }
  const std::vector<TimedValue>& prefix() const { return prefix_; }
  const ProgressiveTail& tail() const { return tail_; }

  BoolVec at(const RatTime& t) const;
  TickSequence tick_sequence() const;

  // Same function with zero-valued prefix ticks removed.
  ProgressiveFn without_zero_prefix_ticks() const;

  friend bool operator==(const ProgressiveFn&, const ProgressiveFn&) = default;

 private:
  std::size_t width_;
  std::vector<TimedValue> prefix_;
  ProgressiveTail tail_;
};

inline ProgressiveFn make_progressive(std::size_t width, std::vector<TimedValue> prefix,
                                      ProgressiveTail tail) {
  return ProgressiveFn(width, std::move(prefix), std::move(tail));
}

inline BoolVec eval_progressive(const ProgressiveFn& rho, const RatTime& t) { return rho.at(t); }

// Exact equality of the functions R -> B^n.
bool progressive_equal(const ProgressiveFn& a, const ProgressiveFn& b);

// (ρ, ρ̃)(t) = (ρ(t), ρ̃(t)) over the merged tick sequence.
ProgressiveFn product_progressive(const ProgressiveFn& rho, const ProgressiveFn& rho2);

// The first `count` points of `merged` paired with ρ at each of them. Throws
// CoverageError when `merged` misses one of ρ's ticks.
std::vector<TimedValue> reindex_on(const ProgressiveFn& rho, const TickSequence& merged,
                                   std::size_t count);

}  // namespace regsys
