#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "regsys/bool_vec.hpp"
#include "regsys/rational.hpp"
#include "regsys/tick_sequence.hpp"

namespace regsys {

struct TimedValue {
  RatTime t;
  BoolVec value;

  friend bool operator==(const TimedValue&, const TimedValue&) = default;
};

struct ConstantTail {
  friend bool operator==(const ConstantTail&, const ConstantTail&) = default;
};

// From `start` on the signal repeats `pattern` with the given period. Offsets
// are strictly increasing in [0, period) and the first one is 0.
struct PeriodicTail {
  RatTime start;
  RatTime period;
  std::vector<TimedValue> pattern;

  friend bool operator==(const PeriodicTail&, const PeriodicTail&) = default;
};

using SignalTail = std::variant<ConstantTail, PeriodicTail>;

// Eventually constant or eventually periodic piecewise-constant function
// R -> B^n, right-continuous: a switch at t holds on [t, next switch).
class Signal {
 public:
  Signal(std::size_t width, BoolVec initial, std::vector<TimedValue> switches = {},
         SignalTail tail = ConstantTail{});

  static Signal constant(const BoolVec& value) { return Signal(value.width(), value); }

  // Assembles a canonical signal from step values: `initial` on (-inf, first
  // step), each step holding until the next. With a periodic frame, the steps
  // must describe the signal up to frame start + period and everything from
  // frame start on repeats with that period.
  struct Frame {
    RatTime start;
    RatTime period;
  };
  static Signal from_steps(std::size_t width, const BoolVec& initial,
                           const std::vector<TimedValue>& steps, std::optional<Frame> frame);

  std::size_t width() const { return width_; }
  const BoolVec& initial() const { return initial_; }
  const std::vector<TimedValue>& switches() const { return switches_; }
  const SignalTail& tail() const { return tail_; }
  const PeriodicTail* periodic() const { return std::get_if<PeriodicTail>(&tail_); }

  BoolVec at(const RatTime& t) const;

  // All times at which the value may change.
  TickSequence event_sequence() const;

  friend bool operator==(const Signal&, const Signal&) = default;

 private:
  std::size_t width_;
  BoolVec initial_;
  std::vector<TimedValue> switches_;
  SignalTail tail_;
};

inline BoolVec eval_signal(const Signal& x, const RatTime& t) { return x.at(t); }

// Drops no-op and shadowed switches, merges equal neighbours in the periodic
// pattern, reduces the period to its minimum and demotes single-valued
// patterns to a constant tail. Idempotent.
Signal canonicalize(const Signal& x);

// Exact semantic equality of two signals of the same width.
bool signals_equal(const Signal& x, const Signal& y);

// (x, y)(t) = (x(t), y(t)).
Signal product_signal(const Signal& x, const Signal& y);

// Compact single-line rendering, e.g. "00; 01@3/2; every 2 from 2: 1@0 0@1/2".
std::string to_string(const Signal& x);

}  // namespace regsys
