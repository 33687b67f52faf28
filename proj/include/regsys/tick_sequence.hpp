#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "regsys/rational.hpp"

namespace regsys {

// Periodic part of a tick sequence: points start + k*period + offset, k >= 0.
struct PeriodicTicks {
  RatTime start;
  RatTime period;
  std::vector<RatTime> offsets;  // strictly increasing, in [0, period), nonempty

  friend bool operator==(const PeriodicTicks&, const PeriodicTicks&) = default;
};

// A strictly increasing set of time points: a finite prefix followed by an
// optional periodic tail. Without a tail the set is finite (the value of a
// signal with constant tail has finitely many events).
class TickSequence {
 public:
  TickSequence() = default;
  TickSequence(std::vector<RatTime> prefix, std::optional<PeriodicTicks> tail);

  const std::vector<RatTime>& prefix() const { return prefix_; }
  const std::optional<PeriodicTicks>& tail() const { return tail_; }
  bool is_unbounded() const { return tail_.has_value(); }
  bool empty() const { return prefix_.empty() && !tail_; }

  bool contains(const RatTime& t) const;

  // Every point <= horizon, in increasing order.
  std::vector<RatTime> points_until(const RatTime& horizon) const;
  // The first `count` points (fewer if the sequence is finite).
  std::vector<RatTime> first_points(std::size_t count) const;

  friend bool operator==(const TickSequence&, const TickSequence&) = default;

 private:
  std::vector<RatTime> prefix_;
  std::optional<PeriodicTicks> tail_;
};

// Walks the points of a sequence in increasing order.
class TickCursor {
 public:
  explicit TickCursor(const TickSequence& seq) : seq_(&seq) {}

  std::optional<RatTime> next();

 private:
  const TickSequence* seq_;
  std::size_t prefix_pos_ = 0;
  std::int64_t cycle_ = 0;
  std::size_t offset_pos_ = 0;
};

// Union of the inputs expressed over a common frame: the tail start is the
// largest input tail start (pushed forward by whole periods until it exceeds
// every finite point) and the period is the lcm of the input periods. The
// tail is not minimized, so each tail window lines up with whole periods of
// every input.
TickSequence common_frame(std::span<const TickSequence> seqs);

// Union of the generated sets, duplicates collapsed, with the tail period
// reduced to the smallest one reproducing the set.
TickSequence merge_sequences(std::span<const TickSequence> seqs);

// Same set of points (tails are compared over a common window).
bool same_points(const TickSequence& a, const TickSequence& b);

}  // namespace regsys
