#include "regsys/tick_sequence.hpp"

#include <algorithm>

#include "regsys/error.hpp"

namespace regsys {

TickSequence::TickSequence(std::vector<RatTime> prefix, std::optional<PeriodicTicks> tail)
    : prefix_(std::move(prefix)), tail_(std::move(tail)) {
  for (std::size_t i = 1; i < prefix_.size(); ++i) {
    if (!(prefix_[i - 1] < prefix_[i])) throw OrderingError("tick prefix not strictly increasing");
  }
  if (tail_) {
    if (!tail_->period.is_positive()) throw OrderingError("tick period must be positive");
    if (tail_->offsets.empty()) throw OrderingError("periodic ticks need at least one offset");
    for (std::size_t i = 0; i < tail_->offsets.size(); ++i) {
      const auto& o = tail_->offsets[i];
      if (o.is_negative() || !(o < tail_->period)) {
        throw OrderingError("tick offset " + o.str() + " outside [0, period)");
      }
      if (i > 0 && !(tail_->offsets[i - 1] < o)) {
        throw OrderingError("tick offsets not strictly increasing");
      }
    }
    if (!prefix_.empty() && !(prefix_.back() < tail_->start)) {
      throw OrderingError("tick prefix must end before the periodic tail starts");
    }
  }
}

bool TickSequence::contains(const RatTime& t) const {
  if (std::binary_search(prefix_.begin(), prefix_.end(), t)) return true;
  if (!tail_ || t < tail_->start) return false;
  RatTime r = floor_mod(t - tail_->start, tail_->period);
  return std::binary_search(tail_->offsets.begin(), tail_->offsets.end(), r);
}

std::optional<RatTime> TickCursor::next() {
  if (prefix_pos_ < seq_->prefix().size()) return seq_->prefix()[prefix_pos_++];
  const auto& tail = seq_->tail();
  if (!tail) return std::nullopt;
  RatTime t = tail->start + Rational(cycle_) * tail->period + tail->offsets[offset_pos_];
  if (++offset_pos_ == tail->offsets.size()) {
    offset_pos_ = 0;
    ++cycle_;
  }
  return t;
}

std::vector<RatTime> TickSequence::points_until(const RatTime& horizon) const {
  std::vector<RatTime> out;
  TickCursor cursor(*this);
  while (auto t = cursor.next()) {
    if (horizon < *t) break;
    out.push_back(*t);
  }
  return out;
}

std::vector<RatTime> TickSequence::first_points(std::size_t count) const {
  std::vector<RatTime> out;
  TickCursor cursor(*this);
  while (out.size() < count) {
    auto t = cursor.next();
    if (!t) break;
    out.push_back(*t);
  }
  return out;
}

TickSequence common_frame(std::span<const TickSequence> seqs) {
  std::optional<RatTime> start;
  std::optional<RatTime> period;
  std::optional<RatTime> last_finite;
  for (const auto& s : seqs) {
    if (!s.prefix().empty()) {
      last_finite = last_finite ? std::max(*last_finite, s.prefix().back()) : s.prefix().back();
    }
    if (s.tail()) {
      start = start ? std::max(*start, s.tail()->start) : s.tail()->start;
      period = period ? lcm(*period, s.tail()->period) : s.tail()->period;
    }
  }

  if (!start) {
    std::vector<RatTime> all;
    for (const auto& s : seqs) all.insert(all.end(), s.prefix().begin(), s.prefix().end());
    std::sort(all.begin(), all.end());
    all.erase(std::unique(all.begin(), all.end()), all.end());
    return TickSequence(std::move(all), std::nullopt);
  }

  if (last_finite && !(*last_finite < *start)) {
    *start += Rational(floor_div(*last_finite - *start, *period) + 1) * *period;
  }
  const RatTime window_end = *start + *period;

  std::vector<RatTime> prefix;
  std::vector<RatTime> offsets;
  for (const auto& s : seqs) {
    for (const auto& t : s.points_until(window_end)) {
      if (t < *start) {
        prefix.push_back(t);
      } else if (t < window_end) {
        offsets.push_back(t - *start);
      }
    }
  }
  std::sort(prefix.begin(), prefix.end());
  prefix.erase(std::unique(prefix.begin(), prefix.end()), prefix.end());
  std::sort(offsets.begin(), offsets.end());
  offsets.erase(std::unique(offsets.begin(), offsets.end()), offsets.end());
  return TickSequence(std::move(prefix), PeriodicTicks{*start, *period, std::move(offsets)});
}

namespace {

// Smallest period P/d such that the offsets are invariant under a shift by
// P/d (modulo P).
PeriodicTicks minimize_period(PeriodicTicks tail) {
  const std::size_t count = tail.offsets.size();
  for (std::size_t d = count; d > 1; --d) {
    if (count % d != 0) continue;
    const std::size_t block = count / d;
    const RatTime q = tail.period / Rational(static_cast<std::int64_t>(d));
    bool ok = true;
    for (std::size_t j = 0; ok && j + block < count; ++j) {
      ok = tail.offsets[j + block] == tail.offsets[j] + q;
    }
    if (ok) {
      tail.offsets.resize(block);
      tail.period = q;
      return tail;
    }
  }
  return tail;
}

}  // namespace

TickSequence merge_sequences(std::span<const TickSequence> seqs) {
  TickSequence frame = common_frame(seqs);
  if (!frame.tail()) return frame;
  return TickSequence(frame.prefix(), minimize_period(*frame.tail()));
}

bool same_points(const TickSequence& a, const TickSequence& b) {
  if (a.is_unbounded() != b.is_unbounded()) return false;
  const TickSequence both[] = {a, b};
  TickSequence frame = common_frame(both);
  RatTime horizon = frame.tail() ? frame.tail()->start + frame.tail()->period
                                 : (frame.prefix().empty() ? RatTime(0) : frame.prefix().back());
  return a.points_until(horizon) == b.points_until(horizon);
}

}  // namespace regsys
