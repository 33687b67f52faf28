#include "regsys/progressive.hpp"

#include <algorithm>

#include "regsys/error.hpp"

namespace regsys {
namespace {

const TimedValue* find_tick(const std::vector<TimedValue>& ticks, const RatTime& t) {
  auto it = std::lower_bound(ticks.begin(), ticks.end(), t,
                             [](const TimedValue& s, const RatTime& v) { return s.t < v; });
  return (it != ticks.end() && it->t == t) ? &*it : nullptr;
}

}  // namespace

ProgressiveFn::ProgressiveFn(std::size_t width, std::vector<TimedValue> prefix, ProgressiveTail tail)
    : width_(width), prefix_(std::move(prefix)), tail_(std::move(tail)) {
  if (width_ == 0 || width_ > BoolVec::kMaxWidth) throw DimensionError("progressive width out of range");
  for (std::size_t i = 0; i < prefix_.size(); ++i) {
    require_width(prefix_[i].value, width_, "progressive tick value");
    if (i > 0 && !(prefix_[i - 1].t < prefix_[i].t)) {
      throw OrderingError("progressive prefix ticks not strictly increasing at " + prefix_[i].t.str());
    }
  }
  if (!prefix_.empty() && !(prefix_.back().t < tail_.start)) {
    throw OrderingError("progressive prefix must end before the tail starts");
  }
  if (!tail_.period.is_positive()) throw OrderingError("progressive period must be positive");
  if (tail_.pattern.empty()) throw OrderingError("progressive tail needs at least one tick");
  BoolVec fired = BoolVec::zeros(width_);
  for (std::size_t i = 0; i < tail_.pattern.size(); ++i) {
    const auto& e = tail_.pattern[i];
    require_width(e.value, width_, "progressive tick value");
    if (e.t.is_negative() || !(e.t < tail_.period)) {
      throw OrderingError("progressive offset " + e.t.str() + " outside [0, period)");
    }
    if (i > 0 && !(tail_.pattern[i - 1].t < e.t)) {
      throw OrderingError("progressive offsets not strictly increasing");
    }
    fired = fired | e.value;
  }
  for (std::size_t i = 0; i < width_; ++i) {
    if (!fired[i]) {
      throw NotProgressiveError(i + 1, "coordinate " + std::to_string(i + 1) +
                                           " never fires in the periodic tail");
    }
  }
}

BoolVec ProgressiveFn::at(const RatTime& t) const {
  if (t < tail_.start) {
    const auto* tick = find_tick(prefix_, t);
    return tick ? tick->value : BoolVec::zeros(width_);
  }
  const auto* tick = find_tick(tail_.pattern, floor_mod(t - tail_.start, tail_.period));
  return tick ? tick->value : BoolVec::zeros(width_);
}

TickSequence ProgressiveFn::tick_sequence() const {
  std::vector<RatTime> prefix;
  for (const auto& e : prefix_) prefix.push_back(e.t);
  std::vector<RatTime> offsets;
  for (const auto& e : tail_.pattern) offsets.push_back(e.t);
  return TickSequence(std::move(prefix), PeriodicTicks{tail_.start, tail_.period, std::move(offsets)});
}

ProgressiveFn ProgressiveFn::without_zero_prefix_ticks() const {
  std::vector<TimedValue> kept;
  std::copy_if(prefix_.begin(), prefix_.end(), std::back_inserter(kept),
               [](const TimedValue& e) { return !e.value.is_zero(); });
  return ProgressiveFn(width_, std::move(kept), tail_);
}

bool progressive_equal(const ProgressiveFn& a, const ProgressiveFn& b) {
  if (a.width() != b.width()) return false;
  const TickSequence seqs[] = {a.tick_sequence(), b.tick_sequence()};
  TickSequence frame = common_frame(seqs);
  for (const auto& t : frame.points_until(frame.tail()->start + frame.tail()->period)) {
    if (a.at(t) != b.at(t)) return false;
  }
  return true;
}

ProgressiveFn product_progressive(const ProgressiveFn& rho, const ProgressiveFn& rho2) {
  const TickSequence seqs[] = {rho.tick_sequence(), rho2.tick_sequence()};
  TickSequence frame = common_frame(seqs);
  auto value_at = [&](const RatTime& t) { return concat(rho.at(t), rho2.at(t)); };
  std::vector<TimedValue> prefix;
  for (const auto& t : frame.prefix()) prefix.push_back({t, value_at(t)});
  const auto& tail = *frame.tail();
  std::vector<TimedValue> pattern;
  for (const auto& o : tail.offsets) pattern.push_back({o, value_at(tail.start + o)});
  return ProgressiveFn(rho.width() + rho2.width(), std::move(prefix),
                       ProgressiveTail{tail.start, tail.period, std::move(pattern)});
}

std::vector<TimedValue> reindex_on(const ProgressiveFn& rho, const TickSequence& merged,
                                   std::size_t count) {
  if (!merged.is_unbounded()) throw CoverageError("merged sequence is finite but ρ ticks forever");
  const TickSequence seqs[] = {rho.tick_sequence(), merged};
  TickSequence frame = common_frame(seqs);
  for (const auto& t : rho.tick_sequence().points_until(frame.tail()->start + frame.tail()->period)) {
    if (!merged.contains(t)) {
      throw CoverageError("merged sequence misses tick " + t.str());
    }
  }
  std::vector<TimedValue> out;
  for (const auto& t : merged.first_points(count)) out.push_back({t, rho.at(t)});
  return out;
}

}  // namespace regsys
