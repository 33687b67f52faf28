#include "regsys/signal.hpp"

#include <algorithm>

#include "regsys/error.hpp"

namespace regsys {
namespace {

// Value of a step list at t, `fallback` before the first step.
const BoolVec& step_value(const std::vector<TimedValue>& steps, const RatTime& t,
                          const BoolVec& fallback) {
  auto it = std::upper_bound(steps.begin(), steps.end(), t,
                             [](const RatTime& v, const TimedValue& s) { return v < s.t; });
  return it == steps.begin() ? fallback : std::prev(it)->value;
}

PeriodicTail minimize_period(PeriodicTail tail) {
  const std::size_t count = tail.pattern.size();
  for (std::size_t d = count; d > 1; --d) {
    if (count % d != 0) continue;
    const std::size_t block = count / d;
    const RatTime q = tail.period / Rational(static_cast<std::int64_t>(d));
    bool ok = true;
    for (std::size_t j = 0; ok && j + block < count; ++j) {
      ok = tail.pattern[j + block].t == tail.pattern[j].t + q &&
           tail.pattern[j + block].value == tail.pattern[j].value;
    }
    if (ok) {
      tail.pattern.resize(block);
      tail.period = q;
      return tail;
    }
  }
  return tail;
}

std::optional<RatTime> last_event(const Signal& x) {
  std::optional<RatTime> h;
  if (!x.switches().empty()) h = x.switches().back().t;
  if (const auto* p = x.periodic()) h = h ? std::max(*h, p->start) : p->start;
  return h;
}

}  // namespace

Signal::Signal(std::size_t width, BoolVec initial, std::vector<TimedValue> switches,
               SignalTail tail)
    : width_(width), initial_(std::move(initial)), switches_(std::move(switches)),
      tail_(std::move(tail)) {
  require_width(initial_, width_, "signal initial value");
  for (std::size_t i = 0; i < switches_.size(); ++i) {
    require_width(switches_[i].value, width_, "signal switch value");
    if (i > 0 && !(switches_[i - 1].t < switches_[i].t)) {
      throw OrderingError("signal switch times not strictly increasing at " +
                          switches_[i].t.str());
    }
  }
  if (auto* p = std::get_if<PeriodicTail>(&tail_)) {
    if (!p->period.is_positive()) throw OrderingError("signal period must be positive");
    if (p->pattern.empty()) throw OrderingError("periodic signal tail needs a pattern");
    if (!p->pattern.front().t.is_zero()) throw OrderingError("periodic pattern must start at offset 0");
    for (std::size_t i = 0; i < p->pattern.size(); ++i) {
      require_width(p->pattern[i].value, width_, "signal pattern value");
      if (!(p->pattern[i].t < p->period)) throw OrderingError("pattern offset not below the period");
      if (i > 0 && !(p->pattern[i - 1].t < p->pattern[i].t)) {
        throw OrderingError("pattern offsets not strictly increasing");
      }
    }
    if (!switches_.empty() && p->start < switches_.back().t) {
      throw OrderingError("periodic tail starts before the last switch");
    }
  }
}

BoolVec Signal::at(const RatTime& t) const {
  if (const auto* p = periodic(); p && !(t < p->start)) {
    return step_value(p->pattern, floor_mod(t - p->start, p->period), initial_);
  }
  return step_value(switches_, t, initial_);
}

TickSequence Signal::event_sequence() const {
  std::vector<RatTime> prefix;
  const auto* p = periodic();
  for (const auto& s : switches_) {
    if (p && !(s.t < p->start)) break;
    prefix.push_back(s.t);
  }
  if (!p) return TickSequence(std::move(prefix), std::nullopt);
  std::vector<RatTime> offsets;
  for (const auto& e : p->pattern) offsets.push_back(e.t);
  return TickSequence(std::move(prefix), PeriodicTicks{p->start, p->period, std::move(offsets)});
}

Signal Signal::from_steps(std::size_t width, const BoolVec& initial,
                          const std::vector<TimedValue>& steps, std::optional<Frame> frame) {
  if (!frame) return canonicalize(Signal(width, initial, steps));
  std::vector<TimedValue> prefix;
  std::vector<TimedValue> pattern{{RatTime(0), step_value(steps, frame->start, initial)}};
  const RatTime end = frame->start + frame->period;
  for (const auto& s : steps) {
    if (s.t < frame->start) {
      prefix.push_back(s);
    } else if (frame->start < s.t && s.t < end) {
      pattern.push_back({s.t - frame->start, s.value});
    }
  }
  return canonicalize(
      Signal(width, initial, std::move(prefix), PeriodicTail{frame->start, frame->period, std::move(pattern)}));
}

Signal canonicalize(const Signal& x) {
  const auto* p = x.periodic();
  std::vector<TimedValue> switches;
  BoolVec current = x.initial();
  for (const auto& s : x.switches()) {
    if (p && !(s.t < p->start)) break;  // shadowed by the tail
    if (s.value != current) {
      switches.push_back(s);
      current = s.value;
    }
  }
  if (!p) return Signal(x.width(), x.initial(), std::move(switches));

  std::vector<TimedValue> pattern;
  for (const auto& e : p->pattern) {
    if (pattern.empty() || pattern.back().value != e.value) pattern.push_back(e);
  }
  RatTime start = p->start;
  auto push_switch = [&](const RatTime& t, const BoolVec& v) {
    if (v != current) {
      switches.push_back({t, v});
      current = v;
    }
  };

  if (pattern.size() == 1) {
    push_switch(start, pattern.front().value);
    return Signal(x.width(), x.initial(), std::move(switches));
  }
  if (pattern.front().value == pattern.back().value) {
    // The last segment runs into the first one; start the cycle one segment
    // later so that cyclic neighbours differ.
    push_switch(start, pattern.front().value);
    const RatTime shift = pattern[1].t;
    pattern.erase(pattern.begin());
    for (auto& e : pattern) e.t -= shift;
    start += shift;
  }
  return Signal(x.width(), x.initial(), std::move(switches),
                minimize_period(PeriodicTail{start, p->period, std::move(pattern)}));
}

bool signals_equal(const Signal& x, const Signal& y) {
  if (x.width() != y.width()) {
    throw DimensionError("signals_equal: widths " + std::to_string(x.width()) + " and " +
                         std::to_string(y.width()));
  }
  if (x.initial() != y.initial()) return false;
  auto hx = last_event(x);
  auto hy = last_event(y);
  if (!hx && !hy) return true;
  RatTime horizon = hx && hy ? std::max(*hx, *hy) : (hx ? *hx : *hy);
  RatTime period(1);
  if (const auto* p = x.periodic()) period = lcm(period, p->period);
  if (const auto* p = y.periodic()) period = lcm(period, p->period);
  horizon += period;
  for (const auto* s : {&x, &y}) {
    for (const auto& t : s->event_sequence().points_until(horizon)) {
      if (x.at(t) != y.at(t)) return false;
    }
  }
  return true;
}

Signal product_signal(const Signal& x, const Signal& y) {
  const TickSequence events[] = {x.event_sequence(), y.event_sequence()};
  TickSequence frame = common_frame(events);
  std::vector<TimedValue> steps;
  auto sample = [&](const RatTime& t) { steps.push_back({t, concat(x.at(t), y.at(t))}); };
  for (const auto& t : frame.prefix()) sample(t);
  std::optional<Signal::Frame> tail_frame;
  if (const auto& tail = frame.tail()) {
    for (const auto& o : tail->offsets) sample(tail->start + o);
    tail_frame = Signal::Frame{tail->start, tail->period};
  }
  return Signal::from_steps(x.width() + y.width(), concat(x.initial(), y.initial()), steps,
                            tail_frame);
}

std::string to_string(const Signal& x) {
  std::string out = x.initial().str();
  for (const auto& s : x.switches()) out += "; " + s.value.str() + "@" + s.t.str();
  if (const auto* p = x.periodic()) {
    out += "; every " + p->period.str() + " from " + p->start.str() + ":";
    for (const auto& e : p->pattern) out += " " + e.value.str() + "@" + e.t.str();
  }
  return out;
}

}  // namespace regsys
