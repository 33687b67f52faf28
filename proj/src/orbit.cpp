#include "regsys/orbit.hpp"

#include <unordered_map>

#include "regsys/error.hpp"

namespace regsys {
namespace {

void check_dimensions(const GeneratorFn& g, const ProgressiveFn& rho, const BoolVec& mu,
                      const Signal& u) {
  if (rho.width() != g.state_width()) {
    throw DimensionError("orbit: ρ has width " + std::to_string(rho.width()) + ", state width is " +
                         std::to_string(g.state_width()));
  }
  require_width(mu, g.state_width(), "orbit initial state");
  if (u.width() != g.input_width()) {
    throw DimensionError("orbit: input has width " + std::to_string(u.width()) +
                         ", generator expects " + std::to_string(g.input_width()));
  }
}

TickSequence event_frame(const ProgressiveFn& rho, const Signal& u) {
  const TickSequence seqs[] = {u.event_sequence(), rho.tick_sequence()};
  return common_frame(seqs);
}

}  // namespace

Signal orbit(const GeneratorFn& g, const ProgressiveFn& rho, const BoolVec& mu, const Signal& u) {
  check_dimensions(g, rho, mu, u);
  const TickSequence frame = event_frame(rho, u);
  const PeriodicTicks& window = *frame.tail();

  BoolVec state = mu;
  std::vector<TimedValue> steps;
  auto step = [&](const RatTime& t) {
    state = g.masked_update(rho.at(t), state, u.at(t));
    steps.push_back({t, state});
  };
  for (const auto& t : frame.prefix()) step(t);

  std::unordered_map<std::uint64_t, std::int64_t> seen;
  std::int64_t w = 0;
  for (;; ++w) {
    auto [it, fresh] = seen.emplace(state.code(), w);
    if (!fresh) break;
    const RatTime base = window.start + Rational(w) * window.period;
    for (const auto& o : window.offsets) step(base + o);
  }
  const std::int64_t first = seen.at(state.code());
  return Signal::from_steps(
      g.state_width(), mu, steps,
      Signal::Frame{window.start + Rational(first) * window.period, Rational(w - first) * window.period});
}

OrbitTrace orbit_trace(const GeneratorFn& g, const ProgressiveFn& rho, const BoolVec& mu,
                       const Signal& u, std::size_t count) {
  OrbitTrace trace{{}, orbit(g, rho, mu, u)};
  const TickSequence frame = event_frame(rho, u);
  BoolVec state = mu;
  for (const auto& t : frame.first_points(count)) {
    BoolVec nu = rho.at(t);
    BoolVec lambda = u.at(t);
    state = g.masked_update(nu, state, lambda);
    trace.events.push_back({t, nu, lambda, state});
  }
  return trace;
}

}  // namespace regsys
