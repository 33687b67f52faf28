#pragma once

#include <cstddef>
#include <vector>

#include "regsys/generator.hpp"
#include "regsys/progressive.hpp"
#include "regsys/signal.hpp"

namespace regsys {

struct OrbitEvent {
  RatTime t;
  BoolVec rho_value;
  BoolVec input_value;
  BoolVec state_after;

  friend bool operator==(const OrbitEvent&, const OrbitEvent&) = default;
};

struct OrbitTrace {
  std::vector<OrbitEvent> events;
  Signal result;
};

// The orbit Φ^ρ(μ, u, ·): μ before the first merged event, then
// ω_{k+1} = Φ^{ρ(t_{k+1})}(ω_k, u(t_{k+1})) on [t_{k+1}, t_{k+2}), where (t_k)
// is the increasing union of u's event times and ρ's tick times.
//
// Past the common frame start the event pattern repeats with the frame
// period P, so the state at window boundaries determines the future. The
// state space is finite, hence a boundary state repeats within 2^n + 1
// windows; the cycle between the two occurrences becomes the periodic tail.
Signal orbit(const GeneratorFn& g, const ProgressiveFn& rho, const BoolVec& mu, const Signal& u);

// The first `count` merged events with their intermediate states, plus the
// full orbit.
OrbitTrace orbit_trace(const GeneratorFn& g, const ProgressiveFn& rho, const BoolVec& mu,
                       const Signal& u, std::size_t count);

}  // namespace regsys
