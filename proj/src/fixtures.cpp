#include "regsys/fixtures.hpp"

#include "regsys/error.hpp"

namespace regsys::fixtures {
namespace {

ProgressiveFn every(std::size_t width, RatTime start, RatTime period) {
  return ProgressiveFn(width, {}, ProgressiveTail{start, period, {{RatTime(0), BoolVec::ones(width)}}});
}

}  // namespace

ProgressiveFn integer_ticks(std::size_t width) { return every(width, 0, 1); }
ProgressiveFn even_ticks(std::size_t width) { return every(width, 0, 2); }
ProgressiveFn odd_ticks(std::size_t width) { return every(width, 1, 2); }
ProgressiveFn third_ticks(std::size_t width) { return every(width, Rational(1, 3), 1); }

std::vector<Signal> standard_inputs(std::size_t width) {
  const BoolVec zero = BoolVec::zeros(width);
  const BoolVec one = BoolVec::ones(width);
  return {
      Signal::constant(zero),
      Signal(width, zero, {{Rational(5, 2), one}}),
      Signal(width, zero, {}, PeriodicTail{0, 2, {{0, one}, {1, zero}}}),
  };
}

std::vector<SchedulePair> standard_schedules(std::size_t n, std::size_t p) {
  return {
      {"aligned", integer_ticks(n), integer_ticks(p)},
      {"interleaved", even_ticks(n), odd_ticks(p)},
      {"offset", integer_ticks(n), third_ticks(p)},
  };
}

RegularSystem standard_upstream(const GeneratorFn& phi) {
  const std::size_t n = phi.state_width();
  const BoolVec zero = BoolVec::zeros(n);
  const BoolVec one = BoolVec::ones(n);
  std::vector<InitialEntry> initial = {{0, {zero}}, {1, {zero, one}}, {2, {one}}};
  std::vector<ComputationEntry> computation;
  for (const auto& entry : initial) {
    for (const auto& mu : entry.states) {
      std::vector<ProgressiveFn> rhos;
      if ((entry.input_index + mu.code()) % 2 == 0) {
        rhos = {integer_ticks(n), even_ticks(n)};
      } else {
        rhos = {even_ticks(n)};
      }
      computation.push_back({mu, entry.input_index, std::move(rhos)});
    }
  }
  return RegularSystem(phi, standard_inputs(phi.input_width()), std::move(initial), std::move(computation));
}

RegularSystem closure_downstream(const RegularSystem& f, const GeneratorFn& psi,
                                 const InitialChooser& initial_choice,
                                 const ComputationChooser& computation_choice) {
  if (psi.input_width() != f.state_width()) {
    throw DimensionError("downstream generator must read the upstream state");
  }
  SignalSet states(f.state_width());
  for (std::size_t k = 0; k < f.inputs().size(); ++k) {
    for (const auto& x : evaluate_system(f, k)) states.insert(x);
  }
  std::vector<InitialEntry> initial;
  std::vector<ComputationEntry> computation;
  for (std::size_t j = 0; j < states.size(); ++j) {
    const Signal& x = states.members()[j];
    auto deltas = initial_choice(j, x);
    for (const auto& delta : deltas) computation.push_back({delta, j, computation_choice(delta, j, x)});
    initial.push_back({j, std::move(deltas)});
  }
  return RegularSystem(psi, states.members(), std::move(initial), std::move(computation));
}

RegularSystem standard_downstream(const RegularSystem& f, const GeneratorFn& psi) {
  const std::size_t p = psi.state_width();
  const BoolVec zero = BoolVec::zeros(p);
  const BoolVec one = BoolVec::ones(p);
  return closure_downstream(
      f, psi,
      [&](std::size_t j, const Signal&) -> std::vector<BoolVec> {
        switch (j % 3) {
          case 0: return {zero};
          case 1: return {one};
          default: return {zero, one};
        }
      },
      [&](const BoolVec& delta, std::size_t j, const Signal&) -> std::vector<ProgressiveFn> {
        if ((j + delta.code()) % 2 == 0) return {odd_ticks(p), third_ticks(p)};
        return {integer_ticks(p)};
      });
}

}  // namespace regsys::fixtures
