#pragma once

#include <cstddef>
#include <functional>
#include <string>
#include <vector>

#include "regsys/system.hpp"

// Small deterministic signals, schedules and systems shared by the
// exhaustive sweeps, the CLI and the tests.
namespace regsys::fixtures {

// Ticks with value 1^n at every integer >= 0.
ProgressiveFn integer_ticks(std::size_t width);
// Ticks with value 1^n at 0, 2, 4, ...
ProgressiveFn even_ticks(std::size_t width);
// Ticks with value 1^n at 1, 3, 5, ...
ProgressiveFn odd_ticks(std::size_t width);
// Ticks with value 1^n at k + 1/3, k >= 0.
ProgressiveFn third_ticks(std::size_t width);

// Constant 0^m; a single step 0^m -> 1^m at 5/2; a period-2 wave that is 1^m
// on [2k, 2k+1) and 0^m elsewhere from 0 on.
std::vector<Signal> standard_inputs(std::size_t width);

struct SchedulePair {
  std::string name;
  ProgressiveFn rho;
  ProgressiveFn rho2;
};

// Aligned integer ticks, interleaved even/odd ticks, and integer ticks
// against ticks offset by 1/3.
std::vector<SchedulePair> standard_schedules(std::size_t n, std::size_t p);

// f over the standard inputs with i_f and π_f of size at most 2.
RegularSystem standard_upstream(const GeneratorFn& phi);

using InitialChooser = std::function<std::vector<BoolVec>(std::size_t index, const Signal& x)>;
using ComputationChooser =
    std::function<std::vector<ProgressiveFn>(const BoolVec& delta, std::size_t index, const Signal& x)>;

// h whose inputs are exactly the states of f (the closure of f's orbits),
// so that f(u) ⊂ X holds by construction.
RegularSystem closure_downstream(const RegularSystem& f, const GeneratorFn& psi,
                                 const InitialChooser& initial, const ComputationChooser& computation);

// closure_downstream with i_h and π_h of size at most 2 chosen so that
// different states of f get different initial sets.
RegularSystem standard_downstream(const RegularSystem& f, const GeneratorFn& psi);

}  // namespace regsys::fixtures
