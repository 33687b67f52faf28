#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "regsys/generator.hpp"
#include "regsys/progressive.hpp"
#include "regsys/signal.hpp"

namespace regsys {

// Finite set of signals of one width, deduplicated by semantic equality.
class SignalSet {
 public:
  explicit SignalSet(std::size_t width) : width_(width) {}

  std::size_t width() const { return width_; }
  std::size_t size() const { return members_.size(); }
  bool empty() const { return members_.empty(); }
  const std::vector<Signal>& members() const { return members_; }

  // Returns false when an equal member is already present.
  bool insert(const Signal& x);
  bool contains(const Signal& x) const;
  std::optional<std::size_t> index_of(const Signal& x) const;

  // First member of *this missing from other, if any.
  std::optional<Signal> first_missing_from(const SignalSet& other) const;

  friend bool operator==(const SignalSet& a, const SignalSet& b);

  auto begin() const { return members_.begin(); }
  auto end() const { return members_.end(); }

 private:
  std::size_t width_;
  std::vector<Signal> members_;
};

struct InitialEntry {
  std::size_t input_index;
  std::vector<BoolVec> states;
};

struct ComputationEntry {
  BoolVec state;
  std::size_t input_index;
  std::vector<ProgressiveFn> rhos;
};

// A regular asynchronous system (Φ, U, i_f, π_f) with finite explicit data.
// U is stored as a list; i_f and π_f are keyed by input index, and an
// arbitrary signal is mapped to its index by semantic equality.
class RegularSystem {
 public:
  // Validates widths, that i_f is defined exactly on U with nonempty values,
  // and that π_f is defined exactly on Δ_f = {(μ,u) | u ∈ U, μ ∈ i_f(u)}
  // with nonempty values. Throws ValidationError / DimensionError.
  RegularSystem(GeneratorFn generator, std::vector<Signal> inputs,
                std::vector<InitialEntry> initial_fn, std::vector<ComputationEntry> computation_fn);

  const GeneratorFn& generator() const { return generator_; }
  std::size_t state_width() const { return generator_.state_width(); }
  std::size_t input_width() const { return generator_.input_width(); }
  const std::vector<Signal>& inputs() const { return inputs_; }

  std::optional<std::size_t> find_input(const Signal& u) const;
  // Throws UnknownInputError when u is not in U.
  std::size_t input_index(const Signal& u) const;

  const std::vector<BoolVec>& initial_states(std::size_t input_index) const;
  // Throws ValidationError when (μ, u) is not in Δ_f.
  const std::vector<ProgressiveFn>& computations(const BoolVec& mu, std::size_t input_index) const;

  // Entries in input-index order, the form the loader accepts.
  std::vector<InitialEntry> initial_entries() const;
  std::vector<ComputationEntry> computation_entries() const;

 private:
  GeneratorFn generator_;
  std::vector<Signal> inputs_;
  std::vector<std::vector<BoolVec>> initial_;
  std::map<std::pair<std::size_t, std::uint64_t>, std::vector<ProgressiveFn>> computation_;
};

// f(u) = {Φ^ρ(μ,u,·) | μ ∈ i_f(u), ρ ∈ π_f(μ,u)}.
SignalSet evaluate_system(const RegularSystem& f, std::size_t input_index);
SignalSet evaluate_system(const RegularSystem& f, const Signal& u);

struct StateSpaceReport {
  bool ok = true;
  // First offending (input index of f, state signal missing from h's inputs).
  std::optional<std::pair<std::size_t, Signal>> witness;

  explicit operator bool() const { return ok; }
};

// Whether f(u) ⊂ X = h's inputs for every u ∈ U.
StateSpaceReport check_state_space(const RegularSystem& f, const RegularSystem& h);

}  // namespace regsys
