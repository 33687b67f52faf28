#include "regsys/system.hpp"

#include <algorithm>

#include "regsys/error.hpp"
#include "regsys/orbit.hpp"

namespace regsys {

bool SignalSet::insert(const Signal& x) {
  if (x.width() != width_) {
    throw DimensionError("signal of width " + std::to_string(x.width()) + " inserted into a set of width " +
                         std::to_string(width_));
  }
  if (contains(x)) return false;
  members_.push_back(x);
  return true;
}

std::optional<std::size_t> SignalSet::index_of(const Signal& x) const {
  if (x.width() != width_) return std::nullopt;
  for (std::size_t i = 0; i < members_.size(); ++i) {
    if (signals_equal(members_[i], x)) return i;
  }
  return std::nullopt;
}

bool SignalSet::contains(const Signal& x) const { return index_of(x).has_value(); }

std::optional<Signal> SignalSet::first_missing_from(const SignalSet& other) const {
  for (const auto& x : members_) {
    if (!other.contains(x)) return x;
  }
  return std::nullopt;
}

bool operator==(const SignalSet& a, const SignalSet& b) {
  return a.width_ == b.width_ && a.size() == b.size() && !a.first_missing_from(b);
}

RegularSystem::RegularSystem(GeneratorFn generator, std::vector<Signal> inputs,
                             std::vector<InitialEntry> initial_fn,
                             std::vector<ComputationEntry> computation_fn)
    : generator_(std::move(generator)), inputs_(std::move(inputs)) {
  const std::size_t n = generator_.state_width();
  const std::size_t m = generator_.input_width();
  if (inputs_.empty()) throw ValidationError("a system needs at least one admissible input");
  for (std::size_t k = 0; k < inputs_.size(); ++k) {
    if (inputs_[k].width() != m) {
      throw DimensionError("input " + std::to_string(k) + " has width " +
                           std::to_string(inputs_[k].width()) + ", generator expects " + std::to_string(m));
    }
    for (std::size_t j = 0; j < k; ++j) {
      if (signals_equal(inputs_[j], inputs_[k])) {
        throw ValidationError("inputs " + std::to_string(j) + " and " + std::to_string(k) +
                              " are the same signal");
      }
    }
  }

  initial_.assign(inputs_.size(), {});
  std::vector<bool> defined(inputs_.size(), false);
  for (auto& entry : initial_fn) {
    if (entry.input_index >= inputs_.size()) {
      throw ValidationError("initial_fn refers to unknown input " + std::to_string(entry.input_index));
    }
    if (defined[entry.input_index]) {
      throw ValidationError("initial_fn defined twice for input " + std::to_string(entry.input_index));
    }
    if (entry.states.empty()) {
      throw ValidationError("initial_fn of input " + std::to_string(entry.input_index) + " is empty");
    }
    auto& states = initial_[entry.input_index];
    for (const auto& mu : entry.states) {
      require_width(mu, n, "initial state");
      if (std::find(states.begin(), states.end(), mu) == states.end()) states.push_back(mu);
    }
    defined[entry.input_index] = true;
  }
  for (std::size_t k = 0; k < inputs_.size(); ++k) {
    if (!defined[k]) throw ValidationError("initial_fn undefined for input " + std::to_string(k));
  }

  for (auto& entry : computation_fn) {
    require_width(entry.state, n, "computation_fn state");
    if (entry.input_index >= inputs_.size()) {
      throw ValidationError("computation_fn refers to unknown input " + std::to_string(entry.input_index));
    }
    const auto& states = initial_[entry.input_index];
    if (std::find(states.begin(), states.end(), entry.state) == states.end()) {
      throw ValidationError("computation_fn key (" + entry.state.str() + ", " +
                            std::to_string(entry.input_index) + ") is outside Δ_f");
    }
    if (entry.rhos.empty()) {
      throw ValidationError("computation_fn value for (" + entry.state.str() + ", " +
                            std::to_string(entry.input_index) + ") is empty");
    }
    for (const auto& rho : entry.rhos) {
      if (rho.width() != n) throw DimensionError("computation_fn ρ width does not match the state width");
    }
    auto [it, fresh] = computation_.emplace(std::make_pair(entry.input_index, entry.state.code()),
                                            std::move(entry.rhos));
    if (!fresh) {
      throw ValidationError("computation_fn defined twice for (" + entry.state.str() + ", " +
                            std::to_string(entry.input_index) + ")");
    }
  }
  for (std::size_t k = 0; k < inputs_.size(); ++k) {
    for (const auto& mu : initial_[k]) {
      if (!computation_.contains({k, mu.code()})) {
        throw ValidationError("computation_fn undefined for (" + mu.str() + ", " + std::to_string(k) + ")");
      }
    }
  }
}

std::optional<std::size_t> RegularSystem::find_input(const Signal& u) const {
  if (u.width() != input_width()) return std::nullopt;
  for (std::size_t k = 0; k < inputs_.size(); ++k) {
    if (signals_equal(inputs_[k], u)) return k;
  }
  return std::nullopt;
}

std::size_t RegularSystem::input_index(const Signal& u) const {
  auto k = find_input(u);
  if (!k) throw UnknownInputError("signal is not an admissible input of the system");
  return *k;
}

const std::vector<BoolVec>& RegularSystem::initial_states(std::size_t input_index) const {
  if (input_index >= inputs_.size()) throw UnknownInputError("input index out of range");
  return initial_[input_index];
}

const std::vector<ProgressiveFn>& RegularSystem::computations(const BoolVec& mu,
                                                              std::size_t input_index) const {
  auto it = computation_.find({input_index, mu.code()});
  if (it == computation_.end() || mu.width() != state_width()) {
    throw ValidationError("(" + mu.str() + ", " + std::to_string(input_index) + ") is outside Δ_f");
  }
  return it->second;
}

std::vector<InitialEntry> RegularSystem::initial_entries() const {
  std::vector<InitialEntry> out;
  for (std::size_t k = 0; k < initial_.size(); ++k) out.push_back({k, initial_[k]});
  return out;
}

std::vector<ComputationEntry> RegularSystem::computation_entries() const {
  std::vector<ComputationEntry> out;
  for (std::size_t k = 0; k < initial_.size(); ++k) {
    for (const auto& mu : initial_[k]) out.push_back({mu, k, computations(mu, k)});
  }
  return out;
}

SignalSet evaluate_system(const RegularSystem& f, std::size_t input_index) {
  const Signal& u = f.inputs().at(input_index);
  SignalSet out(f.state_width());
  for (const auto& mu : f.initial_states(input_index)) {
    for (const auto& rho : f.computations(mu, input_index)) {
      out.insert(orbit(f.generator(), rho, mu, u));
    }
  }
  return out;
}

SignalSet evaluate_system(const RegularSystem& f, const Signal& u) {
  return evaluate_system(f, f.input_index(u));
}

StateSpaceReport check_state_space(const RegularSystem& f, const RegularSystem& h) {
  if (f.state_width() != h.input_width()) {
    throw DimensionError("state width of f (" + std::to_string(f.state_width()) +
                         ") differs from the input width of h (" + std::to_string(h.input_width()) + ")");
  }
  for (std::size_t k = 0; k < f.inputs().size(); ++k) {
    for (const auto& x : evaluate_system(f, k)) {
      if (!h.find_input(x)) return {false, std::make_pair(k, x)};
    }
  }
  return {};
}

}  // namespace regsys
