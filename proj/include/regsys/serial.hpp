#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "regsys/system.hpp"

namespace regsys {

// Generation data of one member of (h*f)(u).
struct SerialWitness {
  BoolVec mu;
  ProgressiveFn rho;
  Signal x;  // Φ^ρ(μ,u,·)
  BoolVec delta;
  ProgressiveFn rho2;
  Signal y;  // Ψ^ρ̃(δ,x,·)
};

// How the initial state function i and computation function π of h*f are
// built. Anything other than kFaithful deliberately breaks the construction
// and exists so that tests can confirm the checker notices.
enum class SerialVariant {
  kFaithful,
  // π((μ,δ),u) keeps every ρ ∈ π_f(μ,u), even when δ ∉ i_h(Φ^ρ(μ,u,·)).
  kDropDeltaFilter,
  // i(u) uses only the first ρ' ∈ π_f(μ,u) instead of the existential.
  kSingleWitness,
};

std::string to_string(SerialVariant v);
SerialVariant serial_variant_from_string(const std::string& name);

// (h*f)(u) = {(x,y) | x ∈ f(u), y ∈ h(x)}. Throws CompositionError when some
// x ∈ f(u) is not an input of h.
SignalSet serial_set_oracle(const RegularSystem& f, const RegularSystem& h, std::size_t input_index);

// i(u) = {(μ,δ) | μ ∈ i_f(u), ∃ρ' ∈ π_f(μ,u), δ ∈ i_h(Φ^ρ'(μ,u,·))}.
std::vector<BoolVec> build_serial_initial(const RegularSystem& f, const RegularSystem& h,
                                          std::size_t input_index,
                                          SerialVariant variant = SerialVariant::kFaithful);

// π((μ,δ),u) = {(ρ,ρ̃) | ρ ∈ π_f(μ,u), δ ∈ i_h(Φ^ρ(μ,u,·)), ρ̃ ∈ π_h(δ,Φ^ρ(μ,u,·))}.
// Throws ValidationError when mu_delta ∉ i(u).
std::vector<std::pair<ProgressiveFn, ProgressiveFn>> build_serial_computation(
    const RegularSystem& f, const RegularSystem& h, const BoolVec& mu_delta, std::size_t input_index,
    SerialVariant variant = SerialVariant::kFaithful);

// {(Ψ*Φ)^(ρ,ρ̃)((μ,δ),u,·) | (μ,δ) ∈ i(u), (ρ,ρ̃) ∈ π((μ,δ),u)}.
SignalSet serial_regular(const RegularSystem& f, const RegularSystem& h, std::size_t input_index,
                         SerialVariant variant = SerialVariant::kFaithful);

// The same composed orbits, enumerated straight from the generation data
// μ ∈ i_f(u), ρ ∈ π_f(μ,u), δ ∈ i_h(Φ^ρ(μ,u,·)), ρ̃ ∈ π_h(δ,Φ^ρ(μ,u,·)),
// without going through i and π.
SignalSet serial_direct(const RegularSystem& f, const RegularSystem& h, std::size_t input_index);

// Classical composition {y | x ∈ f(u), y ∈ h(x)} of the multi-valued maps.
// Kept for contrast only: it loses the intermediate state.
SignalSet classical_composition(const RegularSystem& f, const RegularSystem& h,
                                std::size_t input_index);

// (Φ^ρ(μ,u,·), Ψ^ρ̃(δ,Φ^ρ(μ,u,·),·)) == (Ψ*Φ)^(ρ,ρ̃)((μ,δ),u,·) for all t.
bool check_lemma6(const GeneratorFn& g_f, const GeneratorFn& g_h, const BoolVec& mu,
                  const BoolVec& delta, const ProgressiveFn& rho, const ProgressiveFn& rho2,
                  const Signal& u);

struct Counterexample {
  std::string check;  // "lemma6", "lemma8" or "theorem22"
  std::string detail;
  std::optional<SerialWitness> witness;
  std::optional<Signal> expected;
  std::optional<Signal> actual;
};

struct CaseResult {
  std::size_t input_index = 0;
  bool lemma6 = true;
  bool lemma8 = true;
  bool theorem22 = true;
  std::optional<Counterexample> counterexample;

  bool passed() const { return lemma6 && lemma8 && theorem22; }
};

struct VerificationReport {
  std::vector<CaseResult> cases;
  bool overall = true;
};

// Checks, for every u ∈ U: the composed-orbit identity on every generation
// tuple, that the directly enumerated set equals the set generated through
// i and π, and that the set oracle equals the regular generation. Throws CompositionError
// with a witness when f(u) ⊄ X for some u.
VerificationReport verify_serial_theorem(const RegularSystem& f, const RegularSystem& h,
                                         SerialVariant variant = SerialVariant::kFaithful);

std::string summarize(const VerificationReport& report);

}  // namespace regsys
