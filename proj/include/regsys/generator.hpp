#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <memory>
#include <vector>

#include "regsys/bool_vec.hpp"

namespace regsys {

// Truth table of a generator function Φ: B^n x B^m -> B^n.
//
// Rows are stored densely and indexed by the code of the concatenation
// (μ, λ), most significant coordinate first.
//
// A generator produced by compose_serial() remembers its two factors. Its
// table holds the unmasked composition (Φ(μ,λ), Ψ(δ,Φ(μ,λ))), but its masked
// update is Ψ^ν̃ * Φ^ν: the second stage reads the *masked* output of the
// first one. Collapsing the factors into a plain table and applying the
// coordinate-wise mask would let the second stage see first-stage updates
// that were not enabled, which is not how a serial connection behaves.
class GeneratorFn {
 public:
  // n <= 16 and n + m <= 20 keep the dense table at most 1M rows.
  static constexpr std::size_t kMaxStateWidth = 16;
  static constexpr std::size_t kMaxTableBits = 20;

  GeneratorFn(std::size_t state_width, std::size_t input_width, std::vector<std::uint32_t> table);

  static GeneratorFn from_function(std::size_t state_width, std::size_t input_width,
                                   const std::function<BoolVec(const BoolVec&, const BoolVec&)>& fn);
  static GeneratorFn identity(std::size_t state_width, std::size_t input_width);

  // The k-th generator in lexicographic order of tables, used for exhaustive
  // sweeps; k < generator_count(n, m).
  static GeneratorFn enumerate(std::size_t state_width, std::size_t input_width, std::uint64_t k);
  static std::uint64_t generator_count(std::size_t state_width, std::size_t input_width);

  std::size_t state_width() const { return state_width_; }
  std::size_t input_width() const { return input_width_; }
  std::size_t row_count() const { return table_.size(); }
  const std::vector<std::uint32_t>& table() const { return table_; }

  BoolVec eval(const BoolVec& mu, const BoolVec& lambda) const;
  BoolVec masked_update(const BoolVec& nu, const BoolVec& mu, const BoolVec& lambda) const;

  bool is_serial() const { return factors_ != nullptr; }
  // Only valid when is_serial().
  const GeneratorFn& first() const;
  const GeneratorFn& second() const;

  friend bool operator==(const GeneratorFn& a, const GeneratorFn& b);

  friend GeneratorFn compose_serial(const GeneratorFn& upstream, const GeneratorFn& downstream);

 private:
  struct Factors;

  std::size_t state_width_;
  std::size_t input_width_;
  std::vector<std::uint32_t> table_;
  std::shared_ptr<const Factors> factors_;
};

struct GeneratorFn::Factors {
  GeneratorFn first;
  GeneratorFn second;
};

// Ψ*Φ: B^(n+p) x B^m -> B^(n+p), ((μ,δ),λ) -> (Φ(μ,λ), Ψ(δ,Φ(μ,λ))).
// Requires downstream.input_width() == upstream.state_width().
GeneratorFn compose_serial(const GeneratorFn& upstream, const GeneratorFn& downstream);

inline BoolVec eval_generator(const GeneratorFn& g, const BoolVec& mu, const BoolVec& lambda) {
  return g.eval(mu, lambda);
}

inline BoolVec masked_update(const GeneratorFn& g, const BoolVec& nu, const BoolVec& mu,
                             const BoolVec& lambda) {
  return g.masked_update(nu, mu, lambda);
}

}  // namespace regsys
