#include "regsys/generator.hpp"

#include <string>

#include "regsys/error.hpp"

namespace regsys {
namespace {

void check_widths(std::size_t n, std::size_t m) {
  if (n == 0 || m == 0) throw DimensionError("generator widths must be positive");
  if (n > GeneratorFn::kMaxStateWidth || n + m > GeneratorFn::kMaxTableBits) {
    throw DimensionError("generator too large: state width " + std::to_string(n) + ", input width " +
                         std::to_string(m));
  }
}

}  // namespace

GeneratorFn::GeneratorFn(std::size_t state_width, std::size_t input_width,
                         std::vector<std::uint32_t> table)
    : state_width_(state_width), input_width_(input_width), table_(std::move(table)) {
  check_widths(state_width, input_width);
  if (table_.size() != (std::size_t{1} << (state_width + input_width))) {
    throw DimensionError("generator table must have 2^(n+m) rows");
  }
  const std::uint32_t limit = std::uint32_t{1} << state_width;
  for (auto v : table_) {
    if (v >= limit) throw DimensionError("generator image does not fit the state width");
  }
}

GeneratorFn GeneratorFn::from_function(
    std::size_t state_width, std::size_t input_width,
    const std::function<BoolVec(const BoolVec&, const BoolVec&)>& fn) {
  check_widths(state_width, input_width);
  std::vector<std::uint32_t> table(std::size_t{1} << (state_width + input_width));
  for (std::uint64_t mu = 0; mu < (std::uint64_t{1} << state_width); ++mu) {
    for (std::uint64_t lambda = 0; lambda < (std::uint64_t{1} << input_width); ++lambda) {
      BoolVec image = fn(BoolVec(state_width, mu), BoolVec(input_width, lambda));
      require_width(image, state_width, "generator image");
      table[(mu << input_width) | lambda] = static_cast<std::uint32_t>(image.code());
    }
  }
  return GeneratorFn(state_width, input_width, std::move(table));
}

GeneratorFn GeneratorFn::identity(std::size_t state_width, std::size_t input_width) {
  return from_function(state_width, input_width,
                       [](const BoolVec& mu, const BoolVec&) { return mu; });
}

std::uint64_t GeneratorFn::generator_count(std::size_t state_width, std::size_t input_width) {
  check_widths(state_width, input_width);
  const std::size_t bits = state_width << (state_width + input_width);
  if (bits >= 64) throw DimensionError("too many generators to enumerate");
  return std::uint64_t{1} << bits;
}

GeneratorFn GeneratorFn::enumerate(std::size_t state_width, std::size_t input_width,
                                   std::uint64_t k) {
  if (k >= generator_count(state_width, input_width)) {
    throw DimensionError("generator index out of range");
  }
  const std::size_t rows = std::size_t{1} << (state_width + input_width);
  const std::uint64_t row_mask = (std::uint64_t{1} << state_width) - 1;
  std::vector<std::uint32_t> table(rows);
  // Row 0 is the most significant digit of k.
  for (std::size_t r = rows; r-- > 0;) {
    table[r] = static_cast<std::uint32_t>(k & row_mask);
    k >>= state_width;
  }
  return GeneratorFn(state_width, input_width, std::move(table));
}

BoolVec GeneratorFn::eval(const BoolVec& mu, const BoolVec& lambda) const {
  require_width(mu, state_width_, "generator state");
  require_width(lambda, input_width_, "generator input");
  return BoolVec(state_width_, table_[(mu.code() << input_width_) | lambda.code()]);
}

BoolVec GeneratorFn::masked_update(const BoolVec& nu, const BoolVec& mu,
                                   const BoolVec& lambda) const {
  require_width(nu, state_width_, "update mask");
  if (factors_) {
    require_width(mu, state_width_, "generator state");
    const std::size_t n = factors_->first.state_width();
    const std::size_t p = factors_->second.state_width();
    BoolVec a = factors_->first.masked_update(nu.head(n), mu.head(n), lambda);
    BoolVec b = factors_->second.masked_update(nu.tail(p), mu.tail(p), a);
    return concat(a, b);
  }
  BoolVec image = eval(mu, lambda);
  return (~nu & mu) | (nu & image);
}

const GeneratorFn& GeneratorFn::first() const {
  if (!factors_) throw Error("generator is not a serial composition");
  return factors_->first;
}

const GeneratorFn& GeneratorFn::second() const {
  if (!factors_) throw Error("generator is not a serial composition");
  return factors_->second;
}

bool operator==(const GeneratorFn& a, const GeneratorFn& b) {
  if (a.state_width_ != b.state_width_ || a.input_width_ != b.input_width_ ||
      a.table_ != b.table_ || a.is_serial() != b.is_serial()) {
    return false;
  }
  if (!a.is_serial()) return true;
  return a.factors_->first == b.factors_->first && a.factors_->second == b.factors_->second;
}

GeneratorFn compose_serial(const GeneratorFn& upstream, const GeneratorFn& downstream) {
  const std::size_t n = upstream.state_width();
  const std::size_t m = upstream.input_width();
  const std::size_t p = downstream.state_width();
  if (downstream.input_width() != n) {
    throw DimensionError("serial composition: downstream input width " +
                         std::to_string(downstream.input_width()) +
                         " does not match upstream state width " + std::to_string(n));
  }
  check_widths(n + p, m);
  GeneratorFn composed = GeneratorFn::from_function(
      n + p, m, [&](const BoolVec& state, const BoolVec& lambda) {
        BoolVec x = upstream.eval(state.head(n), lambda);
        return concat(x, downstream.eval(state.tail(p), x));
      });
  composed.factors_ = std::make_shared<const GeneratorFn::Factors>(
      GeneratorFn::Factors{upstream, downstream});
  return composed;
}

}  // namespace regsys
