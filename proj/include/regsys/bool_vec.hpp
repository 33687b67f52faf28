#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

namespace regsys {

// A point of B^n. Coordinate 1 is the most significant bit of the packed
// integer code, so the textual form "μ1μ2...μn" reads the same as the code in
// binary. Widths are limited to 1..64.
class BoolVec {
 public:
  static constexpr std::size_t kMaxWidth = 64;

  BoolVec() = default;
  BoolVec(std::size_t width, std::uint64_t code);

  static BoolVec zeros(std::size_t width) { return BoolVec(width, 0); }
  static BoolVec ones(std::size_t width);
  static BoolVec parse(std::string_view bits);

  std::size_t width() const { return width_; }
  std::uint64_t code() const { return code_; }

  // 0-based coordinate access; index 0 is coordinate 1 in the textual form.
  bool operator[](std::size_t i) const { return (code_ >> (width_ - 1 - i)) & 1U; }
  BoolVec with(std::size_t i, bool value) const;

  bool is_zero() const { return code_ == 0; }

  BoolVec operator~() const;
  BoolVec operator&(const BoolVec& o) const;
  BoolVec operator|(const BoolVec& o) const;
  BoolVec operator^(const BoolVec& o) const;

  // First `n` coordinates / last `n` coordinates.
  BoolVec head(std::size_t n) const;
  BoolVec tail(std::size_t n) const;

  std::string str() const;

  friend bool operator==(const BoolVec&, const BoolVec&) = default;
  friend auto operator<=>(const BoolVec&, const BoolVec&) = default;

 private:
  std::size_t width_ = 0;
  std::uint64_t code_ = 0;
};

// The identification B^(n+p) = B^n x B^p: a's coordinates first.
BoolVec concat(const BoolVec& a, const BoolVec& b);

std::ostream& operator<<(std::ostream& os, const BoolVec& v);

void require_width(const BoolVec& v, std::size_t width, std::string_view what);

}  // namespace regsys
