#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

namespace regsys {

// Exact rational time point. Always normalized: gcd(|num|, den) == 1 and
// den >= 1. Arithmetic is checked and throws OverflowError instead of
// wrapping.
class Rational {
 public:
  constexpr Rational() = default;
  Rational(std::int64_t num);  // NOLINT(google-explicit-constructor)
  Rational(std::int64_t num, std::int64_t den);

  std::int64_t num() const { return num_; }
  std::int64_t den() const { return den_; }

  bool is_integer() const { return den_ == 1; }
  bool is_positive() const { return num_ > 0; }
  bool is_negative() const { return num_ < 0; }
  bool is_zero() const { return num_ == 0; }

  Rational operator-() const;
  Rational& operator+=(const Rational& o);
  Rational& operator-=(const Rational& o);
  Rational& operator*=(const Rational& o);
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational&, const Rational&) = default;
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

  // "p/q", or "p" when the value is an integer.
  std::string str() const;
  static Rational parse(std::string_view text);

 private:
  struct Normalized {};
  constexpr Rational(Normalized, std::int64_t num, std::int64_t den) : num_(num), den_(den) {}
  friend struct RationalAccess;

  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

// floor(a / b) for b > 0.
std::int64_t floor_div(const Rational& a, const Rational& b);

// a - floor(a / b) * b, always in [0, b) for b > 0.
Rational floor_mod(const Rational& a, const Rational& b);

// Smallest positive rational that both a and b divide an integral number of
// times: lcm(p, r) / gcd(q, s) for a = p/q, b = r/s. Both must be positive.
Rational lcm(const Rational& a, const Rational& b);

using RatTime = Rational;

}  // namespace regsys
