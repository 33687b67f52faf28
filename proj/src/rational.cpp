#include "regsys/rational.hpp"

#include <charconv>
#include <numeric>
#include <ostream>

#include "regsys/error.hpp"

namespace regsys {
namespace {

__extension__ typedef __int128 Wide;

std::int64_t narrow(Wide v) {
  if (v > INT64_MAX || v < INT64_MIN) {
    throw OverflowError("rational arithmetic overflow");
  }
  return static_cast<std::int64_t>(v);
}

Wide wide_gcd(Wide a, Wide b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    Wide t = a % b;
    a = b;
    b = t;
  }
  return a;
}

}  // namespace

struct RationalAccess {
  static Rational reduced(std::int64_t num, std::int64_t den) {
    return Rational(Rational::Normalized{}, num, den);
  }
};

namespace {

Rational make_normalized(Wide num, Wide den) {
  if (den == 0) throw Error("rational with zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  Wide g = wide_gcd(num, den);
  if (g > 1) {
    num /= g;
    den /= g;
  }
  return RationalAccess::reduced(narrow(num), narrow(den));
}

std::int64_t parse_int(std::string_view s, std::string_view whole) {
  std::int64_t v = 0;
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc() || ptr != s.data() + s.size()) {
    throw ParseError("invalid rational literal '" + std::string(whole) + "'");
  }
  return v;
}

}  // namespace

Rational::Rational(std::int64_t num) : num_(num), den_(1) {}

Rational::Rational(std::int64_t num, std::int64_t den) {
  *this = make_normalized(num, den);
}

Rational Rational::operator-() const { return make_normalized(-Wide(num_), den_); }

Rational& Rational::operator+=(const Rational& o) {
  *this = make_normalized(Wide(num_) * o.den_ + Wide(o.num_) * den_, Wide(den_) * o.den_);
  return *this;
}

Rational& Rational::operator-=(const Rational& o) {
  *this = make_normalized(Wide(num_) * o.den_ - Wide(o.num_) * den_, Wide(den_) * o.den_);
  return *this;
}

Rational& Rational::operator*=(const Rational& o) {
  *this = make_normalized(Wide(num_) * o.num_, Wide(den_) * o.den_);
  return *this;
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.num_ == 0) throw Error("rational division by zero");
  *this = make_normalized(Wide(num_) * o.den_, Wide(den_) * o.num_);
  return *this;
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
  return Wide(a.num_) * b.den_ <=> Wide(b.num_) * a.den_;
}

std::string Rational::str() const {
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

Rational Rational::parse(std::string_view text) {
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_int(text, text));
  std::int64_t n = parse_int(text.substr(0, slash), text);
  std::int64_t d = parse_int(text.substr(slash + 1), text);
  if (d == 0) throw ParseError("rational literal with zero denominator '" + std::string(text) + "'");
  return Rational(n, d);
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

std::int64_t floor_div(const Rational& a, const Rational& b) {
  if (!b.is_positive()) throw Error("floor_div requires a positive divisor");
  Wide n = Wide(a.num()) * b.den();
  Wide d = Wide(a.den()) * b.num();
  Wide q = n / d;
  if ((n % d != 0) && (n < 0)) --q;
  return narrow(q);
}

Rational floor_mod(const Rational& a, const Rational& b) {
  return a - Rational(floor_div(a, b)) * b;
}

Rational lcm(const Rational& a, const Rational& b) {
  if (!a.is_positive() || !b.is_positive()) throw Error("lcm requires positive rationals");
  Wide n = Wide(a.num() / std::gcd(a.num(), b.num())) * b.num();
  return make_normalized(n, std::gcd(a.den(), b.den()));
}

}  // namespace regsys
