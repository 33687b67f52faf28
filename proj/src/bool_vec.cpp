#include "regsys/bool_vec.hpp"

#include <ostream>

#include "regsys/error.hpp"

namespace regsys {
namespace {

std::uint64_t mask_of(std::size_t width) {
  return width >= 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << width) - 1);
}

void check_width(std::size_t width) {
  if (width == 0 || width > BoolVec::kMaxWidth) {
    throw DimensionError("boolean vector width must be in 1..64, got " + std::to_string(width));
  }
}

void check_same(const BoolVec& a, const BoolVec& b) {
  if (a.width() != b.width()) {
    throw DimensionError("boolean vector widths differ: " + std::to_string(a.width()) + " vs " +
                         std::to_string(b.width()));
  }
}

}  // namespace

BoolVec::BoolVec(std::size_t width, std::uint64_t code) : width_(width), code_(code) {
  check_width(width);
  if ((code & ~mask_of(width)) != 0) {
    throw DimensionError("code does not fit in " + std::to_string(width) + " bits");
  }
}

BoolVec BoolVec::ones(std::size_t width) {
  check_width(width);
  return BoolVec(width, mask_of(width));
}

BoolVec BoolVec::parse(std::string_view bits) {
  if (bits.empty() || bits.size() > kMaxWidth) {
    throw ParseError("bit string must have 1..64 characters, got '" + std::string(bits) + "'");
  }
  std::uint64_t code = 0;
  for (char c : bits) {
    if (c != '0' && c != '1') throw ParseError("invalid bit string '" + std::string(bits) + "'");
    code = (code << 1) | static_cast<std::uint64_t>(c == '1');
  }
  return BoolVec(bits.size(), code);
}

BoolVec BoolVec::with(std::size_t i, bool value) const {
  std::uint64_t bit = std::uint64_t{1} << (width_ - 1 - i);
  return BoolVec(width_, value ? (code_ | bit) : (code_ & ~bit));
}

BoolVec BoolVec::operator~() const { return BoolVec(width_, ~code_ & mask_of(width_)); }

BoolVec BoolVec::operator&(const BoolVec& o) const {
  check_same(*this, o);
  return BoolVec(width_, code_ & o.code_);
}

BoolVec BoolVec::operator|(const BoolVec& o) const {
  check_same(*this, o);
  return BoolVec(width_, code_ | o.code_);
}

BoolVec BoolVec::operator^(const BoolVec& o) const {
  check_same(*this, o);
  return BoolVec(width_, code_ ^ o.code_);
}

BoolVec BoolVec::head(std::size_t n) const {
  if (n == 0 || n > width_) throw DimensionError("head width out of range");
  return BoolVec(n, code_ >> (width_ - n));
}

BoolVec BoolVec::tail(std::size_t n) const {
  if (n == 0 || n > width_) throw DimensionError("tail width out of range");
  return BoolVec(n, code_ & mask_of(n));
}

std::string BoolVec::str() const {
  std::string s(width_, '0');
  for (std::size_t i = 0; i < width_; ++i) {
    if ((*this)[i]) s[i] = '1';
  }
  return s;
}

BoolVec concat(const BoolVec& a, const BoolVec& b) {
  if (a.width() + b.width() > BoolVec::kMaxWidth) {
    throw DimensionError("concatenated width exceeds 64");
  }
  return BoolVec(a.width() + b.width(), (a.code() << b.width()) | b.code());
}

std::ostream& operator<<(std::ostream& os, const BoolVec& v) { return os << v.str(); }

void require_width(const BoolVec& v, std::size_t width, std::string_view what) {
  if (v.width() != width) {
    throw DimensionError(std::string(what) + ": expected width " + std::to_string(width) + ", got " +
                         std::to_string(v.width()));
  }
}

}  // namespace regsys
