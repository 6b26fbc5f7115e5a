#include "lcsparse/fraction.hpp"

#include <limits>
#include <numeric>
#include <ostream>
#include <stdexcept>

namespace lcsparse {

namespace {

using u128 = unsigned __int128;

std::uint64_t narrow(u128 v) {
  if (v > std::numeric_limits<std::uint64_t>::max()) throw std::overflow_error("fraction overflow");
  return static_cast<std::uint64_t>(v);
}

Fraction reduce(u128 num, u128 den) {
  u128 a = num, b = den;
  while (b != 0) {
    const u128 r = a % b;
    a = b;
    b = r;
  }
  if (a > 1) {
    num /= a;
    den /= a;
  }
  return Fraction(narrow(num), narrow(den));
}

}  // namespace

Fraction::Fraction(std::uint64_t num, std::uint64_t den) {
  if (den == 0) throw std::invalid_argument("fraction with zero denominator");
  const std::uint64_t g = std::gcd(num, den);
  num_ = num / g;
  den_ = den / g;
}

std::string Fraction::str() const { return std::to_string(num_) + "/" + std::to_string(den_); }

Fraction Fraction::operator+(const Fraction& rhs) const {
  const std::uint64_t g = std::gcd(den_, rhs.den_);
  const u128 lhs_scale = rhs.den_ / g;
  const u128 rhs_scale = den_ / g;
  return reduce(u128(num_) * lhs_scale + u128(rhs.num_) * rhs_scale, u128(den_) * lhs_scale);
}

Fraction Fraction::operator*(const Fraction& rhs) const {
  return reduce(u128(num_) * rhs.num_, u128(den_) * rhs.den_);
}

std::strong_ordering Fraction::operator<=>(const Fraction& rhs) const {
  return u128(num_) * rhs.den_ <=> u128(rhs.num_) * den_;
}

std::ostream& operator<<(std::ostream& os, const Fraction& f) { return os << f.num() << '/' << f.den(); }

}  // namespace lcsparse
