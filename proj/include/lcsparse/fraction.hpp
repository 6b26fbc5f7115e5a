#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>

namespace lcsparse {

/// Non-negative exact rational, always stored in lowest terms with den > 0.
/// Arithmetic throws std::overflow_error rather than wrapping.
class Fraction {
 public:
  constexpr Fraction() = default;
  Fraction(std::uint64_t num, std::uint64_t den);

  std::uint64_t num() const noexcept { return num_; }
  std::uint64_t den() const noexcept { return den_; }
  double to_double() const noexcept { return static_cast<double>(num_) / static_cast<double>(den_); }
  std::string str() const;

  Fraction operator+(const Fraction& rhs) const;
  Fraction operator*(const Fraction& rhs) const;
  Fraction& operator+=(const Fraction& rhs) { return *this = *this + rhs; }

  bool operator==(const Fraction&) const = default;
  std::strong_ordering operator<=>(const Fraction& rhs) const;

 private:
  std::uint64_t num_ = 0;
  std::uint64_t den_ = 1;
};

std::ostream& operator<<(std::ostream& os, const Fraction& f);

}  // namespace lcsparse
