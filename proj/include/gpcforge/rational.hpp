#pragma once

#include <compare>
#include <cstdint>
#include <numeric>
#include <ostream>
#include <string>

namespace gpcforge {

/// Exact rational number with canonical form (gcd-reduced, positive
/// denominator). Counter metrics are tiny fractions like 7/4 or 1/32 that
/// must compare exactly, so no floating point anywhere.
struct Rat {
  std::int64_t num = 0;
  std::int64_t den = 1;

  constexpr Rat() = default;
  constexpr Rat(std::int64_t n) : num(n), den(1) {}
  constexpr Rat(std::int64_t n, std::int64_t d) : num(n), den(d) { reduce(); }

  constexpr void reduce() {
    if (den < 0) {
      num = -num;
      den = -den;
    }
    const std::int64_t g = std::gcd(num < 0 ? -num : num, den);
    if (g > 1) {
      num /= g;
      den /= g;
    }
    if (num == 0) den = 1;
  }

  friend constexpr Rat operator+(Rat a, Rat b) {
    return Rat{a.num * b.den + b.num * a.den, a.den * b.den};
  }
  friend constexpr Rat operator-(Rat a, Rat b) {
    return Rat{a.num * b.den - b.num * a.den, a.den * b.den};
  }
  friend constexpr Rat operator*(Rat a, Rat b) {
    return Rat{a.num * b.num, a.den * b.den};
  }
  friend constexpr Rat operator/(Rat a, Rat b) {
    return Rat{a.num * b.den, a.den * b.num};
  }

  friend constexpr bool operator==(const Rat& a, const Rat& b) {
    return a.num == b.num && a.den == b.den;
  }
  friend constexpr std::strong_ordering operator<=>(const Rat& a, const Rat& b) {
    return a.num * b.den <=> b.num * a.den;
  }

  /// Canonical "num/den" text, e.g. "7/4", "0/1", "1/1".
  std::string str() const {
    return std::to_string(num) + "/" + std::to_string(den);
  }

  friend std::ostream& operator<<(std::ostream& os, const Rat& r) {
    return os << r.str();
  }
};

}  // namespace gpcforge
