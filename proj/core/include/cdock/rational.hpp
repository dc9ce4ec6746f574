#pragma once

#include <compare>
#include <cstdint>
#include <numeric>
#include <ostream>
#include <string>

#include "cdock/error.hpp"

namespace cdock {

__extension__ using Int128 = __int128;

// Exact non-negative-denominator fraction, always stored in lowest terms.
// Used for ratio certificates so that no floating point enters a comparison.
class Rational {
 public:
  constexpr Rational() = default;

  Rational(std::int64_t num, std::int64_t den) {
    if (den == 0) throw PreconditionError("rational with zero denominator");
    if (den < 0) {
      num = -num;
      den = -den;
    }
    const std::int64_t g = std::gcd(num, den);
    num_ = num / g;
    den_ = den / g;
  }

  constexpr std::int64_t num() const { return num_; }
  constexpr std::int64_t den() const { return den_; }

  friend bool operator==(const Rational&, const Rational&) = default;

  friend std::strong_ordering operator<=>(const Rational& x, const Rational& y) {
    const Int128 lhs = static_cast<Int128>(x.num_) * y.den_;
    const Int128 rhs = static_cast<Int128>(y.num_) * x.den_;
    if (lhs < rhs) return std::strong_ordering::less;
    if (lhs > rhs) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

  std::string str() const {
    return std::to_string(num_) + "/" + std::to_string(den_);
  }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.str();
  }

 private:
  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

}  // namespace cdock
