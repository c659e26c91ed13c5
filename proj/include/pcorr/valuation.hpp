#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <ostream>
#include <string>

namespace pcorr {

using BigInt = mpz_class;
using BigRat = mpq_class;

/// A prime number, validated on construction.
///
/// Everything that takes a prime takes this type, so the primality check
/// happens exactly once at the boundary.
class Prime {
 public:
  /// Throws std::invalid_argument when `p < 2` or `p` is composite.
  explicit Prime(unsigned long p);

  unsigned long value() const noexcept { return value_; }
  BigInt big() const { return BigInt(value_); }

  friend bool operator==(Prime, Prime) = default;

 private:
  unsigned long value_;
};

/// p-adic valuation: a finite integer or infinity (the valuation of zero).
class Valuation {
 public:
  constexpr Valuation(std::int64_t v) noexcept : kind_(Kind::Finite), value_(v) {}  // NOLINT

  static constexpr Valuation infinity() noexcept { return Valuation(Kind::Infinite); }

  constexpr bool is_finite() const noexcept { return kind_ == Kind::Finite; }
  constexpr bool is_infinite() const noexcept { return kind_ == Kind::Infinite; }

  /// Throws std::logic_error on infinity.
  std::int64_t value() const;

  std::string to_string() const;

  friend constexpr bool operator==(const Valuation& a, const Valuation& b) noexcept {
    if (a.kind_ != b.kind_) return false;
    return a.is_infinite() || a.value_ == b.value_;
  }
  friend constexpr std::strong_ordering operator<=>(const Valuation& a,
                                                    const Valuation& b) noexcept {
    if (a.is_infinite() || b.is_infinite()) {
      return static_cast<int>(a.is_infinite()) <=> static_cast<int>(b.is_infinite());
    }
    return a.value_ <=> b.value_;
  }

 private:
  enum class Kind : std::uint8_t { Finite, Infinite };
  constexpr explicit Valuation(Kind k) noexcept : kind_(k), value_(0) {}

  Kind kind_;
  std::int64_t value_;
};

std::ostream& operator<<(std::ostream& os, const Valuation& v);

/// Largest k with p^k | a; infinity for a = 0.
Valuation val_p(const BigInt& a, Prime p);

/// val_p(num) - val_p(den); infinity for q = 0. May be negative.
Valuation val_p_rat(const BigRat& q, Prime p);

/// Finite valuation of a nonzero integer; throws std::invalid_argument on zero.
std::int64_t val_p_finite(const BigInt& a, Prime p);

/// `a rem p^m`: the unique representative in [0, p^m).
BigInt rem_pm(const BigInt& a, const BigInt& modulus);

BigInt prime_power(Prime p, unsigned long m);

/// Renders a rational as "num/den" (always with an explicit denominator).
std::string rat_to_string(const BigRat& q);

}  // namespace pcorr
