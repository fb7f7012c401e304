#pragma once

#include <compare>
#include <cstddef>
#include <string>
#include <string_view>
#include <utility>

#include <gmpxx.h>

namespace bincollatz {

using BigInt = mpz_class;

/// Number of binary digits of a positive integer.
std::size_t bit_length(const BigInt& n);

/// Largest v with 2^v | n. Requires n >= 1.
std::size_t two_adic_valuation(const BigInt& n);

/// Parses a nonnegative decimal integer of any size.
BigInt parse_decimal(std::string_view text);

/// Reduced fraction num/den with den > 0. Arithmetic is exact.
class ExactRational {
 public:
  ExactRational() = default;
  ExactRational(long num) : value_(num) {}  // NOLINT(google-explicit-constructor)
  ExactRational(const BigInt& num, const BigInt& den);
  explicit ExactRational(mpq_class value);

  BigInt num() const { return value_.get_num(); }
  BigInt den() const { return value_.get_den(); }
  const mpq_class& raw() const { return value_; }

  ExactRational pow(unsigned long exponent) const;

  friend ExactRational operator+(const ExactRational& a, const ExactRational& b);
  friend ExactRational operator-(const ExactRational& a, const ExactRational& b);
  friend ExactRational operator*(const ExactRational& a, const ExactRational& b);
  friend ExactRational operator/(const ExactRational& a, const ExactRational& b);

  friend bool operator==(const ExactRational& a, const ExactRational& b) {
    return a.value_ == b.value_;
  }
  friend std::strong_ordering operator<=>(const ExactRational& a, const ExactRational& b) {
    return cmp(a.value_, b.value_) <=> 0;
  }

  std::string to_string() const { return value_.get_str(); }

 private:
  mpq_class value_;
};

/// A dyadic rational n/2^l in [1/2, 1) with n odd and 2^(l-1) <= n < 2^l.
///
/// The text form is the l fractional digits with no "0." prefix, so the
/// ground state 1/2 is "1". Values are immutable once built.
class BinaryFraction {
 public:
  /// The ground state 1/2.
  BinaryFraction() : numerator_(1), length_(1) {}

  /// Parses fractional digits, dropping trailing zeros.
  static BinaryFraction from_bits(std::string_view bits);

  /// Validates the normalization invariants.
  static BinaryFraction from_parts(BigInt numerator, std::size_t length);

  /// Builds y = n / 2^length for odd n without re-checking the range; used on
  /// hot paths where the caller already proved the invariant.
  static BinaryFraction unchecked(BigInt numerator, std::size_t length) {
    BinaryFraction y;
    y.numerator_ = std::move(numerator);
    y.length_ = length;
    return y;
  }

  const BigInt& numerator() const { return numerator_; }
  std::size_t length() const { return length_; }
  bool is_ground_state() const { return length_ == 1; }

  std::string to_bits() const;
  ExactRational value() const;

  friend bool operator==(const BinaryFraction& a, const BinaryFraction& b) {
    return a.length_ == b.length_ && a.numerator_ == b.numerator_;
  }

 private:
  BigInt numerator_;
  std::size_t length_;
};

/// Exact ordering of n/2^l against r by cross-multiplication.
std::strong_ordering compare(const BinaryFraction& y, const ExactRational& r);

/// Truncated decimal expansion with exactly `digits` fractional digits.
/// Requires 0 <= r < 10.
std::string to_decimal(const ExactRational& r, std::size_t digits);

/// 2^e as an exact rational; negative exponents give 1/2^|e|.
ExactRational pow2(long exponent);

}  // namespace bincollatz
