#include "bincollatz/exact.hpp"

#include <algorithm>

#include "bincollatz/errors.hpp"

namespace bincollatz {

std::size_t bit_length(const BigInt& n) {
  if (sgn(n) == 0) return 0;
  return mpz_sizeinbase(n.get_mpz_t(), 2);
}

std::size_t two_adic_valuation(const BigInt& n) {
  if (sgn(n) <= 0) throw DomainError("two_adic_valuation: argument must be positive");
  return mpz_scan1(n.get_mpz_t(), 0);
}

BigInt parse_decimal(std::string_view text) {
  if (text.empty() || !std::all_of(text.begin(), text.end(), [](char c) { return c >= '0' && c <= '9'; })) {
    throw MalformedInput("not a decimal integer: '" + std::string(text) + "'");
  }
  return BigInt(std::string(text), 10);
}

namespace {

const BigInt& nonzero(const BigInt& den) {
  if (sgn(den) == 0) throw DomainError("ExactRational: zero denominator");
  return den;
}

}  // namespace

ExactRational::ExactRational(const BigInt& num, const BigInt& den) : value_(num, nonzero(den)) {
  value_.canonicalize();
}

ExactRational::ExactRational(mpq_class value) : value_(std::move(value)) { value_.canonicalize(); }

ExactRational ExactRational::pow(unsigned long exponent) const {
  mpq_class out;
  mpz_pow_ui(out.get_num_mpz_t(), value_.get_num_mpz_t(), exponent);
  mpz_pow_ui(out.get_den_mpz_t(), value_.get_den_mpz_t(), exponent);
  return ExactRational(std::move(out));
}

ExactRational operator+(const ExactRational& a, const ExactRational& b) {
  return ExactRational(mpq_class(a.value_ + b.value_));
}
ExactRational operator-(const ExactRational& a, const ExactRational& b) {
  return ExactRational(mpq_class(a.value_ - b.value_));
}
ExactRational operator*(const ExactRational& a, const ExactRational& b) {
  return ExactRational(mpq_class(a.value_ * b.value_));
}
ExactRational operator/(const ExactRational& a, const ExactRational& b) {
  if (sgn(b.value_) == 0) throw DomainError("ExactRational: division by zero");
  return ExactRational(mpq_class(a.value_ / b.value_));
}

ExactRational pow2(long exponent) {
  BigInt p;
  mpz_ui_pow_ui(p.get_mpz_t(), 2, static_cast<unsigned long>(exponent < 0 ? -exponent : exponent));
  return exponent < 0 ? ExactRational(BigInt(1), p) : ExactRational(p, BigInt(1));
}

BinaryFraction BinaryFraction::from_bits(std::string_view bits) {
  if (bits.empty()) throw MalformedInput("empty bitstring");
  for (char c : bits) {
    if (c != '0' && c != '1') throw MalformedInput("bitstring contains '" + std::string(1, c) + "'");
  }
  const auto last_one = bits.find_last_of('1');
  if (last_one == std::string_view::npos) throw DomainError("all-zero bitstring is not in [1/2, 1)");
  if (bits.front() != '1') throw DomainError("bitstring must start with '1' to lie in [1/2, 1)");
  const auto trimmed = bits.substr(0, last_one + 1);
  return unchecked(BigInt(std::string(trimmed), 2), trimmed.size());
}

BinaryFraction BinaryFraction::from_parts(BigInt numerator, std::size_t length) {
  if (length == 0 || sgn(numerator) <= 0 || mpz_even_p(numerator.get_mpz_t()) ||
      bit_length(numerator) != length) {
    throw DomainError("BinaryFraction: numerator must be odd with exactly `length` bits");
  }
  return unchecked(std::move(numerator), length);
}

std::string BinaryFraction::to_bits() const { return numerator_.get_str(2); }

ExactRational BinaryFraction::value() const {
  BigInt den;
  mpz_ui_pow_ui(den.get_mpz_t(), 2, length_);
  return {numerator_, den};
}

std::strong_ordering compare(const BinaryFraction& y, const ExactRational& r) {
  // n/2^l vs p/q  <=>  n*q vs p*2^l
  BigInt lhs = y.numerator() * r.den();
  BigInt rhs = r.num();
  mpz_mul_2exp(rhs.get_mpz_t(), rhs.get_mpz_t(), y.length());
  return cmp(lhs, rhs) <=> 0;
}

std::string to_decimal(const ExactRational& r, std::size_t digits) {
  if (r < ExactRational(0) || !(r < ExactRational(10))) {
    throw DomainError("to_decimal: value must lie in [0, 10)");
  }
  if (digits == 0) throw DomainError("to_decimal: need at least one digit");
  BigInt scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, digits);
  BigInt scaled = r.num() * scale;
  mpz_fdiv_q(scaled.get_mpz_t(), scaled.get_mpz_t(), r.den().get_mpz_t());
  BigInt whole, frac;
  mpz_fdiv_qr(whole.get_mpz_t(), frac.get_mpz_t(), scaled.get_mpz_t(), scale.get_mpz_t());
  std::string tail = frac.get_str(10);
  return whole.get_str(10) + "." + std::string(digits - tail.size(), '0') + tail;
}

}  // namespace bincollatz
