#include "bincollatz/maps.hpp"

#include <string>

#include "bincollatz/errors.hpp"

namespace bincollatz {

namespace {

const ExactRational& half() {
  static const ExactRational value(BigInt(1), BigInt(2));
  return value;
}

const ExactRational& two_thirds() {
  static const ExactRational value(BigInt(2), BigInt(3));
  return value;
}

void require_unit_interval(const ExactRational& y, const char* op) {
  if (y < half() || !(y < ExactRational(1))) {
    throw DomainError(std::string(op) + ": argument must lie in [1/2, 1)");
  }
}

BigInt pow_ui(unsigned long base, unsigned long exponent) {
  BigInt out;
  mpz_ui_pow_ui(out.get_mpz_t(), base, exponent);
  return out;
}

}  // namespace

std::string_view to_string(MapBranch branch) {
  switch (branch) {
    case MapBranch::Predecessor: return "predecessor";
    case MapBranch::Low: return "low";
    case MapBranch::High: return "high";
  }
  return "?";
}

std::string_view to_string(FamilyTag tag) {
  switch (tag) {
    case FamilyTag::Alpha: return "alpha";
    case FamilyTag::Beta: return "beta";
    case FamilyTag::Gamma: return "gamma";
  }
  return "?";
}

BigInt collatz_step(const BigInt& x) {
  if (sgn(x) <= 0) throw DomainError("collatz_step: argument must be positive");
  if (mpz_odd_p(x.get_mpz_t())) return 3 * x + 1;
  BigInt out;
  mpz_fdiv_q_2exp(out.get_mpz_t(), x.get_mpz_t(), 1);
  return out;
}

BigInt reduced_step(const BigInt& x) {
  if (sgn(x) <= 0 || mpz_even_p(x.get_mpz_t())) {
    throw DomainError("reduced_step: argument must be odd and positive");
  }
  BigInt out = 3 * x + 1;
  mpz_fdiv_q_2exp(out.get_mpz_t(), out.get_mpz_t(), mpz_scan1(out.get_mpz_t(), 0));
  return out;
}

BinaryFraction embed(const BigInt& x) {
  if (sgn(x) <= 0) throw DomainError("embed: argument must be positive");
  BigInt odd;
  mpz_fdiv_q_2exp(odd.get_mpz_t(), x.get_mpz_t(), mpz_scan1(x.get_mpz_t(), 0));
  const auto length = bit_length(odd);
  return BinaryFraction::unchecked(std::move(odd), length);
}

bool is_predecessor(const BinaryFraction& y) {
  if (y.length() % 2 == 0) return false;
  BigInt t = 3 * y.numerator() + 1;
  // t must be exactly 2^(l+1)
  return mpz_scan1(t.get_mpz_t(), 0) == y.length() + 1 && bit_length(t) == y.length() + 2;
}

MapBranch classify_branch(const BinaryFraction& y) {
  if (is_predecessor(y)) return MapBranch::Predecessor;
  BigInt limit;
  mpz_setbit(limit.get_mpz_t(), y.length() + 1);
  return cmp(3 * y.numerator(), limit) < 0 ? MapBranch::Low : MapBranch::High;
}

BinaryFraction binary_step(const BinaryFraction& y, MapBranch& branch) {
  BigInt t = 3 * y.numerator() + 1;
  const auto v = mpz_scan1(t.get_mpz_t(), 0);
  const auto len = bit_length(t);
  // 3n+1 == 2^(l+1) exactly when y is a predecessor.
  if (v == y.length() + 1 && len == y.length() + 2) {
    branch = MapBranch::Predecessor;
    return BinaryFraction();
  }
  // Low branch <=> 3n < 2^(l+1) <=> 3n+1 has at most l+1 bits.
  branch = len <= y.length() + 1 ? MapBranch::Low : MapBranch::High;
  const std::size_t denominator_exp = y.length() + (branch == MapBranch::Low ? 1 : 2);
  mpz_fdiv_q_2exp(t.get_mpz_t(), t.get_mpz_t(), v);
  return BinaryFraction::unchecked(std::move(t), denominator_exp - v);
}

BinaryFraction binary_step(const BinaryFraction& y) {
  MapBranch ignored{};
  return binary_step(y, ignored);
}

ExactRational circle_step(const ExactRational& y) {
  require_unit_interval(y, "circle_step");
  if (y < two_thirds()) return y * ExactRational(BigInt(3), BigInt(2));
  return y * ExactRational(BigInt(3), BigInt(4));
}

std::size_t mu(std::size_t k) {
  if (k == 0) throw DomainError("mu: k must be positive");
  return bit_length(pow_ui(3, k)) - 1;
}

ExactRational critical_point(std::size_t k) {
  if (k == 0) throw DomainError("critical_point: k must be positive");
  BigInt three_k = pow_ui(3, k);
  return {pow_ui(2, bit_length(three_k) - 1), three_k};
}

ExactRational circle_iterate(const ExactRational& y, std::size_t k) {
  if (k == 0) throw DomainError("circle_iterate: k must be positive");
  require_unit_interval(y, "circle_iterate");
  BigInt three_k = pow_ui(3, k);
  const auto m = bit_length(three_k) - 1;
  const ExactRational c_k(pow_ui(2, m), three_k);
  const auto shift = y < c_k ? m : m + 1;
  return y * ExactRational(three_k, pow_ui(2, shift));
}

ExactRational circle_preimage(const ExactRational& y) {
  require_unit_interval(y, "circle_preimage");
  if (y < ExactRational(BigInt(3), BigInt(4))) return y * ExactRational(BigInt(4), BigInt(3));
  return y * ExactRational(BigInt(2), BigInt(3));
}

BinaryFraction family_member(FamilyKind kind) {
  std::string bits;
  bits.reserve(6 * kind.repetitions + 3);
  for (std::size_t i = 0; i < kind.repetitions; ++i) bits += "111000";
  switch (kind.tag) {
    case FamilyTag::Alpha: bits += "1"; break;
    case FamilyTag::Beta: bits += "11"; break;
    case FamilyTag::Gamma: bits += "111"; break;
  }
  return BinaryFraction::from_bits(bits);
}

BinaryFraction predecessor(std::size_t n) {
  std::string bits = "1";
  for (std::size_t i = 0; i < n; ++i) bits += "01";
  return BinaryFraction::from_bits(bits);
}

}  // namespace bincollatz
