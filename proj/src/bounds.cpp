#include "bincollatz/analysis.hpp"
#include "bincollatz/errors.hpp"

namespace bincollatz {

namespace {

// eps_k = numerator / 2^exponent, with the denominator a power of two.
struct DyadicBound {
  BigInt numerator;
  unsigned long exponent;
};

DyadicBound epsilon_parts(std::size_t k, std::size_t ell) {
  if (k == 0 || ell == 0) throw DomainError("epsilon_bound: k and ell must be positive");
  const unsigned long n = k / 2;
  BigInt p9, p8;
  mpz_ui_pow_ui(p9.get_mpz_t(), 9, n);
  mpz_ui_pow_ui(p8.get_mpz_t(), 8, n);
  if (k % 2 == 0) {
    // 7 (9^n - 8^n) / (8^n 2^ell)
    return {7 * (p9 - p8), 3 * n + ell};
  }
  // (15 (9^n - 8^n) + 8^n) / (2 8^n 2^ell)
  return {15 * (p9 - p8) + p8, 3 * n + ell + 1};
}

}  // namespace

ExactRational epsilon_bound(std::size_t k, std::size_t ell) {
  const auto parts = epsilon_parts(k, ell);
  BigInt den;
  mpz_setbit(den.get_mpz_t(), parts.exponent);
  return {parts.numerator, den};
}

int kstar_margin_sign(std::size_t k, std::size_t ell) {
  const auto eps = epsilon_parts(k, ell);
  BigInt three_k;
  mpz_ui_pow_ui(three_k.get_mpz_t(), 3, k);
  const auto m = bit_length(three_k) - 1;
  // 1/2 + N/2^e - 2^m/3^k, scaled by 2^(e+1) 3^k:
  //   (2^e + 2N) 3^k - 2^(m+e+1)
  BigInt lhs;
  mpz_setbit(lhs.get_mpz_t(), eps.exponent);
  lhs += 2 * eps.numerator;
  lhs *= three_k;
  BigInt rhs;
  mpz_setbit(rhs.get_mpz_t(), m + eps.exponent + 1);
  return cmp(lhs, rhs) < 0 ? -1 : (lhs == rhs ? 0 : 1);
}

KStarReport kstar_scan(std::size_t ell, std::size_t k_max, bool keep_margins) {
  if (ell == 0 || k_max == 0) throw DomainError("kstar_scan: ell and k_max must be positive");
  KStarReport report;
  report.ell = ell;
  report.k_max = k_max;
  const ExactRational half(BigInt(1), BigInt(2));
  for (std::size_t k = 1; k <= k_max; ++k) {
    if (keep_margins) report.margins.push_back(half + epsilon_bound(k, ell) - critical_point(k));
    if (kstar_margin_sign(k, ell) > 0) {
      report.k_star = k;
      report.c_at_kstar = critical_point(k);
      report.epsilon_at_kstar = epsilon_bound(k, ell);
      break;
    }
  }
  return report;
}

}  // namespace bincollatz
