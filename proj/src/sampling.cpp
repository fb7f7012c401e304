#include "bincollatz/sampling.hpp"

#include "bincollatz/errors.hpp"

namespace bincollatz {

BinaryFraction sample_fraction(std::size_t ell, SampleStream& stream) {
  if (ell < 3) throw DomainError("sample_fraction: length must be at least 3");
  BigInt n;
  mpz_setbit(n.get_mpz_t(), ell - 1);
  mpz_setbit(n.get_mpz_t(), 0);
  const std::size_t middle = ell - 2;
  std::uint64_t word = 0;
  for (std::size_t i = 0; i < middle; ++i) {
    if (i % 64 == 0) word = stream();
    // middle bit i is fractional digit i+2, i.e. numerator bit ell-2-i
    if ((word >> (i % 64)) & 1U) mpz_setbit(n.get_mpz_t(), ell - 2 - i);
  }
  return BinaryFraction::unchecked(std::move(n), ell);
}

}  // namespace bincollatz
