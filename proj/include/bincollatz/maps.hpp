#pragma once

#include <cstddef>
#include <string_view>

#include "bincollatz/exact.hpp"

namespace bincollatz {

enum class MapBranch { Predecessor, Low, High };

enum class FamilyTag { Alpha, Beta, Gamma };

/// {111000}^k followed by "1", "11" or "111".
struct FamilyKind {
  FamilyTag tag;
  std::size_t repetitions;
};

std::string_view to_string(MapBranch branch);
std::string_view to_string(FamilyTag tag);

/// 3x+1 for odd x, x/2 for even x.
BigInt collatz_step(const BigInt& x);

/// (3x+1) with every factor of two removed. Throws DomainError on even input.
BigInt reduced_step(const BigInt& x);

/// The dyadic image of x in [1/2, 1): strip trailing zero bits, then divide
/// by 2^bitlen. M(2^n x) == M(x).
BinaryFraction embed(const BigInt& x);

/// True iff the bitstring is "1" followed by zero or more "01" blocks.
/// Equivalent to 3n + 1 == 2^(l+1).
bool is_predecessor(const BinaryFraction& y);

MapBranch classify_branch(const BinaryFraction& y);

/// One application of the binary map, computed on the integer numerator.
BinaryFraction binary_step(const BinaryFraction& y);

/// Same as binary_step but reports the branch taken.
BinaryFraction binary_step(const BinaryFraction& y, MapBranch& branch);

/// The unperturbed circle map: 3y/2 below 2/3, 3y/4 from 2/3 on.
ExactRational circle_step(const ExactRational& y);

/// floor(k log2 3), computed exactly as bitlen(3^k) - 1.
std::size_t mu(std::size_t k);

/// 2^mu(k) / 3^k.
ExactRational critical_point(std::size_t k);

/// The k-fold circle map in closed form.
ExactRational circle_iterate(const ExactRational& y, std::size_t k);

/// The unique z in [1/2, 1) with circle_step(z) == y.
ExactRational circle_preimage(const ExactRational& y);

BinaryFraction family_member(FamilyKind kind);

/// The predecessor (0.1{01}^n)_2.
BinaryFraction predecessor(std::size_t n);

}  // namespace bincollatz
