#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <string_view>

#include "bincollatz/exact.hpp"

namespace bincollatz {

/// Identity of the sample generator, written into every CSV row.
inline constexpr std::string_view kRngId = "mt19937_64/splitmix64";

/// The splitmix64 finalizer.
constexpr std::uint64_t mix64(std::uint64_t z) {
  z += 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

/// Seed for one sample, a pure function of its coordinates so results do not
/// depend on scheduling.
constexpr std::uint64_t derive_seed(std::uint64_t master, std::uint64_t run, std::uint64_t sample) {
  return mix64(mix64(mix64(master) ^ run) ^ sample);
}

using SampleStream = std::mt19937_64;

inline SampleStream make_stream(std::uint64_t master, std::uint64_t run, std::uint64_t sample) {
  return SampleStream(derive_seed(master, run, sample));
}

/// A fraction of exact length ell whose first and last bits are 1 and whose
/// ell-2 middle bits are fair draws. Middle bit i comes from bit i%64 of the
/// (i/64)-th 64-bit output. Throws DomainError for ell < 3.
BinaryFraction sample_fraction(std::size_t ell, SampleStream& stream);

}  // namespace bincollatz
