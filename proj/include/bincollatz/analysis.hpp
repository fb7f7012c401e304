#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "bincollatz/exact.hpp"
#include "bincollatz/maps.hpp"

namespace bincollatz {

// ---------------------------------------------------------------------------
// Trajectories

enum class MapKind { Binary, Reduced, Collatz };

std::string_view to_string(MapKind kind);
/// Accepts "b", "r", "c" (and the long names).
MapKind parse_map_kind(std::string_view text);

/// Orbit of a start value. For the binary map `values[i]` holds the odd
/// numerator of the i-th iterate, so iterate i is values[i] / 2^lengths[i].
/// For the integer maps `values[i]` is the iterate itself.
struct TrajectoryRecord {
  MapKind map_kind = MapKind::Binary;
  std::vector<BigInt> values;
  std::vector<std::size_t> lengths;
  /// Map applications until the ground state was first seen; step 0 is the
  /// start. Empty when max_steps ran out first.
  std::optional<std::size_t> stopping_time;
  std::size_t hailstone_index = 0;
  std::size_t max_length = 0;
  /// Iterates that were odd and therefore took the 3x+1 branch before the
  /// stop. Only meaningful for the Collatz map; the other steps are halvings.
  std::size_t odd_steps = 0;

  std::size_t steps() const { return values.size() - 1; }
  BinaryFraction fraction(std::size_t i) const;
  /// Number of iterates attaining max_length.
  std::size_t max_length_count() const;
};

/// Iterates until the ground state (1/2 under B, 1 under R and C) is reached
/// after at least one step, or max_steps applications have been made.
TrajectoryRecord run_trajectory(const BigInt& start, MapKind kind, std::size_t max_steps);
TrajectoryRecord run_trajectory(const BinaryFraction& start, std::size_t max_steps);

/// B-steps from y to 1/2 without keeping the orbit; empty if the cap is hit.
std::optional<std::size_t> binary_stopping_time(const BinaryFraction& y, std::size_t step_cap);

// ---------------------------------------------------------------------------
// Heads and tails

/// Head h1..h4 is read from fractional bits 1-3 (100, 101, 110, 111), tail
/// t1..t4 from the last three bits (001, 011, 101, 111).
struct HeadTailReport {
  int head = 0;
  int tail = 0;
  /// Lower bound of the predicted delta; empty when the cell is open below.
  std::optional<int> predicted_min;
  int predicted_max = 0;
  int observed_delta = 0;
  MapBranch branch = MapBranch::Low;
  std::size_t valuation = 0;

  bool within_prediction() const {
    return observed_delta <= predicted_max && (!predicted_min || observed_delta >= *predicted_min);
  }
};

struct CellBound {
  std::optional<int> min;
  int max;
};

/// The head/tail delta table; indices are head-1, tail-1.
const std::array<std::array<CellBound, 4>, 4>& head_tail_table();

/// Sum of the upper bounds of all sixteen cells.
int head_tail_table_sum();

/// Requires length >= 6 so the head and tail windows are disjoint.
HeadTailReport head_tail_classify(const BinaryFraction& y);

struct AuditSummary {
  std::size_t ell = 0;
  std::size_t samples = 0;
  std::size_t violations = 0;
  std::size_t decomposition_failures = 0;
  std::optional<std::string> first_witness;
  std::array<std::array<std::size_t, 4>, 4> cell_counts{};
  std::array<std::array<int, 4>, 4> cell_observed_min{};
  std::array<std::array<int, 4>, 4> cell_observed_max{};

  bool passed() const { return violations == 0 && decomposition_failures == 0; }
};

/// Samples fractions of length ell and checks each observed length delta
/// against the table, plus delta == (Low ? 1 : 2) - v2(3n+1).
AuditSummary audit_length_deltas(std::size_t samples, std::size_t ell, std::uint64_t seed,
                                 std::size_t workers = 0);

// ---------------------------------------------------------------------------
// Error bounds and k*

/// Upper bound on B^k - B~^k over the admissible set for tested length ell:
///   k = 2n:    7 [(9/8)^n - 1] 2^-ell
///   k = 2n+1:  (15/2 [(9/8)^n - 1] + 1/2) 2^-ell
ExactRational epsilon_bound(std::size_t k, std::size_t ell);

/// Sign of 1/2 + eps_k - c_k, by integer cross-multiplication.
int kstar_margin_sign(std::size_t k, std::size_t ell);

struct KStarReport {
  std::size_t ell = 0;
  std::size_t k_max = 0;
  std::optional<std::size_t> k_star;
  std::optional<ExactRational> c_at_kstar;
  std::optional<ExactRational> epsilon_at_kstar;
  /// 1/2 + eps_k - c_k for k = 1..(k_star or k_max), if requested.
  std::vector<ExactRational> margins;
};

/// First k <= k_max with 1/2 + eps_k > c_k.
KStarReport kstar_scan(std::size_t ell, std::size_t k_max, bool keep_margins = false);

// ---------------------------------------------------------------------------
// Exhaustive range verification

struct RangeOptions {
  std::size_t workers = 0;
  std::uint64_t step_cap = 1'000'000;
  /// Stopping times of odd values below 2^table_bits are memoized.
  std::size_t table_bits = 24;
};

struct RangeVerification {
  std::size_t ell = 0;
  std::uint64_t verified_count = 0;
  std::uint64_t max_stopping_time = 0;
  std::uint64_t worst_start = 1;
  /// First start (smallest) whose orbit exceeded the step cap.
  std::optional<std::uint64_t> counterexample;

  bool converged() const { return !counterexample.has_value(); }
  friend bool operator==(const RangeVerification&, const RangeVerification&) = default;
};

inline constexpr std::size_t kMaxVerifyBits = 34;

/// Runs reduced_step from every odd x < 2^ell. Stopping times are merged with
/// a commutative max (ties keep the smaller start), so the result does not
/// depend on the worker count.
RangeVerification verify_range(std::size_t ell, const RangeOptions& options = {});

/// R-steps from odd x to 1; empty if the cap is exceeded. Starts with a
/// 128-bit fast path and falls back to big integers on overflow.
std::optional<std::uint64_t> reduced_stopping_time(std::uint64_t x, std::uint64_t step_cap);

// ---------------------------------------------------------------------------
// Family probes

struct FamilyProbeEntry {
  std::size_t k = 0;
  std::size_t length = 0;
  std::optional<std::size_t> stopping_time;
};

struct FamilyProbeReport {
  FamilyTag tag = FamilyTag::Gamma;
  std::vector<FamilyProbeEntry> entries;
  std::size_t unresolved = 0;
  /// Alpha and Beta members must reach 1/2 in exactly two steps.
  bool identity_holds = true;
};

FamilyTag parse_family_tag(std::string_view text);

FamilyProbeReport family_orbit_probe(FamilyTag tag, std::size_t k_max, std::size_t step_cap);

}  // namespace bincollatz
