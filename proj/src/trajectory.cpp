#include <algorithm>

#include "bincollatz/analysis.hpp"
#include "bincollatz/errors.hpp"

namespace bincollatz {

std::string_view to_string(MapKind kind) {
  switch (kind) {
    case MapKind::Binary: return "b";
    case MapKind::Reduced: return "r";
    case MapKind::Collatz: return "c";
  }
  return "?";
}

MapKind parse_map_kind(std::string_view text) {
  if (text == "b" || text == "binary") return MapKind::Binary;
  if (text == "r" || text == "reduced") return MapKind::Reduced;
  if (text == "c" || text == "collatz") return MapKind::Collatz;
  throw MalformedInput("unknown map kind '" + std::string(text) + "' (expected b, r or c)");
}

BinaryFraction TrajectoryRecord::fraction(std::size_t i) const {
  if (map_kind == MapKind::Binary) return BinaryFraction::unchecked(values.at(i), lengths.at(i));
  return embed(values.at(i));
}

std::size_t TrajectoryRecord::max_length_count() const {
  return static_cast<std::size_t>(std::count(lengths.begin(), lengths.end(), max_length));
}

namespace {

void finish(TrajectoryRecord& rec) {
  const auto it = std::max_element(rec.lengths.begin(), rec.lengths.end());
  rec.hailstone_index = static_cast<std::size_t>(it - rec.lengths.begin());
  rec.max_length = *it;
}

template <typename Step>
TrajectoryRecord iterate_integer(MapKind kind, const BigInt& start, std::size_t max_steps, Step step) {
  TrajectoryRecord rec;
  rec.map_kind = kind;
  BigInt x = start;
  rec.values.push_back(x);
  rec.lengths.push_back(bit_length(x));
  if (x == 1) rec.stopping_time = 0;
  for (std::size_t i = 1; i <= max_steps; ++i) {
    if (mpz_odd_p(x.get_mpz_t())) ++rec.odd_steps;
    x = step(x);
    rec.values.push_back(x);
    rec.lengths.push_back(bit_length(x));
    if (x == 1) {
      if (!rec.stopping_time) rec.stopping_time = i;
      break;
    }
  }
  finish(rec);
  return rec;
}

}  // namespace

TrajectoryRecord run_trajectory(const BinaryFraction& start, std::size_t max_steps) {
  if (max_steps == 0) throw DomainError("run_trajectory: max_steps must be positive");
  TrajectoryRecord rec;
  rec.map_kind = MapKind::Binary;
  BinaryFraction y = start;
  rec.values.push_back(y.numerator());
  rec.lengths.push_back(y.length());
  if (y.is_ground_state()) rec.stopping_time = 0;
  for (std::size_t i = 1; i <= max_steps; ++i) {
    y = binary_step(y);
    rec.values.push_back(y.numerator());
    rec.lengths.push_back(y.length());
    if (y.is_ground_state()) {
      if (!rec.stopping_time) rec.stopping_time = i;
      break;
    }
  }
  finish(rec);
  return rec;
}

TrajectoryRecord run_trajectory(const BigInt& start, MapKind kind, std::size_t max_steps) {
  if (max_steps == 0) throw DomainError("run_trajectory: max_steps must be positive");
  if (sgn(start) <= 0) throw DomainError("run_trajectory: start must be positive");
  switch (kind) {
    case MapKind::Binary:
      return run_trajectory(embed(start), max_steps);
    case MapKind::Reduced:
      if (mpz_even_p(start.get_mpz_t())) throw DomainError("run_trajectory: reduced map needs an odd start");
      return iterate_integer(kind, start, max_steps, [](const BigInt& x) { return reduced_step(x); });
    case MapKind::Collatz:
      return iterate_integer(kind, start, max_steps, [](const BigInt& x) { return collatz_step(x); });
  }
  throw DomainError("run_trajectory: unknown map");
}

std::optional<std::size_t> binary_stopping_time(const BinaryFraction& y, std::size_t step_cap) {
  if (y.is_ground_state()) return 0;
  BinaryFraction cur = y;
  for (std::size_t i = 1; i <= step_cap; ++i) {
    cur = binary_step(cur);
    if (cur.is_ground_state()) return i;
  }
  return std::nullopt;
}

}  // namespace bincollatz
