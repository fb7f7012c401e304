#include <limits>
#include <string>
#include <vector>

#include "bincollatz/analysis.hpp"
#include "bincollatz/errors.hpp"
#include "bincollatz/parallel.hpp"

namespace bincollatz {

namespace {

using u128 = unsigned __int128;

constexpr u128 kFastLimit = (std::numeric_limits<u128>::max() - 1) / 3;

BigInt to_big(u128 v) {
  BigInt out(static_cast<unsigned long>(v >> 64));
  out <<= 64;
  out += static_cast<unsigned long>(static_cast<std::uint64_t>(v));
  return out;
}

// Outcome of running R from x until the value drops below `floor`.
struct Descent {
  std::uint64_t steps = 0;
  std::uint64_t landing = 0;  // value reached, < floor
  bool capped = false;
};

Descent descend_big(BigInt value, std::uint64_t steps, std::uint64_t floor, std::uint64_t cap) {
  const BigInt limit(static_cast<unsigned long>(floor));
  while (value >= limit) {
    if (steps >= cap) return {steps, 0, true};
    value = reduced_step(value);
    ++steps;
  }
  return {steps, value.get_ui(), false};
}

Descent descend(std::uint64_t x, std::uint64_t floor, std::uint64_t cap) {
  u128 v = x;
  std::uint64_t steps = 0;
  while (v >= floor) {
    if (steps >= cap) return {steps, 0, true};
    if (v > kFastLimit) return descend_big(to_big(v), steps, floor, cap);
    v = 3 * v + 1;
    const auto lo = static_cast<std::uint64_t>(v);
    v >>= lo != 0 ? __builtin_ctzll(lo) : 64 + __builtin_ctzll(static_cast<std::uint64_t>(v >> 64));
    ++steps;
  }
  return {steps, static_cast<std::uint64_t>(v), false};
}

struct Partial {
  std::uint64_t count = 0;
  std::uint64_t max_stop = 0;
  std::uint64_t worst = 1;
  std::optional<std::uint64_t> counterexample;

  void record(std::uint64_t x, std::uint64_t stop) {
    ++count;
    if (stop > max_stop || (stop == max_stop && x < worst)) {
      max_stop = stop;
      worst = x;
    }
  }
  void fail(std::uint64_t x) {
    if (!counterexample || x < *counterexample) counterexample = x;
  }
  void merge(const Partial& o) {
    count += o.count;
    if (o.max_stop > max_stop || (o.max_stop == max_stop && o.worst < worst)) {
      max_stop = o.max_stop;
      worst = o.worst;
    }
    if (o.counterexample) fail(*o.counterexample);
  }
};

}  // namespace

std::optional<std::uint64_t> reduced_stopping_time(std::uint64_t x, std::uint64_t step_cap) {
  if (x % 2 == 0) throw DomainError("reduced_stopping_time: start must be odd");
  if (x == 1) return 0;
  const auto d = descend(x, 2, step_cap);
  if (d.capped) return std::nullopt;
  return d.steps;
}

RangeVerification verify_range(std::size_t ell, const RangeOptions& options) {
  if (ell == 0 || ell > kMaxVerifyBits) {
    throw DomainError("verify_range: ell must lie in [1, " + std::to_string(kMaxVerifyBits) + "]");
  }
  const std::size_t workers = detail::resolve_workers(options.workers);
  const std::size_t table_bits = std::max<std::size_t>(1, std::min(ell, options.table_bits));
  const std::uint64_t cap = options.step_cap;

  // stop[(x-1)/2] for odd x < 2^table_bits
  std::vector<std::uint32_t> stop(std::size_t{1} << (table_bits - 1), 0);
  Partial total;
  total.record(1, 0);

  auto run_block = [&](std::uint64_t lo, std::uint64_t hi, std::uint64_t floor, bool store) {
    std::vector<Partial> partial(workers);
    const std::size_t first = lo / 2;  // index of the first odd value >= lo
    const std::size_t last = hi / 2;
    detail::parallel_for(first, last, workers, [&](std::size_t w, std::size_t idx) {
      const std::uint64_t x = 2 * idx + 1;
      const auto d = descend(x, floor, cap);
      if (d.capped) {
        partial[w].fail(x);
        return;
      }
      const std::uint64_t s = d.steps + stop[(d.landing - 1) / 2];
      if (s > cap) {
        partial[w].fail(x);
        return;
      }
      if (store) stop[idx] = static_cast<std::uint32_t>(s);
      partial[w].record(x, s);
    }, 1024);
    for (const auto& p : partial) total.merge(p);
  };

  // Dyadic blocks [2^j, 2^(j+1)) only read entries from earlier blocks.
  for (std::size_t j = 1; j < table_bits && !total.counterexample; ++j) {
    run_block(std::uint64_t{1} << j, std::uint64_t{1} << (j + 1), std::uint64_t{1} << j, true);
  }
  if (ell > table_bits && !total.counterexample) {
    run_block(std::uint64_t{1} << table_bits, std::uint64_t{1} << ell, std::uint64_t{1} << table_bits, false);
  }

  RangeVerification out;
  out.ell = ell;
  out.verified_count = total.count;
  out.max_stopping_time = total.max_stop;
  out.worst_start = total.worst;
  out.counterexample = total.counterexample;
  return out;
}

}  // namespace bincollatz
