#include <climits>
#include <vector>

#include "bincollatz/analysis.hpp"
#include "bincollatz/errors.hpp"
#include "bincollatz/parallel.hpp"
#include "bincollatz/sampling.hpp"

namespace bincollatz {

const std::array<std::array<CellBound, 4>, 4>& head_tail_table() {
  // Exact cells have min == max. The h2 row is bracketed below by the
  // one-digit head case; t3 cells are open below.
  static const std::array<std::array<CellBound, 4>, 4> table{{
      {{{-1, -1}, {0, 0}, {std::nullopt, -2}, {0, 0}}},
      {{{-1, 0}, {0, 1}, {std::nullopt, -1}, {0, 1}}},
      {{{0, 0}, {1, 1}, {std::nullopt, -1}, {1, 1}}},
      {{{0, 0}, {1, 1}, {std::nullopt, -1}, {1, 1}}},
  }};
  return table;
}

int head_tail_table_sum() {
  int sum = 0;
  for (const auto& row : head_tail_table())
    for (const auto& cell : row) sum += cell.max;
  return sum;
}

HeadTailReport head_tail_classify(const BinaryFraction& y) {
  const auto ell = y.length();
  if (ell < 6) throw DomainError("head_tail_classify: length must be at least 6");
  const auto& n = y.numerator();
  BigInt top;
  mpz_fdiv_q_2exp(top.get_mpz_t(), n.get_mpz_t(), ell - 3);
  const auto low_bits = mpz_fdiv_ui(n.get_mpz_t(), 8);

  HeadTailReport report;
  report.head = static_cast<int>(top.get_ui()) - 3;  // 100 -> 1 ... 111 -> 4
  report.tail = static_cast<int>(low_bits + 1) / 2;  // 001 -> 1 ... 111 -> 4
  const auto& cell = head_tail_table()[report.head - 1][report.tail - 1];
  report.predicted_min = cell.min;
  report.predicted_max = cell.max;
  report.valuation = two_adic_valuation(3 * n + 1);
  const auto next = binary_step(y, report.branch);
  report.observed_delta = static_cast<int>(next.length()) - static_cast<int>(ell);
  return report;
}

namespace {

void merge_into(AuditSummary& into, const AuditSummary& from) {
  into.samples += from.samples;
  into.violations += from.violations;
  into.decomposition_failures += from.decomposition_failures;
  for (int h = 0; h < 4; ++h) {
    for (int t = 0; t < 4; ++t) {
      if (from.cell_counts[h][t] == 0) continue;
      if (into.cell_counts[h][t] == 0) {
        into.cell_observed_min[h][t] = from.cell_observed_min[h][t];
        into.cell_observed_max[h][t] = from.cell_observed_max[h][t];
      } else {
        into.cell_observed_min[h][t] = std::min(into.cell_observed_min[h][t], from.cell_observed_min[h][t]);
        into.cell_observed_max[h][t] = std::max(into.cell_observed_max[h][t], from.cell_observed_max[h][t]);
      }
      into.cell_counts[h][t] += from.cell_counts[h][t];
    }
  }
}

}  // namespace

AuditSummary audit_length_deltas(std::size_t samples, std::size_t ell, std::uint64_t seed,
                                 std::size_t workers) {
  if (ell < 6) throw DomainError("audit_length_deltas: length must be at least 6");
  workers = detail::resolve_workers(workers);
  std::vector<AuditSummary> partial(workers);
  // smallest failing sample index per worker, so the witness is scheduling-free
  std::vector<std::size_t> witness_index(workers, SIZE_MAX);
  std::vector<std::string> witness(workers);

  detail::parallel_for(0, samples, workers, [&](std::size_t w, std::size_t i) {
    auto stream = make_stream(seed, ell, i);
    const auto y = sample_fraction(ell, stream);
    const auto report = head_tail_classify(y);
    auto& s = partial[w];
    ++s.samples;
    const int h = report.head - 1;
    const int t = report.tail - 1;
    if (s.cell_counts[h][t] == 0) {
      s.cell_observed_min[h][t] = s.cell_observed_max[h][t] = report.observed_delta;
    } else {
      s.cell_observed_min[h][t] = std::min(s.cell_observed_min[h][t], report.observed_delta);
      s.cell_observed_max[h][t] = std::max(s.cell_observed_max[h][t], report.observed_delta);
    }
    ++s.cell_counts[h][t];
    const int head_part = report.branch == MapBranch::Low ? 1 : 2;
    const bool decomposes = report.observed_delta == head_part - static_cast<int>(report.valuation);
    const bool within = report.within_prediction();
    if (!within) ++s.violations;
    if (!decomposes) ++s.decomposition_failures;
    if ((!within || !decomposes) && i < witness_index[w]) {
      witness_index[w] = i;
      witness[w] = y.to_bits();
    }
  });

  AuditSummary total;
  total.ell = ell;
  std::size_t best = SIZE_MAX;
  for (std::size_t w = 0; w < workers; ++w) {
    merge_into(total, partial[w]);
    if (witness_index[w] < best) {
      best = witness_index[w];
      total.first_witness = witness[w];
    }
  }
  return total;
}

}  // namespace bincollatz
