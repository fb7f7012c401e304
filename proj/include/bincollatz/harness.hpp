#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <ostream>
#include <string>
#include <vector>

namespace bincollatz {

struct ExperimentConfig {
  std::vector<std::size_t> lengths;
  std::size_t samples_per_run = 500;
  std::size_t runs = 10;
  std::uint64_t master_seed = 0;
  std::size_t step_cap = 2'000'000;
  std::size_t workers = 0;
};

/// Maxima for one initial length. max_length_delta is the largest
/// (orbit length - initial length) seen anywhere along any orbit.
struct CellSummary {
  std::size_t length = 0;
  std::size_t samples = 0;
  std::size_t runs = 0;
  long max_length_delta = 0;
  std::size_t max_stop_time = 0;
  std::uint64_t seed = 0;
  std::size_t capped_count = 0;
  /// Per-run (max_length_delta, max_stop_time).
  std::vector<std::pair<long, std::size_t>> per_run;

  bool complete() const { return capped_count == 0; }
  friend bool operator==(const CellSummary&, const CellSummary&) = default;
};

struct ExperimentSummary {
  std::vector<CellSummary> cells;
};

inline constexpr const char* kTableCsvHeader =
    "length,samples,runs,max_length_delta,max_stop_time,seed,rng_id,capped_count";

/// Samples of run r and index s use the stream derived from
/// (master_seed ^ ell, r, s).
CellSummary run_cell(std::size_t ell, std::size_t samples, std::size_t runs, std::uint64_t master_seed,
                     std::size_t step_cap, std::size_t workers = 0);

void write_table_csv(const ExperimentSummary& summary, std::ostream& out);

/// Runs every cell and, when `csv_path` is non-empty, writes the CSV there.
/// Throws IoError if the file cannot be written.
ExperimentSummary run_table(const ExperimentConfig& config, const std::filesystem::path& csv_path = {});

}  // namespace bincollatz
