#include "bincollatz/harness.hpp"

#include <fstream>

#include "bincollatz/errors.hpp"
#include "bincollatz/maps.hpp"
#include "bincollatz/parallel.hpp"
#include "bincollatz/sampling.hpp"

namespace bincollatz {

namespace {

struct SampleResult {
  long max_delta = 0;
  std::size_t stop = 0;
  bool capped = false;
};

SampleResult run_sample(const BinaryFraction& start, std::size_t step_cap) {
  SampleResult r;
  const auto ell = static_cast<long>(start.length());
  BinaryFraction y = start;
  for (std::size_t i = 1; i <= step_cap; ++i) {
    y = binary_step(y);
    r.max_delta = std::max(r.max_delta, static_cast<long>(y.length()) - ell);
    if (y.is_ground_state()) {
      r.stop = i;
      return r;
    }
  }
  r.capped = true;
  return r;
}

}  // namespace

CellSummary run_cell(std::size_t ell, std::size_t samples, std::size_t runs, std::uint64_t master_seed,
                     std::size_t step_cap, std::size_t workers) {
  if (ell < 3) throw DomainError("run_cell: length must be at least 3");
  if (samples == 0 || runs == 0 || step_cap == 0) {
    throw DomainError("run_cell: samples, runs and step_cap must be positive");
  }
  const std::uint64_t cell_seed = master_seed ^ static_cast<std::uint64_t>(ell);
  std::vector<SampleResult> results(samples * runs);
  detail::parallel_for(0, results.size(), workers, [&](std::size_t, std::size_t i) {
    auto stream = make_stream(cell_seed, i / samples, i % samples);
    results[i] = run_sample(sample_fraction(ell, stream), step_cap);
  }, 1);

  CellSummary cell;
  cell.length = ell;
  cell.samples = samples;
  cell.runs = runs;
  cell.seed = master_seed;
  cell.per_run.assign(runs, {0, 0});
  for (std::size_t i = 0; i < results.size(); ++i) {
    const auto& r = results[i];
    auto& run = cell.per_run[i / samples];
    run.first = std::max(run.first, r.max_delta);
    if (r.capped) {
      ++cell.capped_count;
    } else {
      run.second = std::max(run.second, r.stop);
    }
  }
  for (const auto& [delta, stop] : cell.per_run) {
    cell.max_length_delta = std::max(cell.max_length_delta, delta);
    cell.max_stop_time = std::max(cell.max_stop_time, stop);
  }
  return cell;
}

void write_table_csv(const ExperimentSummary& summary, std::ostream& out) {
  out << kTableCsvHeader << '\n';
  for (const auto& c : summary.cells) {
    out << c.length << ',' << c.samples << ',' << c.runs << ',' << (c.max_length_delta >= 0 ? "+" : "")
        << c.max_length_delta << ',' << c.max_stop_time << ',' << c.seed << ',' << kRngId << ','
        << c.capped_count << '\n';
  }
}

ExperimentSummary run_table(const ExperimentConfig& config, const std::filesystem::path& csv_path) {
  if (config.lengths.empty()) throw DomainError("run_table: no lengths given");
  ExperimentSummary summary;
  for (auto ell : config.lengths) {
    summary.cells.push_back(
        run_cell(ell, config.samples_per_run, config.runs, config.master_seed, config.step_cap, config.workers));
  }
  if (!csv_path.empty()) {
    std::ofstream file(csv_path, std::ios::binary | std::ios::trunc);
    if (!file) throw IoError("cannot open '" + csv_path.string() + "' for writing");
    write_table_csv(summary, file);
    if (!file.flush()) throw IoError("failed writing '" + csv_path.string() + "'");
  }
  return summary;
}

}  // namespace bincollatz
