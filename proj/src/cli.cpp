#include "bincollatz/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <functional>
#include <optional>
#include <sstream>

#include "bincollatz/analysis.hpp"
#include "bincollatz/errors.hpp"
#include "bincollatz/harness.hpp"
#include "bincollatz/raster.hpp"

namespace bincollatz::cli {

namespace {

constexpr std::size_t kDefaultMaxSteps = 1'000'000;

std::string stop_text(const std::optional<std::size_t>& stop) {
  return stop ? std::to_string(*stop) : std::string("none");
}

TrajectoryRecord trajectory_for(const StartValue& start, MapKind kind, std::size_t max_steps) {
  if (const auto* y = std::get_if<BinaryFraction>(&start)) {
    if (kind == MapKind::Binary) return run_trajectory(*y, max_steps);
    return run_trajectory(y->numerator(), kind, max_steps);
  }
  return run_trajectory(std::get<BigInt>(start), kind, max_steps);
}

std::string iterate_bits(const TrajectoryRecord& rec, std::size_t i) {
  if (rec.map_kind == MapKind::Collatz) return rec.values[i].get_str(2);
  return rec.fraction(i).to_bits();
}

void emit_trajectory(const TrajectoryRecord& rec, const std::string& format, std::ostream& out) {
  const auto steps = rec.stopping_time;
  if (format == "json") {
    for (std::size_t i = 0; i < rec.values.size(); ++i) {
      nlohmann::json row{{"step", i},
                         {"value", rec.values[i].get_str(10)},
                         {"bits", iterate_bits(rec, i)},
                         {"length", rec.lengths[i]}};
      out << row.dump() << '\n';
    }
    nlohmann::json summary{{"map", to_string(rec.map_kind)},
                           {"steps", rec.steps()},
                           {"hailstone_index", rec.hailstone_index},
                           {"max_length", rec.max_length},
                           {"max_length_count", rec.max_length_count()}};
    summary["stopping_time"] = steps ? nlohmann::json(*steps) : nlohmann::json(nullptr);
    if (rec.map_kind == MapKind::Collatz) {
      summary["odd_steps"] = rec.odd_steps;
      summary["even_steps"] = rec.steps() - rec.odd_steps;
    }
    out << nlohmann::json{{"summary", summary}}.dump() << '\n';
    return;
  }
  out << "step,value,bits,length\n";
  for (std::size_t i = 0; i < rec.values.size(); ++i) {
    out << i << ',' << rec.values[i].get_str(10) << ',' << iterate_bits(rec, i) << ',' << rec.lengths[i] << '\n';
  }
  out << "# map=" << to_string(rec.map_kind) << " stopping_time=" << stop_text(steps)
      << " hailstone_index=" << rec.hailstone_index << " max_length=" << rec.max_length
      << " max_length_count=" << rec.max_length_count();
  if (rec.map_kind == MapKind::Collatz) {
    out << " odd_steps=" << rec.odd_steps << " even_steps=" << rec.steps() - rec.odd_steps;
  }
  out << '\n';
}

std::vector<std::size_t> parse_lengths(const std::string& text) {
  std::vector<std::size_t> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty() || item.find_first_not_of("0123456789") != std::string::npos) {
      throw MalformedInput("bad length '" + item + "'");
    }
    out.push_back(std::stoull(item));
  }
  if (out.empty()) throw MalformedInput("no lengths given");
  return out;
}

}  // namespace

StartValue parse_start(const std::string& text) {
  constexpr std::string_view prefix = "bits:";
  if (text.starts_with(prefix)) return BinaryFraction::from_bits(std::string_view(text).substr(prefix.size()));
  auto value = parse_decimal(text);
  if (sgn(value) <= 0) throw DomainError("start must be a positive integer");
  return value;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact binary-fraction Collatz dynamics", "bincollatz"};
  app.require_subcommand(1);
  std::function<int()> action;

  // trajectory
  std::string start_text;
  std::string map_text = "b";
  std::size_t max_steps = kDefaultMaxSteps;
  std::string format = "csv";
  auto* trajectory = app.add_subcommand("trajectory", "Print the orbit of a start value");
  trajectory->add_option("--start", start_text, "Decimal integer or bits:<digits>")->required();
  trajectory->add_option("--map", map_text, "b (binary), r (reduced) or c (Collatz)");
  trajectory->add_option("--max-steps", max_steps)->check(CLI::PositiveNumber);
  trajectory->add_option("--format", format)->check(CLI::IsMember({"csv", "json"}));
  trajectory->callback([&] {
    action = [&] {
      const auto rec = trajectory_for(parse_start(start_text), parse_map_kind(map_text), max_steps);
      emit_trajectory(rec, format, out);
      return int{kOk};
    };
  });

  // raster
  std::string raster_out;
  auto* raster = app.add_subcommand("raster", "Write the binary orbit as a plain PBM bit raster");
  raster->add_option("--start", start_text, "Decimal integer or bits:<digits>")->required();
  raster->add_option("--out", raster_out, "Output .pbm path")->required();
  raster->add_option("--max-steps", max_steps)->check(CLI::PositiveNumber);
  raster->callback([&] {
    action = [&] {
      const auto rec = trajectory_for(parse_start(start_text), MapKind::Binary, max_steps);
      const auto image = build_raster(rec);
      std::ofstream file(raster_out, std::ios::binary | std::ios::trunc);
      if (!file) throw IoError("cannot open '" + raster_out + "' for writing");
      write_pbm(image, file);
      if (!file.flush()) throw IoError("failed writing '" + raster_out + "'");
      out << "width=" << image.width << "\nheight=" << image.height
          << "\nstopping_time=" << stop_text(rec.stopping_time) << '\n';
      return int{kOk};
    };
  });

  // kstar
  std::size_t ell = 60;
  std::size_t k_max = 1000;
  std::size_t digits = 9;
  auto* kstar = app.add_subcommand("kstar", "First period not excluded by 1/2 + eps_k > c_k");
  kstar->add_option("--ell", ell, "Tested length")->check(CLI::PositiveNumber);
  kstar->add_option("--k-max", k_max)->check(CLI::PositiveNumber);
  kstar->add_option("--digits", digits, "Decimal digits in the report")->check(CLI::PositiveNumber);
  kstar->callback([&] {
    action = [&] {
      const auto report = kstar_scan(ell, k_max);
      out << "ell=" << report.ell << "\nk_max=" << report.k_max << '\n';
      if (!report.k_star) {
        out << "k_star=none\nexcluded_periods=1.." << k_max << '\n';
        return int{kOk};
      }
      out << "k_star=" << *report.k_star << "\nc_k_star=" << to_decimal(*report.c_at_kstar, digits)
          << "\neps_k_star=" << to_decimal(*report.epsilon_at_kstar, digits)
          << "\nexcluded_periods=" << (*report.k_star > 1 ? "1.." + std::to_string(*report.k_star - 1) : "none")
          << '\n';
      return int{kOk};
    };
  });

  // verify
  std::size_t workers = 0;
  std::uint64_t step_cap = 1'000'000;
  auto* verify = app.add_subcommand("verify", "Check every odd x < 2^ell reaches 1 under R");
  verify->add_option("--ell", ell)->required()->check(CLI::Range(std::size_t{1}, kMaxVerifyBits));
  verify->add_option("--workers", workers, "0 = hardware concurrency");
  verify->add_option("--step-cap", step_cap)->check(CLI::PositiveNumber);
  verify->callback([&] {
    action = [&] {
      RangeOptions options;
      options.workers = workers;
      options.step_cap = step_cap;
      const auto r = verify_range(ell, options);
      out << "ell=" << r.ell << "\nverified_count=" << r.verified_count << "\nmax_stopping_time="
          << r.max_stopping_time << "\nworst_start=" << r.worst_start << '\n';
      if (r.counterexample) {
        out << "counterexample=" << *r.counterexample << "\nstatus=step cap exceeded\n";
        return int{kViolation};
      }
      out << "status=all odd x < 2^" << r.ell << " converge\n";
      return int{kOk};
    };
  });

  // table1
  std::string lengths_text = "50,100";
  std::size_t samples = 500;
  std::size_t runs = 10;
  std::uint64_t seed = 0;
  std::string csv_out;
  std::size_t table_cap = 2'000'000;
  auto* table1 = app.add_subcommand("table1", "Length growth and stop times of random fractions");
  table1->add_option("--lengths", lengths_text, "Comma-separated initial lengths (>= 3)");
  table1->add_option("--samples", samples)->check(CLI::PositiveNumber);
  table1->add_option("--runs", runs)->check(CLI::PositiveNumber);
  table1->add_option("--seed", seed);
  table1->add_option("--step-cap", table_cap)->check(CLI::PositiveNumber);
  table1->add_option("--workers", workers);
  table1->add_option("--out", csv_out, "Also write the CSV here");
  table1->callback([&] {
    action = [&] {
      ExperimentConfig config;
      config.lengths = parse_lengths(lengths_text);
      config.samples_per_run = samples;
      config.runs = runs;
      config.master_seed = seed;
      config.step_cap = table_cap;
      config.workers = workers;
      const auto summary = run_table(config, csv_out);
      write_table_csv(summary, out);
      for (const auto& cell : summary.cells) {
        if (!cell.complete()) {
          err << "length " << cell.length << ": " << cell.capped_count << " orbit(s) hit the step cap\n";
          return int{kViolation};
        }
      }
      return int{kOk};
    };
  });

  // audit
  std::size_t audit_samples = 10'000;
  std::size_t audit_ell = 64;
  auto* audit = app.add_subcommand("audit", "Check one-step length deltas against the head/tail table");
  audit->add_option("--samples", audit_samples)->check(CLI::PositiveNumber);
  audit->add_option("--ell", audit_ell)->check(CLI::Range(std::size_t{6}, std::size_t{1} << 20));
  audit->add_option("--seed", seed);
  audit->add_option("--workers", workers);
  audit->callback([&] {
    action = [&] {
      const auto s = audit_length_deltas(audit_samples, audit_ell, seed, workers);
      out << "ell=" << s.ell << "\nsamples=" << s.samples << "\nviolations=" << s.violations
          << "\ndecomposition_failures=" << s.decomposition_failures << '\n';
      out << "cell,count,observed_min,observed_max,predicted_min,predicted_max\n";
      for (int h = 0; h < 4; ++h) {
        for (int t = 0; t < 4; ++t) {
          const auto& bound = head_tail_table()[h][t];
          out << 'h' << h + 1 << "/t" << t + 1 << ',' << s.cell_counts[h][t] << ',';
          if (s.cell_counts[h][t] != 0) {
            out << s.cell_observed_min[h][t] << ',' << s.cell_observed_max[h][t];
          } else {
            out << ',';
          }
          out << ',' << (bound.min ? std::to_string(*bound.min) : std::string("-inf")) << ',' << bound.max
              << '\n';
        }
      }
      if (!s.passed()) {
        out << "witness=" << s.first_witness.value_or("") << '\n';
        return int{kViolation};
      }
      return int{kOk};
    };
  });

  // families
  std::string kind_text = "gamma";
  std::size_t family_k_max = 50;
  std::size_t family_cap = 1'000'000;
  auto* families = app.add_subcommand("families", "Orbit lengths of the alpha, beta and gamma families");
  families->add_option("--kind", kind_text)->check(CLI::IsMember({"alpha", "beta", "gamma"}));
  families->add_option("--k-max", family_k_max)->check(CLI::PositiveNumber);
  families->add_option("--step-cap", family_cap)->check(CLI::PositiveNumber);
  families->callback([&] {
    action = [&] {
      const auto report = family_orbit_probe(parse_family_tag(kind_text), family_k_max, family_cap);
      out << "k,length,stopping_time\n";
      for (const auto& e : report.entries) out << e.k << ',' << e.length << ',' << stop_text(e.stopping_time) << '\n';
      out << "kind=" << to_string(report.tag) << "\nunresolved=" << report.unresolved << '\n';
      if (report.tag != FamilyTag::Gamma) {
        out << (report.identity_holds ? "status=all stop in 2 steps\n" : "status=identity violated\n");
        return report.identity_holds ? int{kOk} : int{kViolation};
      }
      out << "status=" << (report.unresolved == 0 ? "all reach 1/2 within cap" : "some orbits unresolved") << '\n';
      return int{kOk};
    };
  });

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << e.what() << '\n';
    return kUsage;
  }

  try {
    return action ? action() : int{kUsage};
  } catch (const IoError& e) {
    err << "error: " << e.what() << '\n';
    return kIo;
  } catch (const MalformedInput& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
}

}  // namespace bincollatz::cli
