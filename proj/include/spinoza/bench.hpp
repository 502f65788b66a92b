#pragma once

#include <chrono>
#include <cmath>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "spinoza/generator.hpp"
#include "spinoza/solver.hpp"

namespace spinoza {

/// One timed (n, trial) cell: a verify of the all-plus witness and one full
/// exhaustive solve of the same generated instance.
struct BenchRecord {
  int n = 0;
  int trial = 0;
  std::uint64_t verify_ns = 0;
  std::uint64_t solve_ns = 0;
  std::uint64_t assignments_tried = 0;
  Answer answer = Answer::no;
  std::uint64_t verify_mod_ops = 0;
  /// Present only when the run also timed a parallel solve.
  std::optional<std::uint64_t> parallel_solve_ns;

  friend bool operator==(const BenchRecord&, const BenchRecord&) = default;
};

struct ScalingOptions {
  std::size_t psi_len = 36;
  std::uint64_t c_max = 999;
  /// Assignment cap per solve; 0 means none. Aborted records surface in the
  /// CSV and are excluded from growth summaries.
  std::uint64_t budget = 0;
  /// A single verify is far below timer resolution, so each verify_ns is the
  /// mean over this many back-to-back calls.
  int verify_reps = 2000;
  /// When > 1, each cell additionally times solve at this worker count and
  /// fills parallel_solve_ns. Sequential solve_ns always uses one worker.
  unsigned parallel_workers = 0;
  /// Growth studies need exhaustive scans, and satisfiable instances get more
  /// common as n grows. With this set, each cell walks a deterministic seed
  /// chain until the scan comes back unsatisfiable (at most 64 attempts) and
  /// records that instance only.
  bool require_unsat = false;
};

/// Runs the scaling grid. Instance seeds derive from the master seed and the
/// (n, trial) cell, so a run is reproducible from four numbers. Timed regions
/// exclude generation and I/O.
inline std::vector<BenchRecord> run_scaling(int n_min, int n_max, int trials,
                                            std::uint64_t seed,
                                            const ScalingOptions& options = {}) {
  if (n_min < 1 || n_min > n_max || n_max > 24) {
    throw std::invalid_argument("run_scaling needs 1 <= n_min <= n_max <= 24");
  }
  if (trials < 3) {
    throw std::invalid_argument("run_scaling needs at least 3 trials");
  }
  if (options.verify_reps < 1) {
    throw std::invalid_argument("run_scaling needs verify_reps >= 1");
  }
  std::vector<BenchRecord> records;
  records.reserve(static_cast<std::size_t>(n_max - n_min + 1) * trials);
  for (int n = n_min; n <= n_max; ++n) {
    for (int trial = 1; trial <= trials; ++trial) {
      const std::uint64_t cell_seed =
          derive_seed(seed, static_cast<std::uint64_t>(n), static_cast<std::uint64_t>(trial));
      Instance inst = gen_instance({static_cast<std::size_t>(n),
                                    options.psi_len, options.c_max, cell_seed});
      Verdict verdict = solve(inst, {1, options.budget});
      if (options.require_unsat) {
        for (std::uint64_t attempt = 1;
             attempt <= 64 && verdict.answer == Answer::yes; ++attempt) {
          inst = gen_instance({static_cast<std::size_t>(n), options.psi_len,
                               options.c_max, splitmix64(cell_seed + attempt)});
          verdict = solve(inst, {1, options.budget});
        }
      }
      const SignVector fixed_witness = SignVector::all_plus(inst.n());

      const auto verify_begin = std::chrono::steady_clock::now();
      for (int rep = 0; rep < options.verify_reps; ++rep) {
        volatile bool sink = verify(inst, fixed_witness).satisfied;
        (void)sink;
      }
      const auto verify_end = std::chrono::steady_clock::now();
      const std::uint64_t verify_ns =
          static_cast<std::uint64_t>(std::chrono::duration_cast<std::chrono::nanoseconds>(
                                         verify_end - verify_begin)
                                         .count()) /
          static_cast<std::uint64_t>(options.verify_reps);

      BenchRecord record;
      record.n = n;
      record.trial = trial;
      record.verify_ns = verify_ns;
      record.verify_mod_ops = verify(inst, fixed_witness).counters.modulo;
      record.solve_ns = static_cast<std::uint64_t>(verdict.elapsed.count());
      record.assignments_tried = verdict.assignments_tried;
      record.answer = verdict.answer;

      if (options.parallel_workers > 1) {
        const Verdict parallel =
            solve(inst, {options.parallel_workers, options.budget});
        record.parallel_solve_ns =
            static_cast<std::uint64_t>(parallel.elapsed.count());
      }
      records.push_back(std::move(record));
    }
  }
  return records;
}

/// Growth statistics over the exhaustive (answer=no) records only.
struct GrowthSummary {
  std::map<int, double> median_solve_ns;
  std::map<int, double> median_verify_ns;
  /// (n, median_solve(n+1) / median_solve(n)) for consecutive n present.
  std::vector<std::pair<int, double>> doubling_ratios;
  double verify_slope = 0.0;
  double verify_intercept = 0.0;
  /// RMS residual of the linear fit divided by the mean of the medians.
  double verify_rel_residual = 0.0;
};

namespace detail {

inline double median_of(std::vector<double> values) {
  std::sort(values.begin(), values.end());
  const std::size_t k = values.size();
  if (k % 2 == 1) return values[k / 2];
  return (values[k / 2 - 1] + values[k / 2]) / 2.0;
}

}  // namespace detail

/// Medians, consecutive doubling ratios and the least-squares line through
/// the verify medians. Pure function of the records.
inline GrowthSummary fit_growth(const std::vector<BenchRecord>& records) {
  std::map<int, std::vector<double>> solve_by_n;
  std::map<int, std::vector<double>> verify_by_n;
  for (const BenchRecord& record : records) {
    if (record.answer != Answer::no) continue;
    solve_by_n[record.n].push_back(static_cast<double>(record.solve_ns));
    verify_by_n[record.n].push_back(static_cast<double>(record.verify_ns));
  }
  if (solve_by_n.size() < 2) {
    throw std::invalid_argument(
        "fit_growth needs answer=no records at two or more distinct n");
  }
  GrowthSummary summary;
  for (const auto& [n, values] : solve_by_n) {
    summary.median_solve_ns[n] = detail::median_of(values);
  }
  for (const auto& [n, values] : verify_by_n) {
    summary.median_verify_ns[n] = detail::median_of(values);
  }
  for (auto it = summary.median_solve_ns.begin(); it != summary.median_solve_ns.end(); ++it) {
    const auto next = summary.median_solve_ns.find(it->first + 1);
    if (next != summary.median_solve_ns.end() && it->second > 0.0) {
      summary.doubling_ratios.emplace_back(it->first, next->second / it->second);
    }
  }
  // Least squares through (n, median verify time).
  const double k = static_cast<double>(summary.median_verify_ns.size());
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (const auto& [n, y] : summary.median_verify_ns) {
    sx += n;
    sy += y;
    sxx += static_cast<double>(n) * n;
    sxy += n * y;
  }
  const double denom = k * sxx - sx * sx;
  summary.verify_slope = denom != 0.0 ? (k * sxy - sx * sy) / denom : 0.0;
  summary.verify_intercept = (sy - summary.verify_slope * sx) / k;
  double squared_residuals = 0.0;
  for (const auto& [n, y] : summary.median_verify_ns) {
    const double fitted = summary.verify_slope * n + summary.verify_intercept;
    squared_residuals += (y - fitted) * (y - fitted);
  }
  const double mean_y = sy / k;
  summary.verify_rel_residual =
      mean_y != 0.0 ? std::sqrt(squared_residuals / k) / mean_y : 0.0;
  return summary;
}

inline constexpr std::string_view kCsvHeader =
    "n,trial,verify_ns,solve_ns,assignments_tried,answer,verify_mod_ops";

/// Writes the record grid as CSV with a stable column order. The optional
/// parallel column appears only if some record carries it.
inline void emit_csv(const std::vector<BenchRecord>& records,
                     const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) {
    throw std::runtime_error("cannot open " + path.string() + " for writing");
  }
  bool has_parallel = false;
  for (const BenchRecord& record : records) {
    if (record.parallel_solve_ns.has_value()) has_parallel = true;
  }
  out << kCsvHeader;
  if (has_parallel) out << ",parallel_solve_ns";
  out << '\n';
  for (const BenchRecord& record : records) {
    out << record.n << ',' << record.trial << ',' << record.verify_ns << ','
        << record.solve_ns << ',' << record.assignments_tried << ','
        << answer_name(record.answer) << ',' << record.verify_mod_ops;
    if (has_parallel) {
      out << ',';
      if (record.parallel_solve_ns.has_value()) out << *record.parallel_solve_ns;
    }
    out << '\n';
  }
  if (!out) {
    throw std::runtime_error("failed while writing " + path.string());
  }
}

/// Reads a CSV produced by emit_csv; emit_csv(parse_csv(p)) reproduces the
/// records exactly.
inline std::vector<BenchRecord> parse_csv(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) {
    throw std::runtime_error("cannot open " + path.string());
  }
  std::string line;
  if (!std::getline(in, line)) {
    throw std::runtime_error(path.string() + " is empty");
  }
  bool has_parallel = false;
  if (line == std::string(kCsvHeader) + ",parallel_solve_ns") {
    has_parallel = true;
  } else if (line != kCsvHeader) {
    throw std::runtime_error(path.string() + " has an unexpected header: " + line);
  }
  std::vector<BenchRecord> records;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::stringstream row(line);
    std::string cell;
    std::vector<std::string> cells;
    while (std::getline(row, cell, ',')) cells.push_back(cell);
    if (line.back() == ',') cells.push_back("");
    const std::size_t expected = has_parallel ? 8 : 7;
    if (cells.size() != expected) {
      throw std::runtime_error("bad CSV row: " + line);
    }
    BenchRecord record;
    record.n = std::stoi(cells[0]);
    record.trial = std::stoi(cells[1]);
    record.verify_ns = std::stoull(cells[2]);
    record.solve_ns = std::stoull(cells[3]);
    record.assignments_tried = std::stoull(cells[4]);
    record.answer = answer_from_name(cells[5]);
    record.verify_mod_ops = std::stoull(cells[6]);
    if (has_parallel && !cells[7].empty()) {
      record.parallel_solve_ns = std::stoull(cells[7]);
    }
    records.push_back(record);
  }
  return records;
}

/// Human-readable block for standard output.
inline std::string render_summary(const GrowthSummary& summary) {
  std::ostringstream out;
  out << "growth summary (answer=no records only)\n";
  out << "  n      median_solve_ns   median_verify_ns   ratio_vs_prev\n";
  for (const auto& [n, solve_ns] : summary.median_solve_ns) {
    out << "  " << n << "\t" << static_cast<std::uint64_t>(solve_ns) << "\t";
    const auto verify_it = summary.median_verify_ns.find(n);
    out << (verify_it != summary.median_verify_ns.end()
                ? std::to_string(static_cast<std::uint64_t>(verify_it->second))
                : std::string("-"));
    std::string ratio = "-";
    for (const auto& [rn, r] : summary.doubling_ratios) {
      if (rn + 1 == n) {
        std::ostringstream rs;
        rs.precision(3);
        rs << std::fixed << r;
        ratio = rs.str();
      }
    }
    out << "\t" << ratio << "\n";
  }
  out.precision(3);
  out << std::fixed;
  out << "verify time fit: " << summary.verify_slope << " ns/n + "
      << summary.verify_intercept << " ns, relative residual "
      << summary.verify_rel_residual * 100.0 << "%\n";
  return out.str();
}

}  // namespace spinoza
