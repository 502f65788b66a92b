// spinoza - verify, solve, generate and benchmark instances of the
// sign-assignment decision problem on cyclically read letter sequences.
//
// Exit codes: 0 success, 1 domain error (bad input data, aborted scan),
// 2 usage error (bad flags or a witness of the wrong shape).

#include <CLI11.hpp>

#include <cstdint>
#include <filesystem>
#include <iostream>
#include <sstream>
#include <string>

#include "spinoza/spinoza.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitDomainError = 1;
constexpr int kExitUsageError = 2;

// Thrown for witness shape problems that count as usage errors.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

spinoza::SignVector witness_from_flag(const std::string& delta_text,
                                      const spinoza::Instance& inst) {
  try {
    return spinoza::parse_witness(delta_text, inst.magnitudes);
  } catch (const spinoza::WitnessMagnitudeError&) {
    throw;  // domain error, reported per index
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());  // malformed or wrong-length --delta
  }
}

std::string staged_trace(const spinoza::Instance& inst,
                         const spinoza::SignVector& signs) {
  using spinoza::to_string;
  std::ostringstream out;
  out << "Ψ = " << inst.letters.letters() << "\n";
  out << "ψ = " << inst.letters.length() << "\n";
  const auto& values = inst.magnitudes.values();
  out << "C = (";
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i > 0) out << ", ";
    out << values[i];
  }
  out << ")\n";
  out << "Δ = (";
  for (std::size_t i = 1; i <= inst.n(); ++i) {
    if (i > 1) out << ", ";
    out << spinoza::to_string(spinoza::delta_value(signs, inst.magnitudes, i));
  }
  out << ")\n";

  const spinoza::LetterSelection picked = spinoza::select_letters(inst);
  out << "Λ = " << picked.render() << "\n";
  const spinoza::ThetaTemplate tpl = spinoza::build_template(picked);
  out << "Θ = " << tpl.digits() << "\n";
  const spinoza::Assembly assembly =
      spinoza::assemble(tpl, signs, inst.magnitudes);
  out << "Θ = " << assembly.marked << "\n";
  out << "negative marks = " << assembly.negative_marks << " ("
      << (assembly.negative_marks % 2 == 0 ? "even" : "odd")
      << "), so the sign of Θ is "
      << (assembly.theta.negative ? "-" : "+") << "\n";
  out << "Θ = " << (assembly.theta.negative ? "-" : "")
      << assembly.theta.digits << "\n";
  out << "θ = " << assembly.theta.digit_count() << "\n";
  if (assembly.zero_digit_warning) {
    out << "warning: zero digit entered Θ via two-digit mark(s) at index";
    std::string indexes;
    for (std::size_t i = 0; i < assembly.marks.size(); ++i) {
      if (assembly.marks[i].magnitude() == 10) {
        indexes += indexes.empty() ? " " : ", ";
        indexes += std::to_string(i + 1);
      }
    }
    out << indexes << "\n";
  }
  out << "S = " << to_string(spinoza::compute_s(signs, inst.magnitudes)) << "\n";
  for (std::size_t i = 1; i <= inst.n(); ++i) {
    out << "Y(c_" << i << ") = Y(" << inst.magnitudes.at(i) << ") = "
        << spinoza::y_product(assembly.theta, inst.magnitudes.at(i), i,
                              signs.at(i))
        << "\n";
  }
  const spinoza::Wide p =
      spinoza::compute_p(assembly.theta, inst.magnitudes, signs);
  const spinoza::Wide s = spinoza::compute_s(signs, inst.magnitudes);
  out << "P = " << to_string(p) << "\n";
  out << (s == p ? "S = P: the assignment is satisfactory"
                 : "S != P: the assignment is not satisfactory")
      << "\n";
  return out.str();
}

struct GenArgs {
  std::size_t n = 3;
  std::size_t psi_len = 36;
  std::uint64_t c_max = 999;
  std::uint64_t seed = 0;
  std::uint64_t count = 1;
  std::size_t label_cap = 20;
  bool no_label = false;
  std::string out_dir;
};

int run_gen(const GenArgs& args) {
  namespace fs = std::filesystem;
  if (!args.no_label && args.n > args.label_cap) {
    throw UsageError("labeling is capped at n <= " + std::to_string(args.label_cap) +
                     "; pass --no-label for larger n");
  }
  fs::create_directories(args.out_dir);
  std::ostringstream manifest;
  manifest << "seed,n,psi_len,c_max,answer,witness_count,file\n";
  for (std::uint64_t i = 0; i < args.count; ++i) {
    const std::uint64_t seed = args.seed + i;  // consecutive seeds per file
    const spinoza::Instance inst =
        spinoza::gen_instance({args.n, args.psi_len, args.c_max, seed});
    std::ostringstream name;
    name << "inst_n" << args.n << "_s" << seed << ".txt";
    spinoza::write_instance_file(fs::path(args.out_dir) / name.str(), inst);
    std::string answer = "unknown";
    std::string witness_count;
    if (!args.no_label) {
      const spinoza::LabeledInstance labeled =
          spinoza::label_instance(inst, args.label_cap);
      answer = labeled.satisfiable ? "yes" : "no";
      witness_count = std::to_string(labeled.witness_count);
    }
    manifest << seed << ',' << args.n << ',' << args.psi_len << ',' << args.c_max
             << ',' << answer << ',' << witness_count << ',' << name.str() << '\n';
  }
  spinoza::write_text_file(fs::path(args.out_dir) / "manifest.csv", manifest.str());
  std::cout << "wrote " << args.count << " instance(s) and manifest.csv to "
            << args.out_dir << "\n";
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"verifier, exhaustive solver, generator and scaling bench for "
               "the cyclic letter-sequence sign-assignment problem"};
  app.require_subcommand(1);

  std::string instance_path;
  std::string delta_text;

  auto* cmd_verify = app.add_subcommand(
      "verify", "check one witness against an instance and print the report");
  cmd_verify->add_option("instance", instance_path, "instance file (two lines)")
      ->required();
  cmd_verify
      ->add_option("--delta", delta_text,
                   "witness as comma-separated signed integers, |delta_i| = c_i")
      ->required();

  auto* cmd_explain = app.add_subcommand(
      "explain", "print the staged construction trace for one witness");
  cmd_explain->add_option("instance", instance_path, "instance file")->required();
  cmd_explain->add_option("--delta", delta_text, "witness to trace")->required();

  unsigned workers = 1;
  std::uint64_t budget = 0;
  std::string witness_out;
  auto* cmd_solve = app.add_subcommand(
      "solve", "exhaustively scan all sign assignments for an instance");
  cmd_solve->add_option("instance", instance_path, "instance file")->required();
  cmd_solve->add_option("--workers", workers, "worker threads (default 1)")
      ->check(CLI::Range(1u, 256u));
  cmd_solve->add_option("--budget", budget,
                        "assignment cap; hitting it aborts the scan (0 = none)");
  cmd_solve->add_option("--witness-out", witness_out,
                        "write the found witness to this file");

  GenArgs gen_args;
  auto* cmd_gen = app.add_subcommand(
      "gen", "generate seeded instances with a ground-truth manifest");
  cmd_gen->add_option("--n", gen_args.n, "magnitudes per instance")->required();
  cmd_gen->add_option("--psi-len", gen_args.psi_len, "letter sequence length");
  cmd_gen->add_option("--c-max", gen_args.c_max, "largest magnitude");
  cmd_gen->add_option("--seed", gen_args.seed, "seed of the first instance")
      ->required();
  cmd_gen->add_option("--count", gen_args.count, "number of instances");
  cmd_gen->add_option("--out", gen_args.out_dir, "output directory")->required();
  cmd_gen->add_option("--label-cap", gen_args.label_cap,
                      "largest n that may be labeled by full scan");
  cmd_gen->add_flag("--no-label", gen_args.no_label,
                    "skip ground-truth labeling");

  int n_min = 10;
  int n_max = 16;
  int trials = 5;
  std::uint64_t bench_seed = 1;
  std::string csv_path;
  spinoza::ScalingOptions scaling;
  bool time_parallel = false;
  unsigned bench_workers = 4;
  auto* cmd_bench = app.add_subcommand(
      "bench", "measure verify vs exhaustive-solve cost across n");
  cmd_bench->add_option("--n-min", n_min, "smallest n")->check(CLI::Range(1, 24));
  cmd_bench->add_option("--n-max", n_max, "largest n")->check(CLI::Range(1, 24));
  cmd_bench->add_option("--trials", trials, "trials per n (>= 3)");
  cmd_bench->add_option("--seed", bench_seed, "master seed");
  cmd_bench->add_option("--out", csv_path, "CSV output path")->required();
  cmd_bench->add_option("--psi-len", scaling.psi_len, "letter sequence length");
  cmd_bench->add_option("--c-max", scaling.c_max, "largest magnitude");
  cmd_bench->add_option("--budget", scaling.budget,
                        "assignment cap per solve (0 = none)");
  cmd_bench->add_option("--verify-reps", scaling.verify_reps,
                        "verify repetitions per timing");
  cmd_bench->add_flag("--time-parallel", time_parallel,
                      "also time a parallel solve (extra CSV column)");
  cmd_bench->add_option("--workers", bench_workers,
                        "worker count for --time-parallel");
  cmd_bench->add_flag("--require-unsat", scaling.require_unsat,
                      "retry each cell's seed chain until the instance is "
                      "unsatisfiable");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      return app.exit(e);  // --help
    }
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsageError;
  }

  try {
    if (cmd_verify->parsed()) {
      const spinoza::Instance inst = spinoza::read_instance_file(instance_path);
      const spinoza::SignVector signs = witness_from_flag(delta_text, inst);
      std::cout << spinoza::render_report(spinoza::verify(inst, signs));
      return kExitOk;
    }
    if (cmd_explain->parsed()) {
      const spinoza::Instance inst = spinoza::read_instance_file(instance_path);
      const spinoza::SignVector signs = witness_from_flag(delta_text, inst);
      std::cout << staged_trace(inst, signs);
      return kExitOk;
    }
    if (cmd_solve->parsed()) {
      const spinoza::Instance inst = spinoza::read_instance_file(instance_path);
      const spinoza::Verdict verdict =
          spinoza::solve(inst, {workers, budget});
      std::cout << spinoza::render_verdict(verdict, inst.magnitudes);
      if (verdict.witness.has_value() && !witness_out.empty()) {
        spinoza::write_text_file(
            witness_out,
            spinoza::serialize_witness(*verdict.witness, inst.magnitudes) + "\n");
      }
      return verdict.answer == spinoza::Answer::aborted ? kExitDomainError
                                                        : kExitOk;
    }
    if (cmd_gen->parsed()) {
      return run_gen(gen_args);
    }
    if (cmd_bench->parsed()) {
      scaling.parallel_workers = time_parallel ? bench_workers : 0;
      const std::vector<spinoza::BenchRecord> records =
          spinoza::run_scaling(n_min, n_max, trials, bench_seed, scaling);
      spinoza::emit_csv(records, csv_path);
      std::cout << "wrote " << records.size() << " records to " << csv_path
                << "\n";
      try {
        std::cout << spinoza::render_summary(spinoza::fit_growth(records));
      } catch (const std::invalid_argument& e) {
        std::cout << "no growth summary: " << e.what() << "\n";
      }
      return kExitOk;
    }
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsageError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitDomainError;
  }
  return kExitUsageError;
}
