// End-to-end checks against the built CLI binary.
// Usage: cli_tests <path-to-spinoza-binary> <fixtures-dir>

#include <sys/wait.h>
#include <unistd.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

namespace fs = std::filesystem;

namespace {

int g_failures = 0;

struct RunResult {
  int exit_code = -1;
  std::string output;  // stdout and stderr combined
};

RunResult run(const std::string& command) {
  RunResult result;
  FILE* pipe = ::popen((command + " 2>&1").c_str(), "r");
  if (pipe == nullptr) {
    std::cerr << "popen failed for: " << command << "\n";
    std::exit(1);
  }
  char buffer[4096];
  while (std::fgets(buffer, sizeof buffer, pipe) != nullptr) {
    result.output += buffer;
  }
  const int status = ::pclose(pipe);
  result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return result;
}

void expect(bool condition, const std::string& label, const RunResult& result) {
  if (condition) {
    std::cout << "ok: " << label << "\n";
  } else {
    ++g_failures;
    std::cout << "FAILED: " << label << "\n--- exit " << result.exit_code
              << ", output ---\n"
              << result.output << "---\n";
  }
}

bool contains(const std::string& haystack, const std::string& needle) {
  return haystack.find(needle) != std::string::npos;
}

std::string slurp(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

}  // namespace

int main(int argc, char** argv) {
  if (argc != 3) {
    std::cerr << "usage: cli_tests <spinoza-binary> <fixtures-dir>\n";
    return 1;
  }
  const std::string cli = argv[1];
  const fs::path fixtures = argv[2];
  const std::string example1 = (fixtures / "example1.txt").string();
  const std::string example2 = (fixtures / "example2.txt").string();
  const std::string mark19 = (fixtures / "mark19.txt").string();

  const fs::path scratch =
      fs::temp_directory_path() / ("spinoza_cli_" + std::to_string(::getpid()));
  fs::create_directories(scratch);

  // verify
  {
    RunResult r = run(cli + " verify " + example1 + " --delta 10,14,16");
    expect(r.exit_code == 0 && contains(r.output, "satisfied=true") &&
               contains(r.output, "S=40") && contains(r.output, "P=40") &&
               contains(r.output, "mod_ops=33"),
           "verify accepts the example-1 witness", r);
  }
  {
    RunResult r = run(cli + " verify " + example2 + " --delta -45,-12,567,-14,56");
    expect(r.exit_code == 0 && contains(r.output, "satisfied=false") &&
               contains(r.output, "S=552") && contains(r.output, "P=-11040"),
           "verify rejects the example-2 witness", r);
  }
  {
    RunResult r = run(cli + " verify " + example1 + " --delta 10,14");
    expect(r.exit_code == 2, "wrong witness length is a usage error", r);
  }
  {
    RunResult r = run(cli + " verify " + example1 + " --delta 11,14,16");
    expect(r.exit_code == 1 && contains(r.output, "index 1"),
           "witness magnitude mismatch reports the index", r);
  }
  {
    RunResult r = run(cli + " verify " + example1 + " --delta 10,x,16");
    expect(r.exit_code == 2, "malformed witness entry is a usage error", r);
  }
  {
    RunResult r = run(cli + " verify " + (fixtures / "bad_letter.txt").string() +
                      " --delta 10");
    expect(r.exit_code == 1 && contains(r.output, "'j'"),
           "a forbidden letter in the instance is a domain error", r);
  }
  {
    RunResult r = run(cli + " verify " + (scratch / "missing.txt").string() +
                      " --delta 10");
    expect(r.exit_code == 1, "a missing instance file is a domain error", r);
  }

  // explain
  {
    RunResult r = run(cli + " explain " + example1 + " --delta 10,14,16");
    expect(r.exit_code == 0 && contains(r.output, "Λ = o0k0u0") &&
               contains(r.output, "Θ = 150110210") &&
               contains(r.output, "Θ = 15(1)11(1)21(1)") &&
               contains(r.output, "Θ = 151111211") &&
               contains(r.output, "θ = 9") && contains(r.output, "S = 40") &&
               contains(r.output, "Y(c_1) = Y(10) = 10") &&
               contains(r.output, "P = 40"),
           "explain reproduces the example-1 trace", r);
  }
  {
    RunResult r = run(cli + " explain " + example2 + " --delta -45,-12,567,-14,56");
    expect(r.exit_code == 0 && contains(r.output, "Θ = 1201102021040") &&
               contains(r.output, "Θ = 12(-9)11(-3)2(5)21(-5)4(5)") &&
               contains(r.output, "Θ = -1291132521545") &&
               contains(r.output, "θ = 13") && contains(r.output, "S = 552") &&
               contains(r.output, "P = -11040"),
           "explain reproduces the example-2 trace", r);
  }
  {
    RunResult r = run(cli + " explain " + mark19 + " --delta -19");
    expect(r.exit_code == 0 && contains(r.output, "warning") &&
               contains(r.output, "zero digit"),
           "explain warns when a zero digit enters the number", r);
  }

  // solve
  {
    const std::string witness_file = (scratch / "witness.txt").string();
    RunResult r =
        run(cli + " solve " + example1 + " --witness-out " + witness_file);
    expect(r.exit_code == 0 && contains(r.output, "answer=yes") &&
               contains(r.output, "witness=10,14,16") &&
               slurp(witness_file) == "10,14,16\n",
           "solve finds and writes the example-1 witness", r);
  }
  {
    RunResult r = run(cli + " solve " + example2 + " --workers 4");
    expect(r.exit_code == 0 && contains(r.output, "answer=no") &&
               contains(r.output, "assignments_tried=32"),
           "solve exhausts the example-2 space", r);
  }
  {
    RunResult r = run(cli + " solve " + example2 + " --budget 5");
    expect(r.exit_code == 1 && contains(r.output, "answer=aborted"),
           "hitting the budget aborts with exit 1", r);
  }
  {
    RunResult r = run(cli + " solve " + example1 + " --frobnicate");
    expect(r.exit_code == 2, "unknown flags are usage errors", r);
  }
  {
    RunResult r = run(cli);
    expect(r.exit_code == 2, "a missing subcommand is a usage error", r);
  }
  {
    RunResult r = run(cli + " --help");
    expect(r.exit_code == 0 && contains(r.output, "verify"),
           "--help exits cleanly", r);
  }

  // gen
  {
    const std::string dir_a = (scratch / "gen_a").string();
    const std::string dir_b = (scratch / "gen_b").string();
    RunResult r1 = run(cli + " gen --n 3 --seed 42 --count 2 --out " + dir_a);
    RunResult r2 = run(cli + " gen --n 3 --seed 42 --count 2 --out " + dir_b);
    const bool same_bytes =
        slurp(fs::path(dir_a) / "inst_n3_s42.txt") ==
            slurp(fs::path(dir_b) / "inst_n3_s42.txt") &&
        slurp(fs::path(dir_a) / "inst_n3_s43.txt") ==
            slurp(fs::path(dir_b) / "inst_n3_s43.txt") &&
        slurp(fs::path(dir_a) / "manifest.csv") ==
            slurp(fs::path(dir_b) / "manifest.csv");
    const std::string manifest = slurp(fs::path(dir_a) / "manifest.csv");
    expect(r1.exit_code == 0 && r2.exit_code == 0 && same_bytes &&
               contains(manifest, "seed,n,psi_len,c_max,answer,witness_count,file") &&
               std::count(manifest.begin(), manifest.end(), '\n') == 3,
           "gen is reproducible and writes a labeled manifest", r1);
  }
  {
    RunResult r = run(cli + " gen --n 21 --seed 1 --out " +
                      (scratch / "gen_c").string());
    expect(r.exit_code == 2 && contains(r.output, "--no-label"),
           "gen refuses to label beyond the scan cap", r);
  }

  // bench
  {
    const std::string csv = (scratch / "bench.csv").string();
    RunResult r = run(cli + " bench --n-min 5 --n-max 7 --trials 3 --seed 5 " +
                      "--verify-reps 40 --out " + csv);
    const std::string text = slurp(csv);
    expect(r.exit_code == 0 &&
               contains(text, "n,trial,verify_ns,solve_ns,assignments_tried,"
                              "answer,verify_mod_ops") &&
               std::count(text.begin(), text.end(), '\n') == 10 &&
               contains(r.output, "growth summary"),
           "bench writes the CSV grid and a summary", r);
  }
  {
    RunResult r = run(cli + " bench --n-min 8 --n-max 5 --trials 3 --seed 5 "
                            "--out " +
                      (scratch / "bad.csv").string());
    expect(r.exit_code == 1, "an inverted n range is rejected", r);
  }

  fs::remove_all(scratch);
  if (g_failures == 0) {
    std::cout << "all cli checks passed\n";
    return 0;
  }
  std::cout << g_failures << " cli check(s) failed\n";
  return 1;
}
