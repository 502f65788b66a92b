#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "spinoza/instance.hpp"
#include "spinoza/reference.hpp"
#include "spinoza/rng.hpp"

namespace spinoza {

struct GenConfig {
  std::size_t n = 1;
  std::size_t psi_len = 36;
  std::uint64_t c_max = 999;
  std::uint64_t seed = 0;
};

/// Seeded instance generation. Draw order is fixed: psi_len letter draws from
/// the 24-letter set, then n magnitude draws uniform in [10, c_max]. The
/// output is a pure function of the config, byte-identical on every platform.
inline Instance gen_instance(const GenConfig& config) {
  if (config.n < 1) throw std::invalid_argument("gen config needs n >= 1");
  if (config.psi_len < 2) throw std::invalid_argument("gen config needs psi_len >= 2");
  if (config.c_max < 10) throw std::invalid_argument("gen config needs c_max >= 10");
  Xorshift64Star rng(config.seed);
  std::string letters;
  letters.reserve(config.psi_len);
  for (std::size_t i = 0; i < config.psi_len; ++i) {
    letters.push_back(kAllowedLetters[rng.bounded(kAllowedLetters.size())]);
  }
  std::vector<std::uint64_t> magnitudes(config.n);
  for (auto& c : magnitudes) {
    c = 10 + rng.bounded(config.c_max - 9);
  }
  return Instance{LetterSequence(std::move(letters)),
                  MagnitudeTuple(std::move(magnitudes))};
}

/// An instance with its ground truth: satisfiable iff at least one of the
/// 2^n assignments checks out, plus the exact number that do.
struct LabeledInstance {
  Instance instance;
  bool satisfiable = false;
  std::uint64_t witness_count = 0;
};

/// Labels by full scan with the naive reference checker. There is no known
/// way to plant a satisfying assignment by construction, so ground truth for
/// fixtures comes from exhausting small instances; the cap keeps that honest.
inline LabeledInstance label_instance(const Instance& inst, std::size_t n_cap = 20) {
  if (inst.n() > n_cap) {
    throw std::invalid_argument("labeling is capped at n <= " + std::to_string(n_cap) +
                                ", got n=" + std::to_string(inst.n()));
  }
  const reference::ScanResult scan = reference::scan_all(inst);
  return LabeledInstance{inst, scan.witness_count > 0, scan.witness_count};
}

}  // namespace spinoza
