#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "spinoza/instance.hpp"
#include "spinoza/wide_int.hpp"

namespace spinoza::reference {

// Naive transliteration of the checking procedure, kept deliberately close to
// a pen-and-paper walkthrough: it builds the bracketed mark string, counts
// the literal '-' characters for the sign rule, then strips signs and
// brackets before reading digits. Shares nothing with the optimized pipeline
// beyond the input types. Used to label corpora and as the oracle in tests.

struct Result {
  Wide s = 0;
  Wide p = 0;
  std::string theta_digits;
  bool theta_negative = false;
  bool satisfied = false;
};

inline Result verify(const Instance& inst, const SignVector& signs) {
  const std::string& psi = inst.letters.letters();
  const std::size_t psi_len = psi.size();
  const std::size_t n = inst.n();
  if (signs.size() != n) {
    throw std::invalid_argument("reference verify: witness length mismatch");
  }

  // Bracketed mark string, e.g. "12(-9)11(-3)2(5)21(-5)4(5)".
  std::string marked;
  for (std::size_t i = 1; i <= n; ++i) {
    std::size_t r = inst.magnitudes.at(i) % psi_len;
    if (r == 0) r = psi_len;
    const int ordinal = psi[r - 1] - 'a' + 1;
    marked += std::to_string(ordinal);
    marked.push_back('(');
    const std::string magnitude_digits = std::to_string(inst.magnitudes.at(i));
    if (signs.is_negative(i)) {
      const int digit_sum =
          (magnitude_digits[0] - '0') + (magnitude_digits[1] - '0');
      marked.push_back('-');
      marked += std::to_string(digit_sum);
    } else {
      marked.push_back(magnitude_digits[0]);
    }
    marked.push_back(')');
  }

  // Sign rule: parity of the '-' characters present in the marked string.
  const auto minus_count = std::count(marked.begin(), marked.end(), '-');
  const bool negative = (minus_count % 2) != 0;

  // Remove the '-' signs, then the brackets.
  std::string digits;
  for (const char ch : marked) {
    if (ch != '-' && ch != '(' && ch != ')') digits.push_back(ch);
  }

  const std::size_t theta = digits.size();
  const auto digit = [&](std::uint64_t k) -> Wide {
    std::uint64_t r = k % theta;
    if (r == 0) r = theta;
    return digits[r - 1] - '0';
  };

  Wide p = 0;
  for (std::size_t i = 1; i <= n; ++i) {
    const std::uint64_t start = (i == 1) ? 1 : inst.magnitudes.at(i);
    Wide y = 1;
    for (int k = 0; k < 10; ++k) y *= digit(start + k);
    if (signs.is_negative(i)) y = -y;
    p += y;
  }
  if (negative) p = -p;

  Wide s = 0;
  for (std::size_t i = 1; i <= n; ++i) {
    const Wide magnitude = static_cast<Wide>(inst.magnitudes.at(i));
    s += signs.is_negative(i) ? -magnitude : magnitude;
  }

  return Result{s, p, std::move(digits), negative, s == p};
}

/// Enumeration-order witness for index v: plus before minus, position 1 on
/// the most significant bit. Reimplemented here so the solver's mapping is
/// cross-checked rather than reused.
inline SignVector signs_at_index(std::size_t n, std::uint64_t index) {
  std::vector<Sign> signs(n, Sign::plus);
  for (std::size_t i = 1; i <= n; ++i) {
    if ((index >> (n - i)) & 1u) signs[i - 1] = Sign::minus;
  }
  return SignVector(std::move(signs));
}

struct ScanResult {
  std::uint64_t witness_count = 0;
  std::optional<std::uint64_t> first_index;
};

/// Full scan over all 2^n assignments with the naive checker.
inline ScanResult scan_all(const Instance& inst) {
  const std::size_t n = inst.n();
  if (n > 62) {
    throw std::invalid_argument("reference scan limited to n <= 62");
  }
  ScanResult out;
  const std::uint64_t total = std::uint64_t{1} << n;
  for (std::uint64_t v = 0; v < total; ++v) {
    if (verify(inst, signs_at_index(n, v)).satisfied) {
      ++out.witness_count;
      if (!out.first_index.has_value()) out.first_index = v;
    }
  }
  return out;
}

}  // namespace spinoza::reference
