#pragma once

#include <cstdint>
#include <string>
#include <utility>

#include "spinoza/construct.hpp"

namespace spinoza {

/// Digit at cyclic position k of the assembled number (k = 0 aliases the
/// last digit). One modulo reduction per call.
inline int digit_at(const ThetaNumber& theta, std::uint64_t k,
                    OpCounters* counters = nullptr) {
  return theta.digits[cyclic_index(k, theta.digit_count(), counters) - 1] - '0';
}

/// Product of ten consecutive cyclic digits. The window starts at position 1
/// for the first magnitude and at c_i for the rest; the result takes the sign
/// of delta_i. Ten modulo reductions and nine multiplications per call.
inline std::int64_t y_product(const ThetaNumber& theta, std::uint64_t c_i,
                              std::size_t i, Sign delta_sign,
                              OpCounters* counters = nullptr) {
  if (i < 1) throw std::invalid_argument("y_product index is 1-based");
  const std::uint64_t start = (i == 1) ? 1 : c_i;
  std::int64_t product = digit_at(theta, start, counters);
  for (int k = 1; k <= 9; ++k) {
    product *= digit_at(theta, start + k, counters);
    if (counters != nullptr) ++counters->multiplications;
  }
  return delta_sign == Sign::minus ? -product : product;
}

/// S: the sum of the signed magnitudes.
inline Wide compute_s(const SignVector& signs, const MagnitudeTuple& c,
                      OpCounters* counters = nullptr) {
  if (signs.size() != c.size()) {
    throw WitnessLengthError(c.size(), signs.size());
  }
  Wide sum = delta_value(signs, c, 1);
  for (std::size_t i = 2; i <= c.size(); ++i) {
    sum += delta_value(signs, c, i);
    if (counters != nullptr) ++counters->additions;
  }
  return sum;
}

/// P: the sum of the signed ten-digit products, negated once more when the
/// assembled number is negative.
inline Wide compute_p(const ThetaNumber& theta, const MagnitudeTuple& c,
                      const SignVector& signs, OpCounters* counters = nullptr) {
  if (signs.size() != c.size()) {
    throw WitnessLengthError(c.size(), signs.size());
  }
  Wide sum = y_product(theta, c.at(1), 1, signs.at(1), counters);
  for (std::size_t i = 2; i <= c.size(); ++i) {
    sum += y_product(theta, c.at(i), i, signs.at(i), counters);
    if (counters != nullptr) ++counters->additions;
  }
  return theta.negative ? -sum : sum;
}

/// One checked assignment: the two totals, the assembled number, the verdict
/// and the exact operation counts.
struct VerifyReport {
  Wide s_value = 0;
  Wide p_value = 0;
  ThetaNumber theta;
  bool satisfied = false;
  bool zero_digit_warning = false;
  OpCounters counters;

  friend bool operator==(const VerifyReport&, const VerifyReport&) = default;
};

/// The polynomial-time checker: select letters, build the template, assemble,
/// then compare S with P. Performs exactly 11n modulo reductions per call
/// (n while selecting letters, ten per product window); no shortcuts, so the
/// counters stay meaningful.
inline VerifyReport verify(const Instance& inst, const SignVector& signs) {
  validate_witness(inst, signs);
  OpCounters counters;
  const LetterSelection picked = select_letters(inst, &counters);
  const ThetaTemplate tpl = build_template(picked, &counters);
  Assembly assembly = assemble(tpl, signs, inst.magnitudes, &counters);
  const Wide s = compute_s(signs, inst.magnitudes, &counters);
  const Wide p = compute_p(assembly.theta, inst.magnitudes, signs, &counters);
  VerifyReport report;
  report.s_value = s;
  report.p_value = p;
  report.theta = std::move(assembly.theta);
  report.satisfied = (s == p);
  report.zero_digit_warning = assembly.zero_digit_warning;
  report.counters = counters;
  return report;
}

/// key=value rendering consumed by the CLI and the bench harness.
inline std::string render_report(const VerifyReport& report) {
  std::string out;
  out += "satisfied=";
  out += report.satisfied ? "true" : "false";
  out += "\nS=" + to_string(report.s_value);
  out += "\nP=" + to_string(report.p_value);
  out += "\ntheta=" + std::to_string(report.theta.digit_count());
  out += "\ntheta_negative=";
  out += report.theta.negative ? "true" : "false";
  out += "\ntheta_digits=" + report.theta.digits;
  out += "\nzero_digit_warning=";
  out += report.zero_digit_warning ? "true" : "false";
  out += "\nmod_ops=" + std::to_string(report.counters.modulo);
  out += "\nmul_ops=" + std::to_string(report.counters.multiplications);
  out += "\nadd_ops=" + std::to_string(report.counters.additions);
  out += "\nstring_ops=" + std::to_string(report.counters.string_ops);
  out += '\n';
  return out;
}

}  // namespace spinoza
