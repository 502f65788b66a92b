#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "spinoza/instance.hpp"

namespace fixtures {

// Worked example 1: a satisfiable instance with exactly one witness (the
// all-plus assignment).
inline constexpr const char* kExample1Psi = "sbaaqpollolagkfueskdldfopgrmplozsaeds";
inline const std::vector<std::uint64_t> kExample1C{10, 14, 16};

// Worked example 2: the template is "1201102021040" and no assignment out of
// the 32 satisfies. The letter sequence below places l, k, b, u, d at the
// cyclic positions selected by the magnitudes (19, 12, 21, 14, 4 within a
// 26-letter sequence) and pads the rest with 'a'.
inline constexpr const char* kExample2Psi = "aaadaaaaaaakauaaaalabaaaaa";
inline const std::vector<std::uint64_t> kExample2C{45, 12, 567, 14, 56};
inline constexpr const char* kExample2Template = "1201102021040";

inline spinoza::Instance example1() {
  return spinoza::Instance{spinoza::LetterSequence(kExample1Psi),
                           spinoza::MagnitudeTuple(kExample1C)};
}

inline spinoza::Instance example2() {
  return spinoza::Instance{spinoza::LetterSequence(kExample2Psi),
                           spinoza::MagnitudeTuple(kExample2C)};
}

/// Sign vector from a pattern like "+-+".
inline spinoza::SignVector signs(const std::string& pattern) {
  std::vector<spinoza::Sign> out;
  out.reserve(pattern.size());
  for (char ch : pattern) {
    out.push_back(ch == '-' ? spinoza::Sign::minus : spinoza::Sign::plus);
  }
  return spinoza::SignVector(std::move(out));
}

}  // namespace fixtures
