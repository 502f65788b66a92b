#pragma once

#include <charconv>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "spinoza/counters.hpp"
#include "spinoza/wide_int.hpp"

namespace spinoza {

/// The 24 usable letters: lowercase a..z without j and t, so that no
/// alphabet ordinal contains a zero digit.
inline constexpr std::string_view kAllowedLetters = "abcdefghiklmnopqrsuvwxyz";

inline bool is_allowed_letter(char ch) {
  return ch >= 'a' && ch <= 'z' && ch != 'j' && ch != 't';
}

/// Cyclic 1-based index rule: r = a mod m, with r = 0 mapped to m, so index 0
/// aliases the last position. Counts one modulo reduction when counters are
/// attached.
inline std::size_t cyclic_index(std::uint64_t a, std::size_t m,
                                OpCounters* counters = nullptr) {
  if (counters != nullptr) ++counters->modulo;
  const std::uint64_t r = a % m;
  return r == 0 ? m : static_cast<std::size_t>(r);
}

/// The letter sequence the problem reads cyclically. Positions are 1-based;
/// position 0 aliases the last letter. Immutable after construction.
class LetterSequence {
 public:
  explicit LetterSequence(std::string letters) : letters_(std::move(letters)) {
    if (letters_.size() < 2) {
      throw std::invalid_argument("letter sequence needs at least 2 letters, got " +
                                  std::to_string(letters_.size()));
    }
    for (std::size_t i = 0; i < letters_.size(); ++i) {
      if (!is_allowed_letter(letters_[i])) {
        throw std::invalid_argument(std::string("letter '") + letters_[i] +
                                    "' at position " + std::to_string(i + 1) +
                                    " is not allowed (lowercase a-z without j and t)");
      }
    }
  }

  std::size_t length() const { return letters_.size(); }
  char at(std::size_t position) const { return letters_[position - 1]; }
  const std::string& letters() const { return letters_; }

  friend bool operator==(const LetterSequence&, const LetterSequence&) = default;

 private:
  std::string letters_;
};

/// Letter at cyclic position a; a may exceed the sequence length.
inline char cyclic_letter(const LetterSequence& seq, std::uint64_t a,
                          OpCounters* counters = nullptr) {
  return seq.at(cyclic_index(a, seq.length(), counters));
}

/// The magnitudes c_1..c_n, the absolute values of the unknown integers.
/// Every entry has at least two decimal digits.
class MagnitudeTuple {
 public:
  explicit MagnitudeTuple(std::vector<std::uint64_t> values)
      : values_(std::move(values)) {
    if (values_.empty()) {
      throw std::invalid_argument("magnitude tuple must not be empty");
    }
    for (std::size_t i = 0; i < values_.size(); ++i) {
      if (values_[i] < 10) {
        throw std::invalid_argument("magnitude c" + std::to_string(i + 1) + " = " +
                                    std::to_string(values_[i]) +
                                    " must be at least 10");
      }
    }
  }

  std::size_t size() const { return values_.size(); }
  std::uint64_t at(std::size_t i) const { return values_[i - 1]; }
  const std::vector<std::uint64_t>& values() const { return values_; }

  friend bool operator==(const MagnitudeTuple&, const MagnitudeTuple&) = default;

 private:
  std::vector<std::uint64_t> values_;
};

/// One problem input: the letter sequence plus the magnitude tuple.
struct Instance {
  LetterSequence letters;
  MagnitudeTuple magnitudes;

  std::size_t n() const { return magnitudes.size(); }

  friend bool operator==(const Instance&, const Instance&) = default;
};

enum class Sign : std::uint8_t { plus = 0, minus = 1 };

/// A candidate witness: one sign per magnitude, delta_i = sign_i * c_i.
class SignVector {
 public:
  explicit SignVector(std::vector<Sign> signs) : signs_(std::move(signs)) {
    if (signs_.empty()) {
      throw std::invalid_argument("sign vector must not be empty");
    }
  }

  static SignVector all_plus(std::size_t n) {
    return SignVector(std::vector<Sign>(n, Sign::plus));
  }

  std::size_t size() const { return signs_.size(); }
  Sign at(std::size_t i) const { return signs_[i - 1]; }
  bool is_negative(std::size_t i) const { return at(i) == Sign::minus; }
  const std::vector<Sign>& signs() const { return signs_; }

  friend bool operator==(const SignVector&, const SignVector&) = default;

 private:
  std::vector<Sign> signs_;
};

/// delta_i = sign_i * c_i.
inline Wide delta_value(const SignVector& signs, const MagnitudeTuple& c,
                        std::size_t i) {
  const Wide magnitude = static_cast<Wide>(c.at(i));
  return signs.is_negative(i) ? -magnitude : magnitude;
}

class WitnessLengthError : public std::invalid_argument {
 public:
  WitnessLengthError(std::size_t expected, std::size_t actual)
      : std::invalid_argument("witness has " + std::to_string(actual) +
                              " entries but the instance has n=" +
                              std::to_string(expected)),
        expected_(expected),
        actual_(actual) {}

  std::size_t expected() const { return expected_; }
  std::size_t actual() const { return actual_; }

 private:
  std::size_t expected_;
  std::size_t actual_;
};

class WitnessMagnitudeError : public std::invalid_argument {
 public:
  WitnessMagnitudeError(std::size_t index, std::uint64_t expected,
                        std::string actual)
      : std::invalid_argument("witness magnitude mismatch at index " +
                              std::to_string(index) + ": |" + actual +
                              "| != " + std::to_string(expected)),
        index_(index) {}

  std::size_t index() const { return index_; }

 private:
  std::size_t index_;
};

inline void validate_witness(const Instance& inst, const SignVector& signs) {
  if (signs.size() != inst.n()) {
    throw WitnessLengthError(inst.n(), signs.size());
  }
}

namespace detail {

inline std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) {
    s.remove_prefix(1);
  }
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) {
    s.remove_suffix(1);
  }
  return s;
}

inline std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= s.size(); ++i) {
    if (i == s.size() || s[i] == sep) {
      parts.push_back(s.substr(start, i - start));
      start = i + 1;
    }
  }
  return parts;
}

inline std::uint64_t parse_natural(std::string_view token) {
  if (token.empty()) {
    throw std::invalid_argument("empty magnitude token");
  }
  std::uint64_t value = 0;
  const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc{} || ptr != token.data() + token.size()) {
    throw std::invalid_argument("malformed magnitude token '" + std::string(token) + "'");
  }
  return value;
}

}  // namespace detail

/// Parses the two-line instance format: letters on line one, comma-separated
/// magnitudes on line two. Whitespace around tokens is ignored; anything
/// beyond the two lines must be blank.
inline Instance parse_instance(std::string_view text) {
  const std::vector<std::string_view> lines = detail::split(text, '\n');
  if (lines.size() < 2) {
    throw std::invalid_argument("instance text needs two lines (letters, magnitudes)");
  }
  for (std::size_t i = 2; i < lines.size(); ++i) {
    if (!detail::trim(lines[i]).empty()) {
      throw std::invalid_argument("unexpected content on line " + std::to_string(i + 1));
    }
  }
  const std::string_view letters = detail::trim(lines[0]);
  if (letters.empty()) {
    throw std::invalid_argument("line 1 (letter sequence) is empty");
  }
  const std::string_view magnitude_line = detail::trim(lines[1]);
  if (magnitude_line.empty()) {
    throw std::invalid_argument("line 2 (magnitudes) is empty");
  }
  std::vector<std::uint64_t> values;
  for (std::string_view token : detail::split(magnitude_line, ',')) {
    values.push_back(detail::parse_natural(detail::trim(token)));
  }
  return Instance{LetterSequence(std::string(letters)), MagnitudeTuple(std::move(values))};
}

/// Canonical two-line form; parse_instance(serialize_instance(x)) == x.
inline std::string serialize_instance(const Instance& inst) {
  std::string out = inst.letters.letters();
  out.push_back('\n');
  const auto& values = inst.magnitudes.values();
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i > 0) out.push_back(',');
    out += std::to_string(values[i]);
  }
  return out;
}

/// Witness text is comma-separated signed integers, e.g. "-45,-12,567,-14,56".
/// Entry i must satisfy |value_i| = c_i.
inline SignVector parse_witness(std::string_view text, const MagnitudeTuple& c) {
  std::vector<std::string_view> tokens = detail::split(detail::trim(text), ',');
  std::vector<std::pair<bool, std::uint64_t>> entries;  // (negative, magnitude)
  for (std::string_view raw : tokens) {
    std::string_view token = detail::trim(raw);
    if (token.empty()) {
      throw std::invalid_argument("empty witness entry");
    }
    bool negative = false;
    if (token.front() == '-' || token.front() == '+') {
      negative = token.front() == '-';
      token.remove_prefix(1);
    }
    std::uint64_t magnitude = 0;
    const auto [ptr, ec] =
        std::from_chars(token.data(), token.data() + token.size(), magnitude);
    if (ec != std::errc{} || token.empty() || ptr != token.data() + token.size()) {
      throw std::invalid_argument("witness entry '" + std::string(raw) +
                                  "' is not a signed integer");
    }
    entries.emplace_back(negative, magnitude);
  }
  if (entries.size() != c.size()) {
    throw WitnessLengthError(c.size(), entries.size());
  }
  std::vector<Sign> signs;
  signs.reserve(entries.size());
  for (std::size_t i = 0; i < entries.size(); ++i) {
    const auto& [negative, magnitude] = entries[i];
    if (magnitude != c.at(i + 1)) {
      throw WitnessMagnitudeError(i + 1, c.at(i + 1),
                                  (negative ? "-" : "") + std::to_string(magnitude));
    }
    signs.push_back(negative ? Sign::minus : Sign::plus);
  }
  return SignVector(std::move(signs));
}

inline std::string serialize_witness(const SignVector& signs, const MagnitudeTuple& c) {
  if (signs.size() != c.size()) {
    throw WitnessLengthError(c.size(), signs.size());
  }
  std::string out;
  for (std::size_t i = 1; i <= c.size(); ++i) {
    if (i > 1) out.push_back(',');
    if (signs.is_negative(i)) out.push_back('-');
    out += std::to_string(c.at(i));
  }
  return out;
}

}  // namespace spinoza
