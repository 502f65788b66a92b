#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "spinoza/instance.hpp"

namespace spinoza {

/// Alphabet ordinal, a=1 .. z=26. Only the 24 allowed letters are accepted;
/// the excluded j and t are exactly the ordinals (10, 20) that would put a
/// zero digit into the template.
inline int letter_ordinal(char letter) {
  if (!is_allowed_letter(letter)) {
    throw std::invalid_argument(std::string("letter '") + letter +
                                "' has no ordinal here (lowercase a-z without j and t)");
  }
  return letter - 'a' + 1;
}

/// The letters picked at the cyclic positions c_1..c_n, each carrying a zero
/// marker. Rendered as e.g. "o0k0u0".
class LetterSelection {
 public:
  explicit LetterSelection(std::string letters) : letters_(std::move(letters)) {
    if (letters_.empty()) {
      throw std::invalid_argument("letter selection must not be empty");
    }
  }

  std::size_t size() const { return letters_.size(); }
  char at(std::size_t i) const { return letters_[i - 1]; }
  const std::string& letters() const { return letters_; }

  std::string render() const {
    std::string out;
    out.reserve(letters_.size() * 2);
    for (char ch : letters_) {
      out.push_back(ch);
      out.push_back('0');
    }
    return out;
  }

  friend bool operator==(const LetterSelection&, const LetterSelection&) = default;

 private:
  std::string letters_;
};

/// Picks the letter at cyclic position c_i for every magnitude; one modulo
/// reduction per entry.
inline LetterSelection select_letters(const Instance& inst,
                                      OpCounters* counters = nullptr) {
  std::string picked;
  picked.reserve(inst.n());
  for (std::size_t i = 1; i <= inst.n(); ++i) {
    picked.push_back(cyclic_letter(inst.letters, inst.magnitudes.at(i), counters));
    if (counters != nullptr) ++counters->string_ops;
  }
  return LetterSelection(std::move(picked));
}

/// Digit string mu_1 0 mu_2 0 ... mu_n 0: each ordinal followed by one
/// placeholder zero. Since ordinals never contain a zero digit, the zeros
/// are exactly the placeholders.
class ThetaTemplate {
 public:
  /// Validates an existing digit string as a template: digits only, ends in a
  /// placeholder zero, and every run between zeros is an ordinal in [1, 26].
  explicit ThetaTemplate(std::string digits) : digits_(std::move(digits)) {
    if (digits_.empty()) {
      throw std::invalid_argument("template must not be empty");
    }
    if (digits_.back() != '0') {
      throw std::invalid_argument("template must end with a placeholder zero");
    }
    std::size_t run_start = 0;
    for (std::size_t i = 0; i < digits_.size(); ++i) {
      const char ch = digits_[i];
      if (ch < '0' || ch > '9') {
        throw std::invalid_argument(std::string("template character '") + ch +
                                    "' is not a digit");
      }
      if (ch != '0') continue;
      const std::size_t run_length = i - run_start;
      if (run_length == 0 || run_length > 2) {
        throw std::invalid_argument("template ordinal before zero slot " +
                                    std::to_string(zero_slots_.size() + 1) +
                                    " must have one or two digits");
      }
      int ordinal = 0;
      for (std::size_t k = run_start; k < i; ++k) ordinal = ordinal * 10 + (digits_[k] - '0');
      if (ordinal < 1 || ordinal > 26) {
        throw std::invalid_argument("template ordinal " + std::to_string(ordinal) +
                                    " is outside [1, 26]");
      }
      zero_slots_.push_back(i);
      run_start = i + 1;
    }
  }

  const std::string& digits() const { return digits_; }
  std::size_t length() const { return digits_.size(); }
  /// Offsets (0-based) of the placeholder zeros within digits().
  const std::vector<std::size_t>& zero_slots() const { return zero_slots_; }
  std::size_t placeholders() const { return zero_slots_.size(); }

  friend bool operator==(const ThetaTemplate&, const ThetaTemplate&) = default;

 private:
  std::string digits_;
  std::vector<std::size_t> zero_slots_;
};

/// Concatenates decimal(ordinal_i) followed by one placeholder zero for each
/// selected letter.
inline ThetaTemplate build_template(const LetterSelection& selection,
                                    OpCounters* counters = nullptr) {
  std::string digits;
  digits.reserve(selection.size() * 3);
  for (std::size_t i = 1; i <= selection.size(); ++i) {
    digits += std::to_string(letter_ordinal(selection.at(i)));
    digits.push_back('0');
    if (counters != nullptr) ++counters->string_ops;
  }
  return ThetaTemplate(std::move(digits));
}

/// Placeholder replacement: the leading digit of a positive delta, or the
/// negated sum of the first two digits of a negative one (so -45 becomes -9).
/// Positive marks are in [1, 9]; negative marks in [-18, -1].
struct Mark {
  int value = 0;

  bool negative() const { return value < 0; }
  int magnitude() const { return value < 0 ? -value : value; }

  friend bool operator==(const Mark&, const Mark&) = default;
};

inline Mark make_mark(Wide delta, OpCounters* counters = nullptr) {
  const Wide magnitude = delta < 0 ? -delta : delta;
  if (magnitude < 10) {
    throw std::invalid_argument("mark requires |delta| >= 10, got " + to_string(delta));
  }
  const std::string digits = to_string(magnitude);
  const int first = digits[0] - '0';
  if (delta > 0) {
    return Mark{first};
  }
  if (counters != nullptr) ++counters->additions;
  return Mark{-(first + (digits[1] - '0'))};
}

/// The assembled number: explicit sign flag plus the digit array A[1..theta].
/// Never a machine integer; only cyclic digit access is ever needed, and the
/// digit count grows with n.
struct ThetaNumber {
  bool negative = false;
  std::string digits;

  std::size_t digit_count() const { return digits.size(); }

  friend bool operator==(const ThetaNumber&, const ThetaNumber&) = default;
};

/// Full construction record for one assignment. The marked string keeps the
/// bracketed presentation ("15(1)11(-5)21(1)"); zero_digit_warning reports
/// that a two-digit mark spliced a literal 0 into the digits, which only
/// happens when a negative delta's first two digits sum to exactly ten.
struct Assembly {
  ThetaNumber theta;
  std::vector<Mark> marks;
  std::string marked;
  std::size_t negative_marks = 0;
  bool zero_digit_warning = false;
};

inline Assembly assemble(const ThetaTemplate& tpl, const SignVector& signs,
                         const MagnitudeTuple& c, OpCounters* counters = nullptr) {
  const std::size_t n = c.size();
  if (signs.size() != n || tpl.placeholders() != n) {
    throw std::invalid_argument("assembly needs matching lengths: template has " +
                                std::to_string(tpl.placeholders()) +
                                " placeholders, witness " + std::to_string(signs.size()) +
                                " signs, tuple " + std::to_string(n) + " magnitudes");
  }
  const std::string& t = tpl.digits();
  Assembly out;
  out.marks.reserve(n);
  out.theta.digits.reserve(t.size() + n);
  std::size_t previous = 0;
  for (std::size_t i = 1; i <= n; ++i) {
    const std::size_t slot = tpl.zero_slots()[i - 1];
    const Mark mark = make_mark(delta_value(signs, c, i), counters);
    out.marks.push_back(mark);
    if (mark.negative()) ++out.negative_marks;
    out.theta.digits.append(t, previous, slot - previous);
    out.theta.digits += std::to_string(mark.magnitude());
    out.marked.append(t, previous, slot - previous);
    out.marked.push_back('(');
    out.marked += std::to_string(mark.value);
    out.marked.push_back(')');
    previous = slot + 1;
    if (counters != nullptr) ++counters->string_ops;
  }
  if (counters != nullptr) ++counters->string_ops;  // final sign strip / join
  out.theta.negative = (out.negative_marks % 2) == 1;
  out.zero_digit_warning = out.theta.digits.find('0') != std::string::npos;
  return out;
}

/// Assembled number alone; placeholder i replaced by the decimal magnitude of
/// mark i, sign flag from the parity of negative marks.
inline ThetaNumber assemble_theta(const ThetaTemplate& tpl, const SignVector& signs,
                                  const MagnitudeTuple& c,
                                  OpCounters* counters = nullptr) {
  return assemble(tpl, signs, c, counters).theta;
}

}  // namespace spinoza
