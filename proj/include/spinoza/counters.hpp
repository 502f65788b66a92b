#pragma once

#include <cstdint>

namespace spinoza {

/// Operation counts accumulated while checking one assignment.
///
/// The modulo counter is exact: one unit per cyclic index reduction, which
/// makes it the noise-free complexity signal (11n per full verification: n
/// reductions while picking letters, ten per digit-product window). The other
/// counters follow a fixed convention: one multiplication per product step,
/// one addition per sum step (plus one per negative-mark digit sum), and one
/// string op per per-element conversion or splice.
struct OpCounters {
  std::uint64_t modulo = 0;
  std::uint64_t multiplications = 0;
  std::uint64_t additions = 0;
  std::uint64_t string_ops = 0;

  OpCounters& operator+=(const OpCounters& other) {
    modulo += other.modulo;
    multiplications += other.multiplications;
    additions += other.additions;
    string_ops += other.string_ops;
    return *this;
  }

  std::uint64_t total() const {
    return modulo + multiplications + additions + string_ops;
  }

  friend bool operator==(const OpCounters&, const OpCounters&) = default;
};

}  // namespace spinoza
