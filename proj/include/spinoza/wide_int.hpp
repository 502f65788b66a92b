#pragma once

#include <algorithm>
#include <string>

namespace spinoza {

/// Accumulator type for S and P. A single ten-digit product stays below
/// 9^10 < 2^62, but sums over many terms (and magnitudes near 2^64) get
/// headroom here.
using Wide = __int128;

inline std::string to_string(Wide value) {
  if (value == 0) return "0";
  const bool negative = value < 0;
  unsigned __int128 magnitude =
      negative ? -static_cast<unsigned __int128>(value)
               : static_cast<unsigned __int128>(value);
  std::string out;
  while (magnitude != 0) {
    out.push_back(static_cast<char>('0' + static_cast<int>(magnitude % 10)));
    magnitude /= 10;
  }
  if (negative) out.push_back('-');
  std::reverse(out.begin(), out.end());
  return out;
}

}  // namespace spinoza
