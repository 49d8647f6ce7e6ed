#pragma once

// Independent pairing oracle for the numbering anchors: triangular numbers by
// iterated addition rather than the closed form the library uses. Linear in
// a+b, so only for small arguments.

#include <utility>

#include "veritas/nat.hpp"

namespace oracle {

inline veritas::Nat pair(unsigned long a, unsigned long b) {
  veritas::Nat triangular = 0;
  for (unsigned long d = 1; d <= a + b; ++d) triangular += d;
  return triangular + b;
}

// Inverse by linear scan over diagonals.
inline std::pair<unsigned long, unsigned long> unpair(unsigned long c) {
  unsigned long w = 0;
  unsigned long triangular = 0;
  while (triangular + (w + 1) <= c) {
    ++w;
    triangular += w;
  }
  unsigned long b = c - triangular;
  return {w - b, b};
}

}  // namespace oracle
