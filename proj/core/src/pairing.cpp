#include "veritas/pairing.hpp"

namespace veritas {

Nat cantor_pair(const Nat& a, const Nat& b) {
  Nat s = a + b;
  return s * (s + 1) / 2 + b;
}

std::pair<Nat, Nat> cantor_unpair(const Nat& c) {
  // Diagonal index w = floor((sqrt(8c+1) - 1) / 2).
  Nat r = sqrt(8 * c + 1);
  Nat w = (r - 1) / 2;
  Nat b = c - w * (w + 1) / 2;
  Nat a = w - b;
  return {a, b};
}

}  // namespace veritas
