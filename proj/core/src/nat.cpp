#include "veritas/nat.hpp"

#include <limits>

namespace veritas {

std::string to_decimal(const Nat& n) { return n.get_str(10); }

std::optional<Nat> nat_from_decimal(const std::string& text) {
  if (text.empty()) return std::nullopt;
  for (char c : text) {
    if (c < '0' || c > '9') return std::nullopt;
  }
  return Nat(text, 10);
}

std::optional<std::uint64_t> to_u64(const Nat& n) {
  static_assert(sizeof(unsigned long) == 8, "expects 64-bit unsigned long");
  if (n < 0 || !n.fits_ulong_p()) return std::nullopt;
  return static_cast<std::uint64_t>(n.get_ui());
}

}  // namespace veritas
