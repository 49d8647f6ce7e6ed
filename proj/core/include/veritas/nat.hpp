#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <string>

namespace veritas {

// Arbitrary-precision natural number. All code in this library keeps Nat
// values non-negative.
using Nat = mpz_class;

std::string to_decimal(const Nat& n);

// Strict decimal parse: digits only, no sign, no whitespace.
std::optional<Nat> nat_from_decimal(const std::string& text);

std::optional<std::uint64_t> to_u64(const Nat& n);

}  // namespace veritas
