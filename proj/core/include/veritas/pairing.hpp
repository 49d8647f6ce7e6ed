#pragma once

#include <utility>

#include "veritas/nat.hpp"

namespace veritas {

// Cantor pairing pi(a,b) = (a+b)(a+b+1)/2 + b. Bijective on Nat x Nat.
Nat cantor_pair(const Nat& a, const Nat& b);

// Inverse of cantor_pair; total on Nat.
std::pair<Nat, Nat> cantor_unpair(const Nat& c);

}  // namespace veritas
