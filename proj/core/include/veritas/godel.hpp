#pragma once

#include <optional>

#include "veritas/nat.hpp"
#include "veritas/sentence.hpp"
#include "veritas/signature.hpp"

namespace veritas {

// Structural numbering built on the Cantor pair pi. Sentence tags:
//
//   Base f      -> pi(0, base_code(f))
//   T(n)        -> pi(1, n)
//   !A          -> pi(2, #A)
//   A | B       -> pi(3, pi(#A, #B))
//   A & B       -> pi(4, pi(#A, #B))
//   A -> B      -> pi(5, pi(#A, #B))
//   A <-> B     -> pi(6, pi(#A, #B))
//   exists x...  -> pi(7, 0)
//   forall x...  -> pi(8, 0)
//
// Base-formula tags: equality 0 (pi of the two term codes), relation atom 1
// (pi(relation index, argument codes folded right with sentinel 0)),
// connectives 2-6 in the order above, exists 7 and forall 8 (pi(variable
// index, body)). Term codes: variable i -> pi(0, i), constant j -> pi(1, j),
// element numeral k -> pi(2, k).
//
// The numbering is injective but not surjective: a numeral decodes to nothing
// when a tag is out of range, a payload is malformed, a symbol index does not
// exist in the signature, or the decoded base formula has free variables.

Nat encode(const Sentence& s);
Nat encode_base(const BaseFormula& f);

// Inverse of encode on its image; nullopt means "not a sentence".
std::optional<Sentence> decode(const Nat& code, const Signature& sig);
std::optional<BaseFormula> decode_base(const Nat& code, const Signature& sig);

}  // namespace veritas
