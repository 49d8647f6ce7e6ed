#pragma once

#include <string>

#include "veritas/errors.hpp"
#include "veritas/sentence.hpp"
#include "veritas/signature.hpp"

namespace veritas {

// Concrete syntax, ASCII. Sentence level:
//
//   sentence := iff
//   iff      := imp ("<->" imp)*          (left associative)
//   imp      := or ("->" or)*
//   or       := and ("|" and)*
//   and      := unary ("&" unary)*
//   unary    := "!" unary | atom
//   atom     := "T(" nat ")" | "exists x. T(x)" | "forall x. T(x)"
//             | "[" base "]" | "(" sentence ")" | base
//
// A bare base sentence is accepted when the atom starts with a token that can
// only open base syntax (a quantifier over v<N>, a term, or a relation name);
// the bracketed form is the canonical one and the printer always emits it.
// Base formulas use the same connective tokens, "forall vN."/"exists vN."
// with maximal scope, "=", relation application, and decimal element
// numerals. "T" and "x" are reserved words.

Sentence parse_sentence(const std::string& text, const Signature& sig);
BaseFormula parse_base_formula(const std::string& text, const Signature& sig);

// Canonical text; parse_sentence(print_sentence(s, sig), sig) == s.
std::string print_sentence(const Sentence& s, const Signature& sig);
std::string print_base_formula(const BaseFormula& f, const Signature& sig);

}  // namespace veritas
