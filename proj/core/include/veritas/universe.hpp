#pragma once

#include <map>
#include <vector>

#include "veritas/godel.hpp"
#include "veritas/sentence.hpp"

namespace veritas {

inline constexpr std::size_t kDefaultClosureCap = 4096;

// A finite, duplicate-free carrier of sentences, closed under immediate
// subsentences and under dereferencing of T-application numerals. Keyed by
// code, ascending.
class Universe {
 public:
  const std::map<Nat, Sentence>& members() const { return members_; }
  std::size_t size() const { return members_.size(); }
  bool contains_code(const Nat& code) const { return members_.count(code) > 0; }
  bool contains(const Sentence& s) const { return contains_code(encode(s)); }

 private:
  friend Universe referential_closure(const std::vector<Sentence>&, const Signature&, std::size_t);
  std::map<Nat, Sentence> members_;
};

// Smallest superset of the seed closed under subsentences and under decoding
// of T-application arguments. Terminates: a decodable argument always codes a
// sentence with a strictly smaller code. Throws ClosureCapError when the
// closure would exceed cap members.
Universe referential_closure(const std::vector<Sentence>& seed, const Signature& sig,
                             std::size_t cap = kDefaultClosureCap);

}  // namespace veritas
