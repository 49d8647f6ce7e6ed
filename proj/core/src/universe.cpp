#include "veritas/universe.hpp"

#include <string>

#include "veritas/errors.hpp"

namespace veritas {

Universe referential_closure(const std::vector<Sentence>& seed, const Signature& sig,
                             std::size_t cap) {
  Universe u;
  std::vector<Sentence> work(seed.begin(), seed.end());
  while (!work.empty()) {
    Sentence s = std::move(work.back());
    work.pop_back();
    Nat code = encode(s);
    if (u.members_.count(code)) continue;
    if (u.members_.size() >= cap) {
      throw ClosureCapError("referential closure exceeds cap of " + std::to_string(cap) +
                            " sentences");
    }
    for (Sentence& sub : s.immediate_subsentences()) work.push_back(std::move(sub));
    if (s.kind() == Sentence::Kind::TApp) {
      if (auto referent = decode(s.t_arg(), sig)) work.push_back(std::move(*referent));
    }
    u.members_.emplace(std::move(code), std::move(s));
  }
  return u;
}

}  // namespace veritas
