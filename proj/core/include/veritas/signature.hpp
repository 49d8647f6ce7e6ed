#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace veritas {

struct RelationSymbol {
  std::string name;
  std::size_t arity = 1;

  bool operator==(const RelationSymbol&) const = default;
};

// Relation and constant symbols of the base language. Symbol order is
// significant: encoding refers to relations and constants by index.
class Signature {
 public:
  // Throws ModelError on duplicate, reserved, or malformed names, or arity 0.
  void add_relation(std::string name, std::size_t arity);
  void add_constant(std::string name);

  const std::vector<RelationSymbol>& relations() const { return relations_; }
  const std::vector<std::string>& constants() const { return constants_; }

  std::optional<std::size_t> relation_index(std::string_view name) const;
  std::optional<std::size_t> constant_index(std::string_view name) const;

  // Identifier that is not a keyword (T, x, exists, forall) and not of the
  // reserved variable form v<digits>.
  static bool valid_symbol_name(std::string_view name);

  bool operator==(const Signature&) const = default;

 private:
  void check_fresh(const std::string& name) const;

  std::vector<RelationSymbol> relations_;
  std::vector<std::string> constants_;
};

}  // namespace veritas
