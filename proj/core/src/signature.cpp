#include "veritas/signature.hpp"

#include <cctype>

#include "veritas/errors.hpp"

namespace veritas {

namespace {

bool is_ident(std::string_view s) {
  if (s.empty()) return false;
  if (!std::isalpha(static_cast<unsigned char>(s[0])) && s[0] != '_') return false;
  for (char c : s) {
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') return false;
  }
  return true;
}

bool is_variable_form(std::string_view s) {
  if (s.size() < 2 || s[0] != 'v') return false;
  for (std::size_t i = 1; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  }
  return true;
}

}  // namespace

bool Signature::valid_symbol_name(std::string_view name) {
  if (!is_ident(name)) return false;
  if (name == "T" || name == "x" || name == "exists" || name == "forall") return false;
  if (is_variable_form(name)) return false;
  return true;
}

void Signature::check_fresh(const std::string& name) const {
  if (!valid_symbol_name(name)) {
    throw ModelError("invalid or reserved symbol name: '" + name + "'");
  }
  if (relation_index(name) || constant_index(name)) {
    throw ModelError("duplicate symbol: '" + name + "'");
  }
}

void Signature::add_relation(std::string name, std::size_t arity) {
  check_fresh(name);
  if (arity == 0) {
    throw ModelError("relation '" + name + "' must have arity >= 1");
  }
  relations_.push_back({std::move(name), arity});
}

void Signature::add_constant(std::string name) {
  check_fresh(name);
  constants_.push_back(std::move(name));
}

std::optional<std::size_t> Signature::relation_index(std::string_view name) const {
  for (std::size_t i = 0; i < relations_.size(); ++i) {
    if (relations_[i].name == name) return i;
  }
  return std::nullopt;
}

std::optional<std::size_t> Signature::constant_index(std::string_view name) const {
  for (std::size_t i = 0; i < constants_.size(); ++i) {
    if (constants_[i] == name) return i;
  }
  return std::nullopt;
}

}  // namespace veritas
