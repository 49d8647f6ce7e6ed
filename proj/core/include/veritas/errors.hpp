#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace veritas {

// Syntax error with a byte offset into the input text.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::string message, std::size_t position)
      : std::runtime_error(message + " (at offset " + std::to_string(position) + ")"),
        position_(position) {}

  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

// Invalid model description (empty domain, arity mismatch, ...).
class ModelError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Referential closure exceeded its configured size cap.
class ClosureCapError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A sentence handed to the fixed-point valuation references codes whose
// referents are not in the universe.
class MissingReferenceError : public std::runtime_error {
 public:
  MissingReferenceError(std::string message, std::vector<std::string> missing)
      : std::runtime_error(std::move(message)), missing_(std::move(missing)) {}

  const std::vector<std::string>& missing() const { return missing_; }

 private:
  std::vector<std::string> missing_;
};

}  // namespace veritas
