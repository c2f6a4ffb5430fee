#pragma once

#include <stdexcept>
#include <string>

namespace opslash {

// Incompatible dimensions anywhere in the operator/matrix layer.
struct ShapeError : std::runtime_error {
  explicit ShapeError(const std::string& msg) : std::runtime_error(msg) {}
};

// A request outside the defined algebra: undefined element products,
// unsupported adjoints, non-triangular solves, cyclic graphs.
struct DomainError : std::runtime_error {
  explicit DomainError(const std::string& msg) : std::runtime_error(msg) {}
};

// Malformed graph or network config files; message carries line/field info.
struct ParseError : std::runtime_error {
  explicit ParseError(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace opslash
