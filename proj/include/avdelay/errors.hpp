#pragma once

#include <stdexcept>
#include <string>

namespace avdelay {

// Invalid inputs, broken invariants, malformed files. CLI maps this to exit 1.
class ValidationError : public std::invalid_argument {
 public:
  explicit ValidationError(const std::string& what) : std::invalid_argument(what) {}
};

// Filesystem and stream failures. CLI maps this to exit 2.
class IoError : public std::runtime_error {
 public:
  explicit IoError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace avdelay
