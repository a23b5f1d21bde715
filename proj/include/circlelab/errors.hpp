#pragma once

#include <stdexcept>
#include <string>

namespace circlelab {

// Enumeration or memory guard exceeded.
class resource_limit_error : public std::runtime_error {
 public:
  explicit resource_limit_error(const std::string& what) : std::runtime_error(what) {}
};

// Quadrature or other numeric procedure failed to converge.
class numeric_error : public std::runtime_error {
 public:
  explicit numeric_error(const std::string& what) : std::runtime_error(what) {}
};

// Input outside the supported regime (e.g. even n where only odd n is treated).
class unsupported_input_error : public std::invalid_argument {
 public:
  explicit unsupported_input_error(const std::string& what) : std::invalid_argument(what) {}
};

}  // namespace circlelab
