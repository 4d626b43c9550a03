#pragma once

#include <stdexcept>

namespace stro {

struct GeometryError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ModelError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace stro
