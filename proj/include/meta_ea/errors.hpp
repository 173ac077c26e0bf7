#pragma once

#include <stdexcept>

namespace meta_ea {

/// Invalid configuration, bad arguments, unknown names.
struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Malformed chromosome or config text.
struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

} // namespace meta_ea
