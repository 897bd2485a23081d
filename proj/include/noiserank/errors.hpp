#pragma once

#include <stdexcept>
#include <string>

namespace noiserank {

/// Input violates a documented contract: bad dimensions, out-of-range
/// parameters, malformed or inconsistent data. Mapped to exit code 2 by the
/// CLI.
class ValidationError : public std::runtime_error {
 public:
  explicit ValidationError(const std::string& what) : std::runtime_error(what) {}
};

/// Filesystem or codec failure. Mapped to exit code 3 by the CLI.
class IoError : public std::runtime_error {
 public:
  explicit IoError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace noiserank
