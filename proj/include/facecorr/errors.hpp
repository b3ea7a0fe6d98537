#pragma once

#include <stdexcept>
#include <string>

namespace facecorr {

// Error categories map onto the CLI exit codes:
//   ConfigError -> 1, DataError -> 2, ConvergenceError -> 3.
class ConfigError : public std::runtime_error {
 public:
  explicit ConfigError(const std::string& msg) : std::runtime_error(msg) {}
};

class DataError : public std::runtime_error {
 public:
  explicit DataError(const std::string& msg) : std::runtime_error(msg) {}
};

class ConvergenceError : public std::runtime_error {
 public:
  explicit ConvergenceError(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace facecorr
