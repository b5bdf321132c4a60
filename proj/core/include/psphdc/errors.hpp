#pragma once

#include <stdexcept>
#include <string>

namespace psphdc {

// CLI process exit codes. Library errors map onto these in tools/.
enum class ExitCode : int {
  ok = 0,
  config_error = 2,
  data_error = 3,
  numeric_error = 4,
};

// Invalid configuration: bad config file, bad flag combination, bad graph spec.
class ConfigError : public std::runtime_error {
 public:
  explicit ConfigError(const std::string& msg) : std::runtime_error(msg) {}
};

// Invalid or inconsistent input data: unreadable CSV, missing columns,
// non-numeric cells, empty classes, degenerate fold columns.
class DataError : public std::runtime_error {
 public:
  explicit DataError(const std::string& msg) : std::runtime_error(msg) {}
};

// Numeric failure during computation: non-finite loss, fingerprint mismatch.
class NumericError : public std::runtime_error {
 public:
  explicit NumericError(const std::string& msg) : std::runtime_error(msg) {}
};

// Hypervector operands of incompatible length.
class DimensionError : public std::invalid_argument {
 public:
  explicit DimensionError(const std::string& msg) : std::invalid_argument(msg) {}
};

// Aggregation over an empty set; the caller decides the semantics.
class EmptyBundleError : public std::invalid_argument {
 public:
  explicit EmptyBundleError(const std::string& msg) : std::invalid_argument(msg) {}
};

}  // namespace psphdc
