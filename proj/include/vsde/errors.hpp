#pragma once

#include <stdexcept>
#include <string>

namespace vsde {

// Invalid arguments are reported with std::invalid_argument; the types below
// cover the failure classes callers need to tell apart.

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class TruncatedInput : public IoError {
 public:
  using IoError::IoError;
};

class ConfigError : public std::runtime_error {
 public:
  ConfigError(std::string key, const std::string& message)
      : std::runtime_error("config key '" + key + "': " + message),
        key_(std::move(key)) {}

  const std::string& key() const noexcept { return key_; }

 private:
  std::string key_;
};

class DegenerateMask : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class CannotFill : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace vsde
