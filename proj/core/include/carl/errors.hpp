#pragma once

#include <stdexcept>
#include <string>

namespace carl {

// Malformed input file; the message names the offending key and line.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Parameter or state violating a documented invariant.
class ValidationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Integration produced a non-finite state component.
class BlowupError : public std::runtime_error {
 public:
  BlowupError(const std::string& what, double time)
      : std::runtime_error(what), time_(time) {}
  double time() const noexcept { return time_; }

 private:
  double time_;
};

}  // namespace carl
