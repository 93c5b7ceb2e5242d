#pragma once

#include <stdexcept>
#include <string>

namespace eit {

/// Precondition or index-range violation in a physics routine.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Poles, singular linear systems, step-size underflow.
class NumericalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Configuration text that cannot be turned into a scenario.
class ConfigError : public std::runtime_error {
 public:
  ConfigError(const std::string& message, int line, int column)
      : std::runtime_error("line " + std::to_string(line) + ", column " +
                           std::to_string(column) + ": " + message),
        line_(line),
        column_(column) {}

  int line() const noexcept { return line_; }
  int column() const noexcept { return column_; }

 private:
  int line_;
  int column_;
};

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace eit
