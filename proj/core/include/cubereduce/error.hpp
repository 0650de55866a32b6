#pragma once

#include <stdexcept>
#include <string>

namespace cubereduce {

// Error categories map 1:1 onto CLI exit codes: usage=1, data=2, internal=3.
enum class ErrorCategory { Usage = 1, Data = 2, Internal = 3 };

class Error : public std::runtime_error {
 public:
  Error(ErrorCategory category, const std::string& message)
      : std::runtime_error(message), category_(category) {}

  ErrorCategory category() const noexcept { return category_; }

 private:
  ErrorCategory category_;
};

// Bad invocation: contradictory flags, invalid configuration values.
class UsageError : public Error {
 public:
  explicit UsageError(const std::string& message) : Error(ErrorCategory::Usage, message) {}
};

// Bad input data: malformed files, unknown modalities, inconsistent tables.
class DataError : public Error {
 public:
  explicit DataError(const std::string& message) : Error(ErrorCategory::Data, message) {}
};

inline const char* category_name(ErrorCategory category) {
  switch (category) {
    case ErrorCategory::Usage: return "usage";
    case ErrorCategory::Data: return "data";
    case ErrorCategory::Internal: return "internal";
  }
  return "internal";
}

}  // namespace cubereduce
