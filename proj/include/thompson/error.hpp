#pragma once

#include <stdexcept>
#include <string>

namespace thompson {

enum class ErrorCode {
  InvalidArgument,
  Parse,
  WordTooShort,
  NotACopy,
  NotInImage,
  ArityTooSmall,
  EmptyClass,
  TooLarge,
};

const char* to_string(ErrorCode code) noexcept;

// All library failures are reported through this exception type; the code
// lets the C layer translate without string matching.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace thompson
