#pragma once

#include <stdexcept>
#include <string>

namespace cutlab {

// Numeric values match cutlab_status in cutlab.h.
enum class ErrorCode {
  kInvalidArgument = 1,
  kInfeasible = 2,
  kPrecondition = 3,
  kSizeCap = 4,
  kEncodingFailed = 5,
  kIo = 6,
  kInconsistentOracle = 7,
  kInternal = 99,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& message) {
  throw Error(code, message);
}

inline void require(bool condition, ErrorCode code, const std::string& message) {
  if (!condition) fail(code, message);
}

}  // namespace cutlab
