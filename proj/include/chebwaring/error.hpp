#pragma once

#include <stdexcept>
#include <string>

namespace chebwaring {

enum class ErrorCode {
  invalid_argument = 1,  // precondition violated by the caller
  domain = 2,            // argument outside the formula's domain
  pole = 3,              // a needed denominator vanished
  integrality = 4,       // an exact result that must be integral was not
  parse = 5,
  internal = 6,          // a checked invariant failed
};

const char* to_string(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) {
  throw Error(code, what);
}

inline void require(bool ok, const std::string& what) {
  if (!ok) fail(ErrorCode::invalid_argument, what);
}

}  // namespace chebwaring
