#pragma once

#include <stdexcept>
#include <string>

namespace biclique {

enum class ErrorCode {
  kInvalidArgument = 1,
  kParse = 2,
  kIo = 3,
  kNoBiclique = 4,
  kOracleGuard = 5,
  kOverflow = 6,
};

// All library failures surface as this exception; the C layer maps `code()`
// onto its integer status values.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what) : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace biclique
