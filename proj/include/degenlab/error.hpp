#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace degenlab {

enum class ErrorCode {
  kMalformed,        // degree bookkeeping or shape violated
  kNotCohenMacaulay, // operation needs a matrix-factorization partner
  kMixedRings,
  kUnsupported,
  kInconsistent,     // internal cross-check failed
  kPrecondition,
  kSupportBound,
  kData,             // catalog data failed verification
  kParse,
  kIo,
};

const char* to_string(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}
  Error(ErrorCode code, const std::string& message, std::vector<std::string> details)
      : std::runtime_error(message), code_(code), details_(std::move(details)) {}

  ErrorCode code() const noexcept { return code_; }
  const std::vector<std::string>& details() const noexcept { return details_; }

 private:
  ErrorCode code_;
  std::vector<std::string> details_;
};

}  // namespace degenlab
