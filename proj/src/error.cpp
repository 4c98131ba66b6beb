#include "degenlab/error.hpp"

namespace degenlab {

const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::kMalformed: return "malformed";
    case ErrorCode::kNotCohenMacaulay: return "not-certified-cohen-macaulay";
    case ErrorCode::kMixedRings: return "mixed-rings";
    case ErrorCode::kUnsupported: return "unsupported";
    case ErrorCode::kInconsistent: return "internal-inconsistency";
    case ErrorCode::kPrecondition: return "precondition";
    case ErrorCode::kSupportBound: return "support-bound-exceeded";
    case ErrorCode::kData: return "data";
    case ErrorCode::kParse: return "parse";
    case ErrorCode::kIo: return "io";
  }
  return "unknown";
}

}  // namespace degenlab
