#include "ggx/error.hpp"

namespace ggx {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::kSyntax: return "SyntaxError";
    case ErrorCode::kUnsupportedGroup: return "UnsupportedGroup";
    case ErrorCode::kInvalidOrder: return "InvalidOrder";
    case ErrorCode::kInvalidArgument: return "InvalidArgument";
    case ErrorCode::kOrderCapExceeded: return "OrderCapExceeded";
    case ErrorCode::kBadCayleyFile: return "BadCayleyFile";
    case ErrorCode::kBadPermutationFile: return "BadPermutationFile";
    case ErrorCode::kClosureCapExceeded: return "ClosureCapExceeded";
    case ErrorCode::kBadVertex: return "BadVertex";
    case ErrorCode::kProductCapExceeded: return "ProductCapExceeded";
    case ErrorCode::kSizeCapExceeded: return "SizeCapExceeded";
    case ErrorCode::kGraphCapExceeded: return "GraphCapExceeded";
    case ErrorCode::kCenterNotTrivial: return "CenterNotTrivial";
    case ErrorCode::kNotAPowerGraph: return "NotAPowerGraph";
    case ErrorCode::kPreconditionViolated: return "PreconditionViolated";
    case ErrorCode::kUnsupportedCenterCase: return "UnsupportedCenterCase";
    case ErrorCode::kBadLabel: return "BadLabel";
    case ErrorCode::kBadGraphFile: return "BadGraphFile";
    case ErrorCode::kIo: return "IoError";
  }
  return "UnknownError";
}

Error::Error(std::string module, ErrorCode code, const std::string& message)
    : std::runtime_error(module + ": " + std::string(to_string(code)) + ": " + message),
      module_(std::move(module)),
      code_(code) {}

bool Error::is_limit() const noexcept {
  switch (code_) {
    case ErrorCode::kOrderCapExceeded:
    case ErrorCode::kClosureCapExceeded:
    case ErrorCode::kProductCapExceeded:
    case ErrorCode::kSizeCapExceeded:
    case ErrorCode::kGraphCapExceeded:
      return true;
    default:
      return false;
  }
}

}  // namespace ggx
