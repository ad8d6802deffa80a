#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace ggx {

enum class ErrorCode {
  kSyntax,
  kUnsupportedGroup,
  kInvalidOrder,
  kInvalidArgument,
  kOrderCapExceeded,
  kBadCayleyFile,
  kBadPermutationFile,
  kClosureCapExceeded,
  kBadVertex,
  kProductCapExceeded,
  kSizeCapExceeded,
  kGraphCapExceeded,
  kCenterNotTrivial,
  kNotAPowerGraph,
  kPreconditionViolated,
  kUnsupportedCenterCase,
  kBadLabel,
  kBadGraphFile,
  kIo,
};

std::string_view to_string(ErrorCode code);

// Every error raised by the library carries the module that produced it.
class Error : public std::runtime_error {
 public:
  Error(std::string module, ErrorCode code, const std::string& message);

  const std::string& module() const noexcept { return module_; }
  ErrorCode code() const noexcept { return code_; }

  // Caps and budgets are configuration limits rather than bad input.
  bool is_limit() const noexcept;

 private:
  std::string module_;
  ErrorCode code_;
};

}  // namespace ggx
