#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace divlat {

enum class ErrorCode {
  EmptyInput,
  NonPositiveElement,
  MeetOutsideSet,
  NotGcdClosed,
  NotDoubleChainGenerator,
  BadFoldCount,
  NonIntegerExponent,
  NonSquare,
  NonSymmetric,
  BadParams,
  ParseError,
};

std::string_view to_string(ErrorCode code);

// All precondition failures surface as this exception; code() identifies
// which contract was broken.
class Error : public std::runtime_error {
public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

private:
  ErrorCode code_;
};

}  // namespace divlat
