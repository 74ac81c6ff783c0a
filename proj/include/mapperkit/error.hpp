#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace mapperkit {

enum class ErrorCode {
  InvalidArgument,
  DimensionMismatch,
  ZeroVectorCosine,
  UnmatchedImage,
  AmbiguousMatch,
  GroupTooLarge,
  InvalidOrder,
  StaleNet,
  UnknownColumn,
  CoveringConditionViolated,
  EmptyImage,
  ProvenanceMismatch,
  GraphCloudMismatch,
  UnknownVertex,
  MixedKinds,
  EmptyCollection,
  RaggedRows,
  NonNumericCell,
  UnknownFormat,
  MalformedDocument,
  Io,
};

std::string_view to_string(ErrorCode code) noexcept;

/// Every failure raised by the library. `code()` identifies the contract
/// that was violated; I/O failures are the only non-validation errors.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }
  bool is_io() const noexcept { return code_ == ErrorCode::Io; }

 private:
  ErrorCode code_;
};

}  // namespace mapperkit
