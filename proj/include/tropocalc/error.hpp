#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace tropo {

enum class ErrorCode {
  DivisionByTropicalZero,
  IndeterminateValue,
  DegenerateInput,
  DimensionMismatch,
  AmbientDimUnsupported,
  InvalidCycle,
  DisconnectedGraph,
  InvalidGraph,
  GenusZero,
  NonZeroDegree,
  NotATree,
  UnmarkedLeaf,
  NotTrivalent,
  NonGenericConfiguration,
  UnsupportedDegree,
  ParseError,
  SchemaError,
  InvalidArgument,
};

/// Stable identifier for an error code, e.g. "DivisionByTropicalZero".
std::string_view error_name(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }
  std::string_view name() const noexcept { return error_name(code_); }

 private:
  ErrorCode code_;
};

/// Text-level failure; `position` is a byte offset into the parsed input.
class ParseError : public Error {
 public:
  ParseError(std::size_t position, const std::string& what)
      : Error(ErrorCode::ParseError, what), position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

}  // namespace tropo
