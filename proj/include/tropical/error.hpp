#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace tropical {

enum class ErrorCode {
  UnknownSemiring,
  InvalidBounds,
  IllegalElement,
  StarUndefined,
  DimensionMismatch,
  DescriptorMismatch,
  NoStabilization,
  ShapeViolation,
  NotSymmetric,
  NotCommutative,
  IndexOutOfRange,
  InvalidPath,
  OracleScaleExceeded,
  WrongDescriptor,
  NotPositive,
  EmptyInterval,
  ParseError,
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

/// Raised when a scalar closure is requested outside its domain.
///
/// `pivot` is the 1-based index of the diagonal position whose star failed
/// (0 when the failure is not tied to a matrix position). `column` is the
/// 1-based factorization column for LDM failures, 0 otherwise.
class StarUndefinedError : public Error {
 public:
  StarUndefinedError(const std::string& what, std::size_t pivot = 0,
                     std::size_t column = 0)
      : Error(ErrorCode::StarUndefined, what), pivot_(pivot), column_(column) {}

  std::size_t pivot() const noexcept { return pivot_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t pivot_;
  std::size_t column_;
};

}  // namespace tropical
