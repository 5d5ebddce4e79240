#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace blochgeom {

enum class ErrorKind {
  InvalidDimension,
  DimensionMismatch,
  InvalidAlgebraElement,
  NotSpecialUnitary,
  NotAState,
  InvalidGraph,
  ResourceLimit,
  Overflow,
  Usage,
  Io,
};

std::string_view to_string(ErrorKind kind);

/// Every failure raised by the library carries a machine-checkable kind.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what);

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace blochgeom
