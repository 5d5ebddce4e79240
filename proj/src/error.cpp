#include "blochgeom/error.hpp"

namespace blochgeom {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidDimension: return "invalid-dimension";
    case ErrorKind::DimensionMismatch: return "dimension-mismatch";
    case ErrorKind::InvalidAlgebraElement: return "invalid-algebra-element";
    case ErrorKind::NotSpecialUnitary: return "not-special-unitary";
    case ErrorKind::NotAState: return "not-a-state";
    case ErrorKind::InvalidGraph: return "invalid-graph";
    case ErrorKind::ResourceLimit: return "resource-limit";
    case ErrorKind::Overflow: return "overflow";
    case ErrorKind::Usage: return "usage";
    case ErrorKind::Io: return "io";
  }
  return "unknown";
}

Error::Error(ErrorKind kind, const std::string& what)
    : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

}  // namespace blochgeom
