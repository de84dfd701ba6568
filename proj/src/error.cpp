#include "crlab/error.hpp"

namespace crlab {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
  case ErrorKind::SizeMismatch:
    return "SIZE_MISMATCH";
  case ErrorKind::InvalidArgument:
    return "INVALID_ARGUMENT";
  case ErrorKind::Singular:
    return "SINGULAR";
  case ErrorKind::WrongFieldMode:
    return "WRONG_FIELD_MODE";
  case ErrorKind::Inconsistent:
    return "INCONSISTENT";
  case ErrorKind::InvariantFailure:
    return "INVARIANT_FAILURE";
  case ErrorKind::NonCommuting:
    return "NON_COMMUTING";
  case ErrorKind::ExtensionUnsupported:
    return "EXTENSION_UNSUPPORTED";
  case ErrorKind::Parse:
    return "PARSE";
  }
  return "UNKNOWN";
}

} // namespace crlab
