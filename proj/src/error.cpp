#include "geoconv/error.hpp"

namespace geoconv {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
  case ErrorKind::InvalidArgument: return "invalid-argument";
  case ErrorKind::NotConnected: return "not-connected";
  case ErrorKind::SelfLoop: return "self-loop";
  case ErrorKind::DuplicateEdge: return "duplicate-edge";
  case ErrorKind::Parse: return "parse-error";
  case ErrorKind::ExchangeViolation: return "exchange-violation";
  case ErrorKind::TooLarge: return "too-large";
  case ErrorKind::TcPrerequisite: return "tc-prerequisite-failed";
  }
  return "unknown";
}

} // namespace geoconv
