#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace hgs {

enum class ErrorKind {
  EdgeTooSmall,
  RepeatedVertex,
  VertexOutOfRange,
  DuplicateEdge,
  MissingEdge,
  PreconditionViolated,
  SearchBudgetExceeded,
  SizeNotRepresentable,
  BadParams,
  NotTwoUniform,
  NotSupertree,
  NotConnected,
  NotConverged,
  ZeroVector,
  NonPositiveVector,
  NotRegular,
  ParseError,
};

inline std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::EdgeTooSmall: return "EdgeTooSmall";
    case ErrorKind::RepeatedVertex: return "RepeatedVertex";
    case ErrorKind::VertexOutOfRange: return "VertexOutOfRange";
    case ErrorKind::DuplicateEdge: return "DuplicateEdge";
    case ErrorKind::MissingEdge: return "MissingEdge";
    case ErrorKind::PreconditionViolated: return "PreconditionViolated";
    case ErrorKind::SearchBudgetExceeded: return "SearchBudgetExceeded";
    case ErrorKind::SizeNotRepresentable: return "SizeNotRepresentable";
    case ErrorKind::BadParams: return "BadParams";
    case ErrorKind::NotTwoUniform: return "NotTwoUniform";
    case ErrorKind::NotSupertree: return "NotSupertree";
    case ErrorKind::NotConnected: return "NotConnected";
    case ErrorKind::NotConverged: return "NotConverged";
    case ErrorKind::ZeroVector: return "ZeroVector";
    case ErrorKind::NonPositiveVector: return "NonPositiveVector";
    case ErrorKind::NotRegular: return "NotRegular";
    case ErrorKind::ParseError: return "ParseError";
  }
  return "Unknown";
}

/// Every failure raised by the library carries one of the kinds above so
/// callers (the CLI in particular) can map it to an exit status.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace hgs
