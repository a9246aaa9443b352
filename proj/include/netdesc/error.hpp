#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace netdesc {

enum class ErrorCode {
  SelfLoop,
  DuplicateEdge,
  VertexOutOfRange,
  Disconnected,
  EmptyGraph,
  SigmaOverflow,
  BadLambda,
  SingletonGraph,
  TooLarge,
  DOutOfRange,
  BadParameter,
  ParseError,
  NTooLarge,
  GivenUpAfterRetries,
};

inline std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::SelfLoop: return "SelfLoop";
    case ErrorCode::DuplicateEdge: return "DuplicateEdge";
    case ErrorCode::VertexOutOfRange: return "VertexOutOfRange";
    case ErrorCode::Disconnected: return "Disconnected";
    case ErrorCode::EmptyGraph: return "EmptyGraph";
    case ErrorCode::SigmaOverflow: return "SigmaOverflow";
    case ErrorCode::BadLambda: return "BadLambda";
    case ErrorCode::SingletonGraph: return "SingletonGraph";
    case ErrorCode::TooLarge: return "TooLarge";
    case ErrorCode::DOutOfRange: return "DOutOfRange";
    case ErrorCode::BadParameter: return "BadParameter";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::NTooLarge: return "NTooLarge";
    case ErrorCode::GivenUpAfterRetries: return "GivenUpAfterRetries";
  }
  return "Unknown";
}

// All library failures are reported through this type; code() is stable,
// the message is for humans.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace netdesc
