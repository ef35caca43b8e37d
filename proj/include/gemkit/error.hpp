#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace gemkit {

enum class ErrorCode {
  OddOrder,
  LoopEdge,
  NotInvolution,
  ColorCountMismatch,
  InvalidColor,
  InvalidVertex,
  Disconnected,
  NotContracted,
  WrongDimension,
  ColorMismatch,
  ChiMismatch,
  RankExceedsBound,
  InternalInconsistency,
  InvalidGenus,
  UnknownFixture,
  ParseError,
};

inline std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::OddOrder: return "OddOrder";
    case ErrorCode::LoopEdge: return "LoopEdge";
    case ErrorCode::NotInvolution: return "NotInvolution";
    case ErrorCode::ColorCountMismatch: return "ColorCountMismatch";
    case ErrorCode::InvalidColor: return "InvalidColor";
    case ErrorCode::InvalidVertex: return "InvalidVertex";
    case ErrorCode::Disconnected: return "Disconnected";
    case ErrorCode::NotContracted: return "NotContracted";
    case ErrorCode::WrongDimension: return "WrongDimension";
    case ErrorCode::ColorMismatch: return "ColorMismatch";
    case ErrorCode::ChiMismatch: return "ChiMismatch";
    case ErrorCode::RankExceedsBound: return "RankExceedsBound";
    case ErrorCode::InternalInconsistency: return "InternalInconsistency";
    case ErrorCode::InvalidGenus: return "InvalidGenus";
    case ErrorCode::UnknownFixture: return "UnknownFixture";
    case ErrorCode::ParseError: return "ParseError";
  }
  return "Unknown";
}

/// Domain error carrying a machine-readable code.
class GemError : public std::runtime_error {
 public:
  GemError(ErrorCode code, const std::string& detail)
      : std::runtime_error(std::string(to_string(code)) + ": " + detail), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace gemkit
