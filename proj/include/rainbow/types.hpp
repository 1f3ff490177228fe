#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace rainbow {

using Vertex = std::uint32_t;
using EdgeId = std::uint32_t;
using Color = std::uint32_t;

inline constexpr Vertex kNoVertex = static_cast<Vertex>(-1);
inline constexpr EdgeId kNoEdge = static_cast<EdgeId>(-1);

enum class ErrorCode {
  InvalidArgument,
  Parse,
  Io,
  Parity,
  Exhausted,
  NotConnected,
  Guard,
  PaletteExhausted,
  Insufficient,
  GuaranteeViolation,
  NoStructure,
  Unresolved,
};

inline std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidArgument: return "INVALID_ARGUMENT";
    case ErrorCode::Parse: return "PARSE";
    case ErrorCode::Io: return "IO";
    case ErrorCode::Parity: return "PARITY";
    case ErrorCode::Exhausted: return "EXHAUSTED";
    case ErrorCode::NotConnected: return "NOT_CONNECTED";
    case ErrorCode::Guard: return "GUARD";
    case ErrorCode::PaletteExhausted: return "PALETTE_EXHAUSTED";
    case ErrorCode::Insufficient: return "INSUFFICIENT";
    case ErrorCode::GuaranteeViolation: return "GUARANTEE_VIOLATION";
    case ErrorCode::NoStructure: return "NO_STRUCTURE";
    case ErrorCode::Unresolved: return "UNRESOLVED";
  }
  return "UNKNOWN";
}

/// Domain error carrying a machine-readable code. The message is prefixed
/// with the code so it can be printed as is.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace rainbow
