#include "tame/error.hpp"

namespace tame {

const char* to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::DomainMismatch: return "DomainMismatch";
    case ErrorKind::ArityMismatch: return "ArityMismatch";
    case ErrorKind::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorKind::NotInjective: return "NotInjective";
    case ErrorKind::NotCovering: return "NotCovering";
    case ErrorKind::DegreeTooLarge: return "DegreeTooLarge";
    case ErrorKind::SupportNotCovered: return "SupportNotCovered";
    case ErrorKind::WindowTooSmall: return "WindowTooSmall";
    case ErrorKind::NotTame: return "NotTame";
    case ErrorKind::TruncationExceeded: return "TruncationExceeded";
    case ErrorKind::InvalidMorphism: return "InvalidMorphism";
    case ErrorKind::OverlappingSupports: return "OverlappingSupports";
    case ErrorKind::ValidationFailed: return "ValidationFailed";
    case ErrorKind::NotAMonoid: return "NotAMonoid";
    case ErrorKind::PreconditionViolated: return "PreconditionViolated";
    case ErrorKind::SearchExhausted: return "SearchExhausted";
    case ErrorKind::LevelBoundExceeded: return "LevelBoundExceeded";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::UnknownCommand: return "UnknownCommand";
  }
  return "Unknown";
}

}  // namespace tame
