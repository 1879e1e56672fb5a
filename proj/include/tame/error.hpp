#pragma once

#include <stdexcept>
#include <string>

namespace tame {

// Every failure raised by the library carries one of these kinds. The C API
// maps them one-to-one onto tame_status codes.
enum class ErrorKind {
  DomainMismatch,
  ArityMismatch,
  IndexOutOfRange,
  NotInjective,
  NotCovering,
  DegreeTooLarge,
  SupportNotCovered,
  WindowTooSmall,
  NotTame,
  TruncationExceeded,
  InvalidMorphism,
  OverlappingSupports,
  ValidationFailed,
  NotAMonoid,
  PreconditionViolated,
  SearchExhausted,
  LevelBoundExceeded,
  ParseError,
  UnknownCommand,
};

const char* to_string(ErrorKind kind) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, std::string message, std::string invariant = {},
        std::string location = {})
      : std::runtime_error(std::move(message)),
        kind_(kind),
        invariant_(std::move(invariant)),
        location_(std::move(location)) {}

  ErrorKind kind() const noexcept { return kind_; }
  // Name of the violated invariant for validation failures ("involution",
  // "covering", ...); empty otherwise.
  const std::string& invariant() const noexcept { return invariant_; }
  const std::string& location() const noexcept { return location_; }

 private:
  ErrorKind kind_;
  std::string invariant_;
  std::string location_;
};

[[noreturn]] inline void fail(ErrorKind kind, std::string message,
                              std::string invariant = {},
                              std::string location = {}) {
  throw Error(kind, std::move(message), std::move(invariant),
              std::move(location));
}

}  // namespace tame
