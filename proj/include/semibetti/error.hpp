#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace semibetti {

using Int = std::int64_t;

enum class ErrorKind {
  EmptyInput,
  InvalidGenerator,
  NonCoprime,
  NotAMember,
  MultiplicityMismatch,
  FEven,
  FTooSmall,
  TrivialSemigroup,
  InternalInconsistency,
  NotThreeGenerated,
  Symmetric,
  NonUniqueRepresentation,
  NotTelescopic,
  ArityMismatch,
  NotApplicable,
  DegenerateGenerators,
  Inconsistent,
};

constexpr std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::EmptyInput: return "EmptyInput";
    case ErrorKind::InvalidGenerator: return "InvalidGenerator";
    case ErrorKind::NonCoprime: return "NonCoprime";
    case ErrorKind::NotAMember: return "NotAMember";
    case ErrorKind::MultiplicityMismatch: return "MultiplicityMismatch";
    case ErrorKind::FEven: return "FEven";
    case ErrorKind::FTooSmall: return "FTooSmall";
    case ErrorKind::TrivialSemigroup: return "TrivialSemigroup";
    case ErrorKind::InternalInconsistency: return "InternalInconsistency";
    case ErrorKind::NotThreeGenerated: return "NotThreeGenerated";
    case ErrorKind::Symmetric: return "Symmetric";
    case ErrorKind::NonUniqueRepresentation: return "NonUniqueRepresentation";
    case ErrorKind::NotTelescopic: return "NotTelescopic";
    case ErrorKind::ArityMismatch: return "ArityMismatch";
    case ErrorKind::NotApplicable: return "NotApplicable";
    case ErrorKind::DegenerateGenerators: return "DegenerateGenerators";
    case ErrorKind::Inconsistent: return "Inconsistent";
  }
  return "Unknown";
}

/// Every failure raised by the library. `value()` carries the offending
/// number when there is one (the common divisor for NonCoprime, the degree
/// for Inconsistent, ...).
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message, std::optional<Int> value = std::nullopt)
      : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind), value_(value) {}

  ErrorKind kind() const noexcept { return kind_; }
  std::optional<Int> value() const noexcept { return value_; }

 private:
  ErrorKind kind_;
  std::optional<Int> value_;
};

}  // namespace semibetti
