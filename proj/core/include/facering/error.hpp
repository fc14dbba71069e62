#pragma once

#include <stdexcept>
#include <string>

namespace facering {

/// Categories of failure surfaced by the library. The CLI maps
/// `kInvalidInput`-like kinds to exit status 2 and `kPropertyViolated`-like
/// kinds to exit status 1.
enum class ErrorKind {
  kInvalidInput,
  kNotAPoset,
  kNoLeastElement,
  kNonBooleanInterval,
  kRankMismatch,
  kTooManyAtoms,
  kMeetUndefined,
  kIndexOutOfRange,
  kNotMember,
  kNotACover,
  kNonTermination,
  kInvalidComplex,
  kResolutionTooLong,
  kFactorizationAssertFailed,
  kInternal,
};

const char* to_string(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

  /// True for errors caused by malformed user input rather than a violated
  /// mathematical property.
  bool is_input_error() const noexcept;

 private:
  ErrorKind kind_;
};

/// Poset validation failure. `element` names the offending element (empty
/// when none applies) and `witness` carries a human-readable justification.
class PosetError : public Error {
 public:
  PosetError(ErrorKind kind, std::string element, std::string witness);

  const std::string& element() const noexcept { return element_; }
  const std::string& witness() const noexcept { return witness_; }

 private:
  std::string element_;
  std::string witness_;
};

}  // namespace facering
