#include "facering/error.hpp"

namespace facering {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kInvalidInput: return "InvalidInput";
    case ErrorKind::kNotAPoset: return "NotAPoset";
    case ErrorKind::kNoLeastElement: return "NoLeastElement";
    case ErrorKind::kNonBooleanInterval: return "NonBooleanInterval";
    case ErrorKind::kRankMismatch: return "RankMismatch";
    case ErrorKind::kTooManyAtoms: return "TooManyAtoms";
    case ErrorKind::kMeetUndefined: return "MeetUndefined";
    case ErrorKind::kIndexOutOfRange: return "IndexOutOfRange";
    case ErrorKind::kNotMember: return "NotMember";
    case ErrorKind::kNotACover: return "NotACover";
    case ErrorKind::kNonTermination: return "NonTermination";
    case ErrorKind::kInvalidComplex: return "InvalidComplex";
    case ErrorKind::kResolutionTooLong: return "ResolutionTooLong";
    case ErrorKind::kFactorizationAssertFailed: return "FactorizationAssertFailed";
    case ErrorKind::kInternal: return "Internal";
  }
  return "Unknown";
}

bool Error::is_input_error() const noexcept {
  switch (kind_) {
    case ErrorKind::kInvalidInput:
    case ErrorKind::kNotAPoset:
    case ErrorKind::kNoLeastElement:
    case ErrorKind::kNonBooleanInterval:
    case ErrorKind::kRankMismatch:
    case ErrorKind::kTooManyAtoms:
    case ErrorKind::kIndexOutOfRange:
    case ErrorKind::kNotMember:
    case ErrorKind::kNotACover:
    case ErrorKind::kMeetUndefined:
      return true;
    default:
      return false;
  }
}

namespace {

std::string compose(ErrorKind kind, const std::string& element,
                    const std::string& witness) {
  std::string msg = to_string(kind);
  if (!element.empty()) msg += "(" + element + ")";
  if (!witness.empty()) msg += ": " + witness;
  return msg;
}

}  // namespace

PosetError::PosetError(ErrorKind kind, std::string element, std::string witness)
    : Error(kind, compose(kind, element, witness)),
      element_(std::move(element)),
      witness_(std::move(witness)) {}

}  // namespace facering
