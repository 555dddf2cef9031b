#pragma once

#include <stdexcept>
#include <string>

namespace ibrs {

enum class ErrorKind {
  OriginNotPoint,
  DanglingReference,
  CyclicTargets,
  LevelBoundExceeded,
  UnknownArrow,
  NotASubset,
  NotNested,
  DomainMiss,
  NotLevelOne,
  EmptyFactor,
  PreconditionViolated,
  BoundsTooLarge,
  UnknownProperty,
  SearchSpaceExceeded,
  SyntaxError,
  AtomOutsideLanguage,
  CarrierMismatch,
  UnknownRule,
  OracleInconsistent,
  MissingLabel,
  NonConvergence,
  MissingDistance,
  InvalidNetlist,
  HorizonTooSmall,
  InvalidInput,
  CapacityExceeded,
};

inline const char* to_string(ErrorKind k) {
  switch (k) {
    case ErrorKind::OriginNotPoint: return "OriginNotPoint";
    case ErrorKind::DanglingReference: return "DanglingReference";
    case ErrorKind::CyclicTargets: return "CyclicTargets";
    case ErrorKind::LevelBoundExceeded: return "LevelBoundExceeded";
    case ErrorKind::UnknownArrow: return "UnknownArrow";
    case ErrorKind::NotASubset: return "NotASubset";
    case ErrorKind::NotNested: return "NotNested";
    case ErrorKind::DomainMiss: return "DomainMiss";
    case ErrorKind::NotLevelOne: return "NotLevelOne";
    case ErrorKind::EmptyFactor: return "EmptyFactor";
    case ErrorKind::PreconditionViolated: return "PreconditionViolated";
    case ErrorKind::BoundsTooLarge: return "BoundsTooLarge";
    case ErrorKind::UnknownProperty: return "UnknownProperty";
    case ErrorKind::SearchSpaceExceeded: return "SearchSpaceExceeded";
    case ErrorKind::SyntaxError: return "SyntaxError";
    case ErrorKind::AtomOutsideLanguage: return "AtomOutsideLanguage";
    case ErrorKind::CarrierMismatch: return "CarrierMismatch";
    case ErrorKind::UnknownRule: return "UnknownRule";
    case ErrorKind::OracleInconsistent: return "OracleInconsistent";
    case ErrorKind::MissingLabel: return "MissingLabel";
    case ErrorKind::NonConvergence: return "NonConvergence";
    case ErrorKind::MissingDistance: return "MissingDistance";
    case ErrorKind::InvalidNetlist: return "InvalidNetlist";
    case ErrorKind::HorizonTooSmall: return "HorizonTooSmall";
    case ErrorKind::InvalidInput: return "InvalidInput";
    case ErrorKind::CapacityExceeded: return "CapacityExceeded";
  }
  return "Unknown";
}

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& detail)
      : std::runtime_error(std::string(to_string(kind)) + ": " + detail), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace ibrs
