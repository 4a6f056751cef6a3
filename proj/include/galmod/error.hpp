#pragma once

#include <stdexcept>
#include <string>

namespace galmod {

enum class ErrorKind {
  NotASublattice,
  DegreeUnsupported,
  RankTooLargeForSearch,
  NotSurjective,
  KernelNotInduced,
  NotASubgroup,
  UnknownGroupElement,
  EmptyPlaceSet,
  DivisibilityRequired,
  CoverConditionFails,
  PlaceNotInDottedSet,
  TowerMismatch,
  NotTorsion,
  PlaceMismatch,
  ConfigError,
  InvalidArgument,
};

const char* error_kind_name(ErrorKind k);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& msg, std::string witness = {})
      : std::runtime_error(std::string(error_kind_name(kind)) + ": " + msg),
        kind_(kind),
        witness_(std::move(witness)) {}
  ErrorKind kind() const { return kind_; }
  // Offending element for errors that carry one (e.g. an uncovered group element).
  const std::string& witness() const { return witness_; }

 private:
  ErrorKind kind_;
  std::string witness_;
};

}  // namespace galmod
