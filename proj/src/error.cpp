#include "galmod/error.hpp"

namespace galmod {

const char* error_kind_name(ErrorKind k) {
  switch (k) {
    case ErrorKind::NotASublattice: return "NotASublattice";
    case ErrorKind::DegreeUnsupported: return "DegreeUnsupported";
    case ErrorKind::RankTooLargeForSearch: return "RankTooLargeForSearch";
    case ErrorKind::NotSurjective: return "NotSurjective";
    case ErrorKind::KernelNotInduced: return "KernelNotInduced";
    case ErrorKind::NotASubgroup: return "NotASubgroup";
    case ErrorKind::UnknownGroupElement: return "UnknownGroupElement";
    case ErrorKind::EmptyPlaceSet: return "EmptyPlaceSet";
    case ErrorKind::DivisibilityRequired: return "DivisibilityRequired";
    case ErrorKind::CoverConditionFails: return "CoverConditionFails";
    case ErrorKind::PlaceNotInDottedSet: return "PlaceNotInDottedSet";
    case ErrorKind::TowerMismatch: return "TowerMismatch";
    case ErrorKind::NotTorsion: return "NotTorsion";
    case ErrorKind::PlaceMismatch: return "PlaceMismatch";
    case ErrorKind::ConfigError: return "ConfigError";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

}  // namespace galmod
