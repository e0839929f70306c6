#include "poset_tower/error.hpp"

namespace poset_tower {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidInput: return "InvalidInput";
    case ErrorKind::MissingFace: return "MissingFace";
    case ErrorKind::UnknownVertex: return "UnknownVertex";
    case ErrorKind::LabelCollision: return "LabelCollision";
    case ErrorKind::SimplexNotInComplex: return "SimplexNotInComplex";
    case ErrorKind::InvalidPoint: return "InvalidPoint";
    case ErrorKind::NoCommonSimplex: return "NoCommonSimplex";
    case ErrorKind::ElementNotFound: return "ElementNotFound";
    case ErrorKind::NotAntisymmetric: return "NotAntisymmetric";
    case ErrorKind::NotSimplicial: return "NotSimplicial";
    case ErrorKind::LevelOutOfRange: return "LevelOutOfRange";
    case ErrorKind::IncoherentThread: return "IncoherentThread";
    case ErrorKind::NotSeparated: return "NotSeparated";
    case ErrorKind::EqualPoints: return "EqualPoints";
    case ErrorKind::StageTooCoarse: return "StageTooCoarse";
    case ErrorKind::NotOpen: return "NotOpen";
    case ErrorKind::SearchExhausted: return "SearchExhausted";
    case ErrorKind::UnknownSuite: return "UnknownSuite";
    case ErrorKind::DepthTooLarge: return "DepthTooLarge";
    case ErrorKind::ResourceLimit: return "ResourceLimit";
  }
  return "Unknown";
}

}  // namespace poset_tower
