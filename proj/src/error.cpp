#include "tgr/error.hpp"

namespace tgr {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidGroup: return "InvalidGroup";
    case ErrorKind::ActionNotHomomorphism: return "ActionNotHomomorphism";
    case ErrorKind::NotACocycle: return "NotACocycle";
    case ErrorKind::NotNormal: return "NotNormal";
    case ErrorKind::NotAbelian: return "NotAbelian";
    case ErrorKind::NotCyclic: return "NotCyclic";
    case ErrorKind::NotCoprime: return "NotCoprime";
    case ErrorKind::Timeout: return "Timeout";
    case ErrorKind::SizeBound: return "SizeBound";
    case ErrorKind::NumericalDegeneracy: return "NumericalDegeneracy";
    case ErrorKind::RootMatchFailure: return "RootMatchFailure";
    case ErrorKind::ShapeMismatch: return "ShapeMismatch";
    case ErrorKind::SearchBudgetExceeded: return "SearchBudgetExceeded";
    case ErrorKind::UnknownId: return "UnknownId";
    case ErrorKind::RelationCheckFailed: return "RelationCheckFailed";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::InvariantViolation: return "InvariantViolation";
  }
  return "Unknown";
}

}  // namespace tgr
