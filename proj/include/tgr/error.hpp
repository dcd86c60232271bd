#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace tgr {

enum class ErrorKind {
  InvalidGroup,
  ActionNotHomomorphism,
  NotACocycle,
  NotNormal,
  NotAbelian,
  NotCyclic,
  NotCoprime,
  Timeout,
  SizeBound,
  NumericalDegeneracy,
  RootMatchFailure,
  ShapeMismatch,
  SearchBudgetExceeded,
  UnknownId,
  RelationCheckFailed,
  ParseError,
  InvariantViolation,
};

std::string_view to_string(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}
  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

// Throws InvariantViolation when `cond` is false.
inline void check_invariant(bool cond, const std::string& what) {
  if (!cond) throw Error(ErrorKind::InvariantViolation, what);
}

}  // namespace tgr
