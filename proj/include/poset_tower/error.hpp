#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace poset_tower {

enum class ErrorKind {
  InvalidInput,
  MissingFace,
  UnknownVertex,
  LabelCollision,
  SimplexNotInComplex,
  InvalidPoint,
  NoCommonSimplex,
  ElementNotFound,
  NotAntisymmetric,
  NotSimplicial,
  LevelOutOfRange,
  IncoherentThread,
  NotSeparated,
  EqualPoints,
  StageTooCoarse,
  NotOpen,
  SearchExhausted,
  UnknownSuite,
  DepthTooLarge,
  ResourceLimit,
};

std::string_view to_string(ErrorKind kind);

/// All library failures are reported through this exception; `kind()` is
/// stable and is what callers (and the CLI exit codes) should switch on.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& detail)
      : std::runtime_error(std::string(to_string(kind)) + ": " + detail),
        kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace poset_tower
