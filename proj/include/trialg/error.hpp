#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace trialg {

enum class ErrorKind {
  MixedAlgebras,
  NotAssociative,
  BadUnit,
  BadSplit,
  SingleBlock,
  Disconnected,
  BadPoset,
  NotIdempotent,
  NotTriangular,
  ZeroBimodule,
  NotFaithful,
  NotInProjection,
  NotCentral,
  NotVanishing,
  NotLieBider,
  NoCentralLambda,
  ResidualNotCentral,
  Inconsistent,
  BadInput,
  FingerprintMismatch,
};

std::string_view kind_name(ErrorKind kind);

class Error : public std::runtime_error {
public:
  Error(ErrorKind kind, const std::string &what)
      : std::runtime_error(std::string(kind_name(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

private:
  ErrorKind kind_;
};

} // namespace trialg
