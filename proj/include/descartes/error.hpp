#pragma once

#include <stdexcept>
#include <string>

namespace descartes {

enum class ErrorCode {
  ParseError,
  ZeroCoefficient,
  ZeroPolynomial,
  DegreeLimitExceeded,
  ZeroConstantTerm,
  EpsilonExhausted,
  InadmissiblePair,
  BadPattern,
  ExpressionTooLarge,
  NotCertifiable,
  ManifestParse,
  UnknownClaimKind,
  ConfigError,
  InvalidArgument,
};

const char* to_string(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}
  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace descartes
