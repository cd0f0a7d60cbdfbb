#pragma once

#include <stdexcept>
#include <string>

namespace tunnelrho {

enum class Err {
  InfiniteSlope,
  InvalidSlope,
  EqualSlopes,
  NotCoprime,
  DegenerateTorusKnot,
  NotFound,
  CertificateFailure,
  MixedBases,
  NoWaves,
  InvalidSystem,
  UnknownGenerator,
  InvalidGenerator,
  EvenNumeratorTarget,
  ParseError,
};

const char* err_name(Err e);

// Domain error carrying a typed code. The CLI prints the code name and
// exits 1, so scripts and tests can match on it.
class Error : public std::runtime_error {
public:
  Error(Err code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  Err code() const { return code_; }

private:
  Err code_;
};

[[noreturn]] inline void fail(Err code, const std::string& what) {
  throw Error(code, what);
}

}  // namespace tunnelrho
