#pragma once

#include <stdexcept>
#include <string>

namespace eqloc {

// Input could not be parsed (bad JSON, unknown preset, malformed vectors).
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A mathematical precondition does not hold: rank mismatch, non-generic
// circle, critical level, invalid polytope.
class PreconditionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class PolytopeFault {
  kTooFewFacets,
  kUnbounded,
  kNonIntegralVertex,
  kOrbifoldVertex,
  kNotSimple,
  kRedundantFacet,
  kNonPrimitiveNormal,
};

const char* to_string(PolytopeFault fault);

class PolytopeError : public PreconditionError {
 public:
  PolytopeError(PolytopeFault fault, const std::string& what)
      : PreconditionError(what), fault_(fault) {}
  PolytopeFault fault() const noexcept { return fault_; }

 private:
  PolytopeFault fault_;
};

// A spectral kernel count had no clear gap between the candidate kernel
// singular values and the rest of the spectrum.
class IndeterminateError : public std::runtime_error {
 public:
  IndeterminateError(const std::string& what, int count_below, int count_alt)
      : std::runtime_error(what), count_below_(count_below), count_alt_(count_alt) {}
  int count_below() const noexcept { return count_below_; }
  int count_alt() const noexcept { return count_alt_; }

 private:
  int count_below_;
  int count_alt_;
};

}  // namespace eqloc
