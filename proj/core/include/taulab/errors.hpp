#pragma once
#include <stdexcept>
#include <string>

namespace taulab {

// All engine errors derive from Error so callers can catch the whole family.
struct Error : std::runtime_error {
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

#define TAULAB_DEFINE_ERROR(NAME)                                \
  struct NAME : Error {                                          \
    explicit NAME(const std::string& msg) : Error(msg) {}        \
  }

TAULAB_DEFINE_ERROR(InvalidShape);      // matrix dimensions do not match
TAULAB_DEFINE_ERROR(NotAdmissible);     // bad relation: not parallel, or length < 2
TAULAB_DEFINE_ERROR(BoundExceeded);     // a length/iteration bound was hit
TAULAB_DEFINE_ERROR(InvalidKupisch);    // series violates the admissibility conditions
TAULAB_DEFINE_ERROR(InvalidVertex);     // vertex index out of range
TAULAB_DEFINE_ERROR(AlgebraMismatch);   // operands live over different algebras
TAULAB_DEFINE_ERROR(InvalidIdempotent); // empty or malformed vertex subset
TAULAB_DEFINE_ERROR(NotNakayama);       // operation needs a serial algebra
TAULAB_DEFINE_ERROR(InvalidInput);      // precondition on a module argument failed
TAULAB_DEFINE_ERROR(NotGorenstein);     // algebra has no finite Gorenstein degree within bound
TAULAB_DEFINE_ERROR(NoFaithfulProjInj); // no projective vertex summand is injective
TAULAB_DEFINE_ERROR(ParseError);        // malformed input file or expression

#undef TAULAB_DEFINE_ERROR

}  // namespace taulab
