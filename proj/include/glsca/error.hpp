#pragma once

#include <stdexcept>
#include <string>

namespace glsca {

enum class Errc {
  BadInput,
  NonCartan,
  NotSymmetrizer,
  BadOrientation,
  NotAffine,
  NotSinkOrSource,
  NotSink,
  BadExtendedVertex,
  ArityMismatch,
  NotDivisible,
  NotLaurent,
  NotHomogeneous,
  RankDeficient,
  NegativeRank,
  DecompositionNotFound,
  ShapeMismatch,
  NotLocallyFreeResult,
  TooLarge,
  InterpolationInconsistent,
  InvariantBreach,
};

const char* errc_name(Errc c);

/// True for errors caused by the caller's input rather than by a broken invariant.
bool is_input_error(Errc c);

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what);
  Errc code() const { return code_; }

 private:
  Errc code_;
};

[[noreturn]] void fail(Errc code, const std::string& what);

inline void require(bool cond, Errc code, const std::string& what) {
  if (!cond) fail(code, what);
}

}  // namespace glsca
