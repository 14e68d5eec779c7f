#include "glsca/error.hpp"

namespace glsca {

const char* errc_name(Errc c) {
  switch (c) {
    case Errc::BadInput: return "BadInput";
    case Errc::NonCartan: return "NonCartan";
    case Errc::NotSymmetrizer: return "NotSymmetrizer";
    case Errc::BadOrientation: return "BadOrientation";
    case Errc::NotAffine: return "NotAffine";
    case Errc::NotSinkOrSource: return "NotSinkOrSource";
    case Errc::NotSink: return "NotSink";
    case Errc::BadExtendedVertex: return "BadExtendedVertex";
    case Errc::ArityMismatch: return "ArityMismatch";
    case Errc::NotDivisible: return "NotDivisible";
    case Errc::NotLaurent: return "NotLaurent";
    case Errc::NotHomogeneous: return "NotHomogeneous";
    case Errc::RankDeficient: return "RankDeficient";
    case Errc::NegativeRank: return "NegativeRank";
    case Errc::DecompositionNotFound: return "DecompositionNotFound";
    case Errc::ShapeMismatch: return "ShapeMismatch";
    case Errc::NotLocallyFreeResult: return "NotLocallyFreeResult";
    case Errc::TooLarge: return "TooLarge";
    case Errc::InterpolationInconsistent: return "InterpolationInconsistent";
    case Errc::InvariantBreach: return "InvariantBreach";
  }
  return "Unknown";
}

bool is_input_error(Errc c) {
  switch (c) {
    case Errc::BadInput:
    case Errc::NonCartan:
    case Errc::NotSymmetrizer:
    case Errc::BadOrientation:
    case Errc::NotAffine:
    case Errc::NotSinkOrSource:
    case Errc::NotSink:
    case Errc::BadExtendedVertex:
    case Errc::ArityMismatch:
    case Errc::RankDeficient:
    case Errc::NegativeRank:
    case Errc::ShapeMismatch:
    case Errc::TooLarge:
      return true;
    default:
      return false;
  }
}

Error::Error(Errc code, const std::string& what)
    : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

void fail(Errc code, const std::string& what) { throw Error(code, what); }

}  // namespace glsca
