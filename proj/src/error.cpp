#include "cadvo/error.hpp"

namespace cadvo {

const char* errc_name(errc code) {
  switch (code) {
    case errc::parse_error: return "ParseError";
    case errc::unsupported_construct: return "UnsupportedConstruct";
    case errc::bad_fractions: return "BadFractions";
    case errc::unknown_ordering: return "UnknownOrdering";
    case errc::duplicate_ordering: return "DuplicateOrdering";
    case errc::inadmissible_ordering: return "InadmissibleOrdering";
    case errc::empty_input: return "EmptyInput";
    case errc::wrong_arity: return "WrongArity";
    case errc::all_timeout: return "AllTimeout";
    case errc::single_class: return "SingleClass";
    case errc::non_convergence: return "NonConvergence";
    case errc::dimension_mismatch: return "DimensionMismatch";
    case errc::missing_margin: return "MissingMargin";
    case errc::no_winner: return "NoWinner";
    case errc::inconsistent_counts: return "InconsistentCounts";
    case errc::no_positives: return "NoPositives";
    case errc::empty_set: return "EmptySet";
    case errc::degree_zero: return "DegreeZero";
    case errc::degree_too_low: return "DegreeTooLow";
    case errc::zero_polynomial: return "ZeroPolynomial";
    case errc::multivariate: return "Multivariate";
    case errc::internal: return "InternalError";
  }
  return "UnknownError";
}

Error::Error(errc code, const std::string& msg)
    : std::runtime_error(std::string(errc_name(code)) + ": " + msg), code_(code) {}

void fail(errc code, const std::string& msg) { throw Error(code, msg); }

}  // namespace cadvo
