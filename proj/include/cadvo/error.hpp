#pragma once

#include <stdexcept>
#include <string>

namespace cadvo {

// Error codes cover every failure mode a caller is expected to handle.
// `internal` marks invariant violations (CLI exit code 2); everything else
// is an input problem (exit code 1).
enum class errc {
  parse_error,
  unsupported_construct,
  bad_fractions,
  unknown_ordering,
  duplicate_ordering,
  inadmissible_ordering,
  empty_input,
  wrong_arity,
  all_timeout,
  single_class,
  non_convergence,
  dimension_mismatch,
  missing_margin,
  no_winner,
  inconsistent_counts,
  no_positives,
  empty_set,
  degree_zero,
  degree_too_low,
  zero_polynomial,
  multivariate,
  internal,
};

const char* errc_name(errc code);

class Error : public std::runtime_error {
 public:
  Error(errc code, const std::string& msg);
  errc code() const { return code_; }

 private:
  errc code_;
};

[[noreturn]] void fail(errc code, const std::string& msg);

}  // namespace cadvo
