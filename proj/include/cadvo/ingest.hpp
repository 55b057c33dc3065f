#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "cadvo/problem.hpp"

namespace cadvo {

enum class ProblemFormat { smt_subset, native };

// Parses a problem. Constraints come out normalized to `p rel 0` with
// integer coefficients: rational coefficients are cleared by the positive
// common denominator, which never flips a relation.
ProblemInstance parse_problem(const std::string& text, ProblemFormat format);

// Canonical native rendering; parse_problem(render_native(p), native) gives
// back an equal instance.
std::string render_native(const ProblemInstance& p);

// -------- cell-count labels --------

enum class CountMetric { output_cells, constructed_cells };

const char* count_metric_name(CountMetric m);
std::optional<CountMetric> parse_count_metric(const std::string& name);

struct CellCountEntry {
  std::vector<std::string> ordering_names;        // elimination order
  std::optional<std::uint64_t> count;             // nullopt = TIMEOUT
};

struct CellCountRecord {
  std::string problem_id;
  CountMetric metric = CountMetric::output_cells;
  std::vector<CellCountEntry> entries;
};

// One record per line: `id metric x2,x1,x0=12;x0,x1,x2=TIMEOUT;...`
// Blank lines and lines starting with '#' are skipped.
std::vector<CellCountRecord> parse_labels(const std::string& text);

std::string render_labels(const std::vector<CellCountRecord>& records);

// Counts keyed by elimination-order index sequences of a specific problem.
struct ResolvedCounts {
  std::map<std::vector<std::uint32_t>, std::optional<std::uint64_t>> by_ordering;

  // Missing orderings count as TIMEOUT.
  std::optional<std::uint64_t> count_for(const VariableOrdering& o) const;
  // Smallest non-TIMEOUT count; AllTimeout if none.
  std::uint64_t min_count() const;
  bool has_finite_count() const;
};

// Binds a record to a problem; UnknownOrdering if any entry names a variable
// the problem does not declare, DuplicateOrdering on repeated orderings.
ResolvedCounts resolve_counts(const CellCountRecord& record, const ProblemInstance& p);

// -------- dataset splitting --------

struct DatasetSplit {
  std::vector<std::string> train;
  std::vector<std::string> validation;
  std::vector<std::string> test;
  std::uint64_t seed = 0;
};

// Deterministic shuffle-and-cut. Fractions must be positive and sum to 1
// within 1e-9; sizes use largest-remainder rounding so they always sum to
// the input size. The same seed reproduces the same partition.
DatasetSplit split_dataset(const std::vector<std::string>& ids, std::uint64_t seed,
                           double train_fraction, double validation_fraction,
                           double test_fraction);

// -------- QEPCAD script emission --------

// Byte-exact QEPCAD session script for the problem under the given
// elimination order. QEPCAD projects the rightmost tuple variable first, so
// the tuple is the reverse of the elimination order. With `quantified` the
// problem's quantifier prefix and the partial-CAD statistics commands are
// emitted; otherwise all variables are free and the full-CAD statistics
// commands are used.
std::string emit_qepcad_script(const ProblemInstance& p, const VariableOrdering& ordering,
                               bool quantified);

}  // namespace cadvo
