#pragma once

#include <memory>
#include <string>
#include <vector>

#include "cadvo/polynomial.hpp"

namespace cadvo {

enum class Relation { eq, neq, lt, le, gt, ge };

const char* relation_symbol(Relation r);  // "=", "!=", "<", "<=", ">", ">="

// A constraint normalized to `p rel 0`.
struct Constraint {
  Polynomial lhs;
  Relation relation = Relation::eq;

  friend bool operator==(const Constraint&, const Constraint&) = default;
};

// Boolean combination of constraints. NOT has exactly one child, AND and OR
// at least two.
struct FormulaNode {
  enum class Kind { constraint, conj, disj, negation };

  Kind kind = Kind::constraint;
  Constraint constraint;                             // when kind == constraint
  std::vector<std::shared_ptr<FormulaNode>> children;  // otherwise

  static std::shared_ptr<FormulaNode> leaf(Constraint c);
  static std::shared_ptr<FormulaNode> conjunction(
      std::vector<std::shared_ptr<FormulaNode>> children);
  static std::shared_ptr<FormulaNode> disjunction(
      std::vector<std::shared_ptr<FormulaNode>> children);
  static std::shared_ptr<FormulaNode> negation(std::shared_ptr<FormulaNode> child);
};

bool formula_equal(const FormulaNode& a, const FormulaNode& b);

enum class Quantifier { exists, forall };

struct QuantifiedVariable {
  Quantifier quantifier = Quantifier::exists;
  Variable variable;
};

// Elimination order, first-eliminated variable first.
struct VariableOrdering {
  std::vector<Variable> order;

  std::vector<std::uint32_t> indices() const;
  std::string to_string() const;  // "x2,x1,x0"

  friend bool operator==(const VariableOrdering& a, const VariableOrdering& b) {
    return a.indices() == b.indices();
  }
};

// Index-sequence lexicographic order, the tie-break convention used by every
// heuristic.
bool ordering_less(const VariableOrdering& a, const VariableOrdering& b);

struct ProblemInstance {
  std::string id;
  std::vector<Variable> variables;       // declaration order; indices 0..n-1
  std::vector<QuantifiedVariable> quantifier_block;  // outermost first, a
                                                     // suffix of `variables`
  std::shared_ptr<FormulaNode> formula;

  const Variable* find_variable(const std::string& name) const;
  const Variable* find_variable(std::uint32_t index) const;
  bool is_quantified(std::uint32_t var_index) const;

  // Checks structural invariants (suffix rule, distinctness, arity of
  // formula nodes); throws on violation.
  void validate() const;
};

// Distinct constraint left-hand sides in canonical form: expanded, primitive,
// sign-normalized, constants removed, sorted.
std::vector<Polynomial> polynomials_of(const ProblemInstance& p);

// True when the elimination order respects the quantifier structure:
// quantified variables are eliminated before free ones, innermost quantifier
// block first, with runs of like quantifiers freely permutable.
bool is_admissible(const ProblemInstance& p, const VariableOrdering& ordering);

// Blocks of variables in elimination sequence: reversed quantifier runs
// followed by the free variables. Any ordering formed by permuting within
// blocks is admissible, and those are all of them.
std::vector<std::vector<Variable>> elimination_blocks(const ProblemInstance& p);

}  // namespace cadvo
