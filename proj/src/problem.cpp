#include "cadvo/problem.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace cadvo {

const char* relation_symbol(Relation r) {
  switch (r) {
    case Relation::eq: return "=";
    case Relation::neq: return "!=";
    case Relation::lt: return "<";
    case Relation::le: return "<=";
    case Relation::gt: return ">";
    case Relation::ge: return ">=";
  }
  return "?";
}

std::shared_ptr<FormulaNode> FormulaNode::leaf(Constraint c) {
  auto node = std::make_shared<FormulaNode>();
  node->kind = Kind::constraint;
  node->constraint = std::move(c);
  return node;
}

std::shared_ptr<FormulaNode> FormulaNode::conjunction(
    std::vector<std::shared_ptr<FormulaNode>> children) {
  if (children.size() == 1) return children.front();
  if (children.size() < 2) fail(errc::internal, "conjunction needs children");
  auto node = std::make_shared<FormulaNode>();
  node->kind = Kind::conj;
  node->children = std::move(children);
  return node;
}

std::shared_ptr<FormulaNode> FormulaNode::disjunction(
    std::vector<std::shared_ptr<FormulaNode>> children) {
  if (children.size() == 1) return children.front();
  if (children.size() < 2) fail(errc::internal, "disjunction needs children");
  auto node = std::make_shared<FormulaNode>();
  node->kind = Kind::disj;
  node->children = std::move(children);
  return node;
}

std::shared_ptr<FormulaNode> FormulaNode::negation(std::shared_ptr<FormulaNode> child) {
  auto node = std::make_shared<FormulaNode>();
  node->kind = Kind::negation;
  node->children.push_back(std::move(child));
  return node;
}

bool formula_equal(const FormulaNode& a, const FormulaNode& b) {
  if (a.kind != b.kind) return false;
  if (a.kind == FormulaNode::Kind::constraint) return a.constraint == b.constraint;
  if (a.children.size() != b.children.size()) return false;
  for (std::size_t i = 0; i < a.children.size(); ++i) {
    if (!formula_equal(*a.children[i], *b.children[i])) return false;
  }
  return true;
}

std::vector<std::uint32_t> VariableOrdering::indices() const {
  std::vector<std::uint32_t> idx;
  idx.reserve(order.size());
  for (const auto& v : order) idx.push_back(v.index());
  return idx;
}

std::string VariableOrdering::to_string() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < order.size(); ++i) {
    if (i > 0) os << ",";
    os << order[i].name();
  }
  return os.str();
}

bool ordering_less(const VariableOrdering& a, const VariableOrdering& b) {
  return a.indices() < b.indices();
}

const Variable* ProblemInstance::find_variable(const std::string& name) const {
  for (const auto& v : variables) {
    if (v.name() == name) return &v;
  }
  return nullptr;
}

const Variable* ProblemInstance::find_variable(std::uint32_t index) const {
  for (const auto& v : variables) {
    if (v.index() == index) return &v;
  }
  return nullptr;
}

bool ProblemInstance::is_quantified(std::uint32_t var_index) const {
  for (const auto& q : quantifier_block) {
    if (q.variable.index() == var_index) return true;
  }
  return false;
}

namespace {

void validate_formula(const FormulaNode& node) {
  switch (node.kind) {
    case FormulaNode::Kind::constraint:
      if (!node.children.empty()) fail(errc::internal, "constraint leaf with children");
      return;
    case FormulaNode::Kind::negation:
      if (node.children.size() != 1) fail(errc::internal, "NOT needs exactly one child");
      break;
    case FormulaNode::Kind::conj:
    case FormulaNode::Kind::disj:
      if (node.children.size() < 2) fail(errc::internal, "AND/OR need >= 2 children");
      break;
  }
  for (const auto& c : node.children) validate_formula(*c);
}

}  // namespace

void ProblemInstance::validate() const {
  std::set<std::uint32_t> indices;
  std::set<std::string> names;
  for (const auto& v : variables) {
    if (!indices.insert(v.index()).second) fail(errc::parse_error, "duplicate variable index");
    if (!names.insert(v.name()).second) fail(errc::parse_error, "duplicate variable name");
  }
  if (quantifier_block.size() > variables.size()) {
    fail(errc::parse_error, "more quantifiers than variables");
  }
  // Quantified variables must be exactly the suffix of the declaration order.
  const std::size_t free_count = variables.size() - quantifier_block.size();
  for (std::size_t i = 0; i < quantifier_block.size(); ++i) {
    if (!(quantifier_block[i].variable == variables[free_count + i])) {
      fail(errc::parse_error,
           "quantifier block must cover a suffix of the variable list in order");
    }
  }
  if (!formula) fail(errc::parse_error, "problem has no formula");
  validate_formula(*formula);
}

namespace {

void collect_constraints(const FormulaNode& node, std::vector<const Constraint*>& out) {
  if (node.kind == FormulaNode::Kind::constraint) {
    out.push_back(&node.constraint);
    return;
  }
  for (const auto& c : node.children) collect_constraints(*c, out);
}

}  // namespace

std::vector<Polynomial> polynomials_of(const ProblemInstance& p) {
  std::vector<const Constraint*> constraints;
  if (p.formula) collect_constraints(*p.formula, constraints);
  std::vector<Polynomial> polys;
  for (const auto* c : constraints) {
    if (c->lhs.is_constant()) continue;
    polys.push_back(c->lhs.primitive().sign_normalized());
  }
  std::sort(polys.begin(), polys.end());
  polys.erase(std::unique(polys.begin(), polys.end()), polys.end());
  return polys;
}

std::vector<std::vector<Variable>> elimination_blocks(const ProblemInstance& p) {
  std::vector<std::vector<Variable>> blocks;
  // Innermost quantifier run is eliminated first.
  for (auto it = p.quantifier_block.rbegin(); it != p.quantifier_block.rend(); ++it) {
    if (blocks.empty() || it->quantifier != (it - 1)->quantifier) {
      blocks.emplace_back();
    }
    blocks.back().push_back(it->variable);
  }
  std::vector<Variable> free_vars;
  for (const auto& v : p.variables) {
    if (!p.is_quantified(v.index())) free_vars.push_back(v);
  }
  if (!free_vars.empty()) blocks.push_back(std::move(free_vars));
  return blocks;
}

bool is_admissible(const ProblemInstance& p, const VariableOrdering& ordering) {
  if (ordering.order.size() != p.variables.size()) return false;
  std::set<std::uint32_t> seen;
  for (const auto& v : ordering.order) {
    if (!p.find_variable(v.index())) return false;
    if (!seen.insert(v.index()).second) return false;
  }
  const auto blocks = elimination_blocks(p);
  std::size_t pos = 0;
  for (const auto& block : blocks) {
    std::set<std::uint32_t> expected;
    for (const auto& v : block) expected.insert(v.index());
    for (std::size_t k = 0; k < block.size(); ++k, ++pos) {
      if (expected.count(ordering.order[pos].index()) == 0) return false;
    }
  }
  return true;
}

}  // namespace cadvo
