#include "cadvo/ingest.hpp"

#include <algorithm>
#include <cctype>
#include <random>
#include <set>
#include <sstream>

namespace cadvo {

namespace {

// ---------------------------------------------------------------- smt subset

struct SExpr {
  enum class Kind { symbol, list };
  Kind kind = Kind::symbol;
  std::string atom;
  std::vector<SExpr> items;
  int line = 0, column = 0;
};

class SExprParser {
 public:
  explicit SExprParser(const std::string& text) : text_(text) {}

  std::vector<SExpr> parse_all() {
    std::vector<SExpr> out;
    skip_trivia();
    while (pos_ < text_.size()) {
      out.push_back(parse_expr());
      skip_trivia();
    }
    return out;
  }

 private:
  [[noreturn]] void error(const std::string& msg) const {
    fail(errc::parse_error,
         msg + " (line " + std::to_string(line_) + ", column " + std::to_string(col_) + ")");
  }

  void advance() {
    if (text_[pos_] == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    ++pos_;
  }

  void skip_trivia() {
    while (pos_ < text_.size()) {
      const char c = text_[pos_];
      if (std::isspace(static_cast<unsigned char>(c))) {
        advance();
      } else if (c == ';') {
        while (pos_ < text_.size() && text_[pos_] != '\n') advance();
      } else {
        break;
      }
    }
  }

  SExpr parse_expr() {
    skip_trivia();
    if (pos_ >= text_.size()) error("unexpected end of input");
    SExpr e;
    e.line = line_;
    e.column = col_;
    const char c = text_[pos_];
    if (c == '(') {
      advance();
      e.kind = SExpr::Kind::list;
      skip_trivia();
      while (pos_ < text_.size() && text_[pos_] != ')') {
        e.items.push_back(parse_expr());
        skip_trivia();
      }
      if (pos_ >= text_.size()) error("missing ')'");
      advance();
      return e;
    }
    if (c == ')') error("unexpected ')'");
    if (c == '"' || c == '|') {
      const char quote = c;
      advance();
      std::string s;
      while (pos_ < text_.size() && text_[pos_] != quote) {
        s.push_back(text_[pos_]);
        advance();
      }
      if (pos_ >= text_.size()) error("unterminated quoted atom");
      advance();
      e.atom = s;
      return e;
    }
    std::string s;
    while (pos_ < text_.size() && !std::isspace(static_cast<unsigned char>(text_[pos_])) &&
           text_[pos_] != '(' && text_[pos_] != ')' && text_[pos_] != ';') {
      s.push_back(text_[pos_]);
      advance();
    }
    e.atom = s;
    return e;
  }

  const std::string& text_;
  std::size_t pos_ = 0;
  int line_ = 1, col_ = 1;
};

// Polynomial with a positive common denominator, the working value during
// expression evaluation.
struct RationalPoly {
  Polynomial num;
  Integer den{1};
};

RationalPoly rp_add(const RationalPoly& a, const RationalPoly& b) {
  Integer l;
  mpz_lcm(l.get_mpz_t(), a.den.get_mpz_t(), b.den.get_mpz_t());
  Integer fa = l / a.den, fb = l / b.den;
  return {a.num * fa + b.num * fb, l};
}

RationalPoly rp_neg(const RationalPoly& a) { return {-a.num, a.den}; }

RationalPoly rp_mul(const RationalPoly& a, const RationalPoly& b) {
  return {a.num * b.num, a.den * b.den};
}

struct SmtContext {
  ProblemInstance problem;

  std::optional<std::uint32_t> lookup(const std::string& name) const {
    const Variable* v = problem.find_variable(name);
    if (v) return v->index();
    return std::nullopt;
  }
};

[[noreturn]] void unsupported(const SExpr& e, const std::string& what) {
  fail(errc::unsupported_construct,
       what + " '" + (e.kind == SExpr::Kind::symbol ? e.atom : "(...)") + "' (line " +
           std::to_string(e.line) + ", column " + std::to_string(e.column) + ")");
}

[[noreturn]] void smt_error(const SExpr& e, const std::string& msg) {
  fail(errc::parse_error, msg + " (line " + std::to_string(e.line) + ", column " +
                              std::to_string(e.column) + ")");
}

bool is_number_token(const std::string& s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i >= s.size()) return false;
  bool seen_digit = false, seen_dot = false;
  for (; i < s.size(); ++i) {
    if (std::isdigit(static_cast<unsigned char>(s[i]))) {
      seen_digit = true;
    } else if (s[i] == '.' && !seen_dot) {
      seen_dot = true;
    } else {
      return false;
    }
  }
  return seen_digit;
}

RationalPoly number_from_token(const SExpr& e) {
  const std::string& s = e.atom;
  const auto dot = s.find('.');
  if (dot == std::string::npos) return {Polynomial(Integer(s)), Integer(1)};
  std::string digits = s.substr(0, dot) + s.substr(dot + 1);
  Integer den(1);
  for (std::size_t k = dot + 1; k < s.size(); ++k) den *= 10;
  Integer num(digits);
  if (den < 0) smt_error(e, "bad decimal literal");
  return {Polynomial(num), den};
}

RationalPoly eval_arith(const SExpr& e, const SmtContext& ctx) {
  if (e.kind == SExpr::Kind::symbol) {
    if (is_number_token(e.atom)) return number_from_token(e);
    auto idx = ctx.lookup(e.atom);
    if (!idx) unsupported(e, "unknown symbol");
    return {Polynomial::variable(*idx), Integer(1)};
  }
  if (e.items.empty()) smt_error(e, "empty application");
  const SExpr& head = e.items[0];
  if (head.kind != SExpr::Kind::symbol) smt_error(e, "expected operator symbol");
  const std::string& op = head.atom;
  const std::size_t argc = e.items.size() - 1;
  if (op == "+") {
    if (argc < 1) smt_error(e, "'+' needs arguments");
    RationalPoly acc = eval_arith(e.items[1], ctx);
    for (std::size_t i = 2; i < e.items.size(); ++i) {
      acc = rp_add(acc, eval_arith(e.items[i], ctx));
    }
    return acc;
  }
  if (op == "-") {
    if (argc < 1) smt_error(e, "'-' needs arguments");
    RationalPoly acc = eval_arith(e.items[1], ctx);
    if (argc == 1) return rp_neg(acc);
    for (std::size_t i = 2; i < e.items.size(); ++i) {
      acc = rp_add(acc, rp_neg(eval_arith(e.items[i], ctx)));
    }
    return acc;
  }
  if (op == "*") {
    if (argc < 1) smt_error(e, "'*' needs arguments");
    RationalPoly acc = eval_arith(e.items[1], ctx);
    for (std::size_t i = 2; i < e.items.size(); ++i) {
      acc = rp_mul(acc, eval_arith(e.items[i], ctx));
    }
    return acc;
  }
  if (op == "/") {
    if (argc < 2) smt_error(e, "'/' needs at least two arguments");
    RationalPoly acc = eval_arith(e.items[1], ctx);
    for (std::size_t i = 2; i < e.items.size(); ++i) {
      RationalPoly d = eval_arith(e.items[i], ctx);
      if (!d.num.is_constant()) unsupported(e.items[i], "division by a non-constant");
      const Integer c = d.num.constant_term();
      if (c == 0) smt_error(e.items[i], "division by zero");
      // acc / (c/den) = acc * den / c
      acc.num = acc.num * d.den;
      if (c < 0) {
        acc.num = -acc.num;
        acc.den *= -c;
      } else {
        acc.den *= c;
      }
    }
    return acc;
  }
  unsupported(head, "unsupported function");
}

Relation flip_relation(Relation r) {
  switch (r) {
    case Relation::lt: return Relation::gt;
    case Relation::gt: return Relation::lt;
    case Relation::le: return Relation::ge;
    case Relation::ge: return Relation::le;
    default: return r;
  }
}

Constraint make_constraint(const RationalPoly& lhs, const RationalPoly& rhs, Relation rel) {
  // lhs rel rhs  ->  (lhs - rhs) rel 0, then clear the (positive) denominator.
  const RationalPoly diff = rp_add(lhs, rp_neg(rhs));
  return Constraint{diff.num, rel};
}

std::shared_ptr<FormulaNode> eval_formula(const SExpr& e, const SmtContext& ctx) {
  if (e.kind != SExpr::Kind::list || e.items.empty()) {
    smt_error(e, "expected a formula application");
  }
  const SExpr& head = e.items[0];
  if (head.kind != SExpr::Kind::symbol) smt_error(e, "expected operator symbol");
  const std::string& op = head.atom;
  if (op == "and" || op == "or") {
    if (e.items.size() < 3) smt_error(e, "'" + op + "' needs at least two arguments");
    std::vector<std::shared_ptr<FormulaNode>> children;
    for (std::size_t i = 1; i < e.items.size(); ++i) {
      children.push_back(eval_formula(e.items[i], ctx));
    }
    return op == "and" ? FormulaNode::conjunction(std::move(children))
                       : FormulaNode::disjunction(std::move(children));
  }
  if (op == "not") {
    if (e.items.size() != 2) smt_error(e, "'not' needs exactly one argument");
    return FormulaNode::negation(eval_formula(e.items[1], ctx));
  }
  Relation rel;
  if (op == "=") {
    rel = Relation::eq;
  } else if (op == "<") {
    rel = Relation::lt;
  } else if (op == "<=") {
    rel = Relation::le;
  } else if (op == ">") {
    rel = Relation::gt;
  } else if (op == ">=") {
    rel = Relation::ge;
  } else {
    unsupported(head, "unsupported connective or relation");
  }
  if (e.items.size() < 3) smt_error(e, "relation needs two arguments");
  // n-ary relations chain pairwise.
  std::vector<std::shared_ptr<FormulaNode>> chain;
  for (std::size_t i = 1; i + 1 < e.items.size(); ++i) {
    chain.push_back(FormulaNode::leaf(make_constraint(
        eval_arith(e.items[i], ctx), eval_arith(e.items[i + 1], ctx), rel)));
  }
  return chain.size() == 1 ? chain.front() : FormulaNode::conjunction(std::move(chain));
}

ProblemInstance parse_smt(const std::string& text) {
  SExprParser parser(text);
  const std::vector<SExpr> commands = parser.parse_all();

  SmtContext ctx;
  std::vector<std::shared_ptr<FormulaNode>> asserts;
  for (const SExpr& cmd : commands) {
    if (cmd.kind != SExpr::Kind::list || cmd.items.empty() ||
        cmd.items[0].kind != SExpr::Kind::symbol) {
      smt_error(cmd, "expected a command");
    }
    const std::string& op = cmd.items[0].atom;
    if (op == "set-logic" || op == "set-info" || op == "check-sat" || op == "exit") {
      continue;
    }
    if (op == "declare-fun") {
      if (cmd.items.size() != 4 || cmd.items[1].kind != SExpr::Kind::symbol) {
        smt_error(cmd, "malformed declare-fun");
      }
      if (cmd.items[2].kind != SExpr::Kind::list || !cmd.items[2].items.empty()) {
        unsupported(cmd.items[2], "declare-fun with arguments");
      }
      if (cmd.items[3].kind != SExpr::Kind::symbol || cmd.items[3].atom != "Real") {
        unsupported(cmd.items[3], "non-Real sort");
      }
      const std::string& name = cmd.items[1].atom;
      if (ctx.problem.find_variable(name)) smt_error(cmd.items[1], "duplicate variable");
      const auto index = static_cast<std::uint32_t>(ctx.problem.variables.size());
      ctx.problem.variables.emplace_back(index, name);
      continue;
    }
    if (op == "assert") {
      if (cmd.items.size() != 2) smt_error(cmd, "malformed assert");
      asserts.push_back(eval_formula(cmd.items[1], ctx));
      continue;
    }
    unsupported(cmd.items[0], "unsupported command");
  }
  if (asserts.empty()) fail(errc::parse_error, "no assertions in input");
  ctx.problem.formula =
      asserts.size() == 1 ? asserts.front() : FormulaNode::conjunction(std::move(asserts));
  // nlsat-style problems are satisfiability questions: fully existential.
  for (const Variable& v : ctx.problem.variables) {
    ctx.problem.quantifier_block.push_back({Quantifier::exists, v});
  }
  ctx.problem.validate();
  return ctx.problem;
}

// ------------------------------------------------------------ native format

std::optional<Relation> relation_from_token(const std::string& tok) {
  if (tok == "=") return Relation::eq;
  if (tok == "!=") return Relation::neq;
  if (tok == "<") return Relation::lt;
  if (tok == "<=") return Relation::le;
  if (tok == ">") return Relation::gt;
  if (tok == ">=") return Relation::ge;
  return std::nullopt;
}

struct NativeFormulaParser {
  const std::string& text;
  const ProblemInstance& problem;
  std::size_t pos = 0;

  void skip_ws() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  }

  [[noreturn]] void error(const std::string& msg) {
    fail(errc::parse_error, msg + " at offset " + std::to_string(pos) + " of formula");
  }

  std::string next_token() {
    skip_ws();
    std::size_t start = pos;
    while (pos < text.size() && !std::isspace(static_cast<unsigned char>(text[pos])) &&
           text[pos] != '(' && text[pos] != ')') {
      ++pos;
    }
    if (start == pos) error("expected token");
    return text.substr(start, pos - start);
  }

  std::shared_ptr<FormulaNode> parse_node() {
    skip_ws();
    if (pos >= text.size() || text[pos] != '(') error("expected '('");
    ++pos;
    const std::string op = next_token();
    if (op == "and" || op == "or") {
      std::vector<std::shared_ptr<FormulaNode>> children;
      skip_ws();
      while (pos < text.size() && text[pos] == '(') {
        children.push_back(parse_node());
        skip_ws();
      }
      if (pos >= text.size() || text[pos] != ')') error("expected ')'");
      ++pos;
      if (children.size() < 2) error("'" + op + "' needs at least two children");
      return op == "and" ? FormulaNode::conjunction(std::move(children))
                         : FormulaNode::disjunction(std::move(children));
    }
    if (op == "not") {
      auto child = parse_node();
      skip_ws();
      if (pos >= text.size() || text[pos] != ')') error("expected ')'");
      ++pos;
      return FormulaNode::negation(std::move(child));
    }
    const auto rel = relation_from_token(op);
    if (!rel) error("unknown operator '" + op + "'");
    const std::size_t start = pos;
    while (pos < text.size() && text[pos] != ')') {
      if (text[pos] == '(') error("unexpected '(' inside polynomial");
      ++pos;
    }
    if (pos >= text.size()) error("expected ')'");
    const std::string poly_text = text.substr(start, pos - start);
    ++pos;
    Polynomial p = parse_polynomial(poly_text, problem.variables);
    return FormulaNode::leaf(Constraint{std::move(p), *rel});
  }
};

std::vector<std::string> split_fields(const std::string& line) {
  std::vector<std::string> fields;
  std::istringstream is(line);
  std::string f;
  while (is >> f) fields.push_back(f);
  return fields;
}

ProblemInstance parse_native(const std::string& text) {
  ProblemInstance p;
  std::istringstream is(text);
  std::string line;
  bool saw_vars = false;
  std::string formula_text;
  int lineno = 0;
  while (std::getline(is, line)) {
    ++lineno;
    const auto fields = split_fields(line);
    if (fields.empty() || fields[0].starts_with("#")) continue;
    const std::string& key = fields[0];
    if (key == "id") {
      if (fields.size() != 2) fail(errc::parse_error, "line " + std::to_string(lineno) +
                                                          ": 'id' needs one token");
      p.id = fields[1];
    } else if (key == "vars") {
      if (fields.size() < 2) fail(errc::parse_error, "line " + std::to_string(lineno) +
                                                         ": 'vars' needs at least one name");
      for (std::size_t i = 1; i < fields.size(); ++i) {
        p.variables.emplace_back(static_cast<std::uint32_t>(i - 1), fields[i]);
      }
      saw_vars = true;
    } else if (key == "quantifiers") {
      if ((fields.size() - 1) % 2 != 0) {
        fail(errc::parse_error,
             "line " + std::to_string(lineno) + ": 'quantifiers' needs {E|A} name pairs");
      }
      for (std::size_t i = 1; i + 1 < fields.size(); i += 2) {
        Quantifier q;
        if (fields[i] == "E") {
          q = Quantifier::exists;
        } else if (fields[i] == "A") {
          q = Quantifier::forall;
        } else {
          fail(errc::parse_error, "line " + std::to_string(lineno) + ": bad quantifier '" +
                                      fields[i] + "'");
        }
        const Variable* v = p.find_variable(fields[i + 1]);
        if (!v) fail(errc::parse_error, "line " + std::to_string(lineno) +
                                            ": unknown quantified variable '" + fields[i + 1] +
                                            "'");
        p.quantifier_block.push_back({q, *v});
      }
    } else if (key == "formula") {
      const auto key_pos = line.find("formula");
      formula_text = line.substr(key_pos + 7);
      std::string rest;
      std::ostringstream tail;
      tail << formula_text;
      while (std::getline(is, rest)) tail << "\n" << rest;
      formula_text = tail.str();
      break;
    } else {
      fail(errc::parse_error,
           "line " + std::to_string(lineno) + ": unknown field '" + key + "'");
    }
  }
  if (!saw_vars) fail(errc::parse_error, "missing 'vars' line");
  if (formula_text.empty()) fail(errc::parse_error, "missing 'formula'");
  NativeFormulaParser fp{formula_text, p};
  p.formula = fp.parse_node();
  fp.skip_ws();
  if (fp.pos != formula_text.size()) {
    fail(errc::parse_error, "trailing content after formula");
  }
  p.validate();
  return p;
}

void render_formula(const FormulaNode& node, const ProblemInstance& p, std::ostream& os) {
  switch (node.kind) {
    case FormulaNode::Kind::constraint:
      os << "(" << relation_symbol(node.constraint.relation) << " "
         << node.constraint.lhs.to_string(p.variables) << ")";
      return;
    case FormulaNode::Kind::conj:
    case FormulaNode::Kind::disj:
      os << "(" << (node.kind == FormulaNode::Kind::conj ? "and" : "or");
      for (const auto& c : node.children) {
        os << " ";
        render_formula(*c, p, os);
      }
      os << ")";
      return;
    case FormulaNode::Kind::negation:
      os << "(not ";
      render_formula(*node.children[0], p, os);
      os << ")";
      return;
  }
}

}  // namespace

ProblemInstance parse_problem(const std::string& text, ProblemFormat format) {
  switch (format) {
    case ProblemFormat::smt_subset: return parse_smt(text);
    case ProblemFormat::native: return parse_native(text);
  }
  fail(errc::internal, "unknown problem format");
}

std::string render_native(const ProblemInstance& p) {
  std::ostringstream os;
  os << "id " << (p.id.empty() ? "unnamed" : p.id) << "\n";
  os << "vars";
  for (const auto& v : p.variables) os << " " << v.name();
  os << "\n";
  if (!p.quantifier_block.empty()) {
    os << "quantifiers";
    for (const auto& q : p.quantifier_block) {
      os << " " << (q.quantifier == Quantifier::exists ? "E" : "A") << " "
         << q.variable.name();
    }
    os << "\n";
  }
  os << "formula ";
  render_formula(*p.formula, p, os);
  os << "\n";
  return os.str();
}

// --------------------------------------------------------------- label files

const char* count_metric_name(CountMetric m) {
  return m == CountMetric::output_cells ? "output_cells" : "constructed_cells";
}

std::optional<CountMetric> parse_count_metric(const std::string& name) {
  if (name == "output_cells") return CountMetric::output_cells;
  if (name == "constructed_cells") return CountMetric::constructed_cells;
  return std::nullopt;
}

namespace {

std::vector<std::string> split_on(const std::string& s, char sep) {
  std::vector<std::string> parts;
  std::size_t start = 0;
  while (true) {
    const auto end = s.find(sep, start);
    if (end == std::string::npos) {
      parts.push_back(s.substr(start));
      return parts;
    }
    parts.push_back(s.substr(start, end - start));
    start = end + 1;
  }
}

}  // namespace

std::vector<CellCountRecord> parse_labels(const std::string& text) {
  std::vector<CellCountRecord> records;
  std::istringstream is(text);
  std::string line;
  int lineno = 0;
  while (std::getline(is, line)) {
    ++lineno;
    const auto at = [&] { return " (line " + std::to_string(lineno) + ")"; };
    std::istringstream ls(line);
    std::string id, metric_name, rest;
    if (!(ls >> id)) continue;
    if (id.starts_with("#")) continue;
    if (!(ls >> metric_name) || !(ls >> rest)) {
      fail(errc::parse_error, "label line needs 'id metric entries'" + at());
    }
    std::string extra;
    if (ls >> extra) fail(errc::parse_error, "trailing content on label line" + at());
    CellCountRecord rec;
    rec.problem_id = id;
    const auto metric = parse_count_metric(metric_name);
    if (!metric) fail(errc::parse_error, "unknown metric '" + metric_name + "'" + at());
    rec.metric = *metric;
    std::set<std::vector<std::string>> seen;
    for (const std::string& entry : split_on(rest, ';')) {
      if (entry.empty()) fail(errc::parse_error, "empty label entry" + at());
      const auto eq = entry.find('=');
      if (eq == std::string::npos) {
        fail(errc::parse_error, "label entry needs '='" + at());
      }
      CellCountEntry ce;
      ce.ordering_names = split_on(entry.substr(0, eq), ',');
      for (const auto& n : ce.ordering_names) {
        if (n.empty()) fail(errc::parse_error, "empty variable name in ordering" + at());
      }
      if (!seen.insert(ce.ordering_names).second) {
        fail(errc::duplicate_ordering, "ordering repeated in record '" + id + "'" + at());
      }
      const std::string value = entry.substr(eq + 1);
      if (value == "TIMEOUT") {
        ce.count = std::nullopt;
      } else {
        if (value.empty() ||
            !std::all_of(value.begin(), value.end(),
                         [](char c) { return std::isdigit(static_cast<unsigned char>(c)); })) {
          fail(errc::parse_error, "bad count '" + value + "'" + at());
        }
        const std::uint64_t count = std::stoull(value);
        if (count == 0) fail(errc::parse_error, "cell counts are positive" + at());
        ce.count = count;
      }
      rec.entries.push_back(std::move(ce));
    }
    records.push_back(std::move(rec));
  }
  return records;
}

std::string render_labels(const std::vector<CellCountRecord>& records) {
  std::ostringstream os;
  for (const auto& rec : records) {
    os << rec.problem_id << " " << count_metric_name(rec.metric) << " ";
    for (std::size_t i = 0; i < rec.entries.size(); ++i) {
      if (i > 0) os << ";";
      const auto& e = rec.entries[i];
      for (std::size_t k = 0; k < e.ordering_names.size(); ++k) {
        if (k > 0) os << ",";
        os << e.ordering_names[k];
      }
      os << "=";
      if (e.count) {
        os << *e.count;
      } else {
        os << "TIMEOUT";
      }
    }
    os << "\n";
  }
  return os.str();
}

std::optional<std::uint64_t> ResolvedCounts::count_for(const VariableOrdering& o) const {
  const auto it = by_ordering.find(o.indices());
  if (it == by_ordering.end()) return std::nullopt;
  return it->second;
}

bool ResolvedCounts::has_finite_count() const {
  for (const auto& [k, v] : by_ordering) {
    if (v) return true;
  }
  return false;
}

std::uint64_t ResolvedCounts::min_count() const {
  std::optional<std::uint64_t> best;
  for (const auto& [k, v] : by_ordering) {
    if (v && (!best || *v < *best)) best = *v;
  }
  if (!best) fail(errc::all_timeout, "record has no finite cell count");
  return *best;
}

ResolvedCounts resolve_counts(const CellCountRecord& record, const ProblemInstance& p) {
  ResolvedCounts out;
  for (const auto& e : record.entries) {
    std::vector<std::uint32_t> key;
    std::set<std::uint32_t> seen;
    for (const auto& name : e.ordering_names) {
      const Variable* v = p.find_variable(name);
      if (!v) {
        fail(errc::unknown_ordering, "ordering references undeclared variable '" + name +
                                         "' in record '" + record.problem_id + "'");
      }
      if (!seen.insert(v->index()).second) {
        fail(errc::unknown_ordering, "ordering repeats variable '" + name + "' in record '" +
                                         record.problem_id + "'");
      }
      key.push_back(v->index());
    }
    if (key.size() != p.variables.size()) {
      fail(errc::unknown_ordering,
           "ordering arity mismatch in record '" + record.problem_id + "'");
    }
    if (!out.by_ordering.emplace(std::move(key), e.count).second) {
      fail(errc::duplicate_ordering, "duplicate ordering in record '" + record.problem_id + "'");
    }
  }
  return out;
}

// ----------------------------------------------------------------- splitting

DatasetSplit split_dataset(const std::vector<std::string>& ids, std::uint64_t seed,
                           double train_fraction, double validation_fraction,
                           double test_fraction) {
  const double fractions[3] = {train_fraction, validation_fraction, test_fraction};
  double sum = 0;
  for (double f : fractions) {
    if (!(f > 0)) fail(errc::bad_fractions, "fractions must be positive");
    sum += f;
  }
  if (std::abs(sum - 1.0) > 1e-9) fail(errc::bad_fractions, "fractions must sum to 1");

  std::vector<std::string> shuffled = ids;
  std::mt19937_64 rng(seed);
  // Explicit Fisher-Yates: std::shuffle's draw sequence is not portable.
  for (std::size_t i = shuffled.size(); i > 1; --i) {
    const std::size_t j = static_cast<std::size_t>(rng() % i);
    std::swap(shuffled[i - 1], shuffled[j]);
  }

  const std::size_t n = shuffled.size();
  std::size_t sizes[3];
  double remainders[3];
  std::size_t assigned = 0;
  for (int k = 0; k < 3; ++k) {
    const double quota = fractions[k] * static_cast<double>(n);
    sizes[k] = static_cast<std::size_t>(quota);
    remainders[k] = quota - static_cast<double>(sizes[k]);
    assigned += sizes[k];
  }
  while (assigned < n) {
    int best = 0;
    for (int k = 1; k < 3; ++k) {
      if (remainders[k] > remainders[best]) best = k;
    }
    ++sizes[best];
    remainders[best] = -1;
    ++assigned;
  }

  DatasetSplit split;
  split.seed = seed;
  auto it = shuffled.begin();
  split.train.assign(it, it + static_cast<std::ptrdiff_t>(sizes[0]));
  it += static_cast<std::ptrdiff_t>(sizes[0]);
  split.validation.assign(it, it + static_cast<std::ptrdiff_t>(sizes[1]));
  it += static_cast<std::ptrdiff_t>(sizes[1]);
  split.test.assign(it, shuffled.end());
  return split;
}

// ------------------------------------------------------------ qepcad output

namespace {

void render_qepcad_term(const Term& t, const ProblemInstance& p, std::ostream& os) {
  std::vector<std::string> factors;
  Integer magnitude = abs(t.coeff);
  if (magnitude != 1 || t.exps.empty()) factors.push_back(magnitude.get_str());
  for (const auto& vp : t.exps) {
    const Variable* v = p.find_variable(vp.var);
    const std::string name = v ? v->name() : "x" + std::to_string(vp.var);
    for (std::uint32_t k = 0; k < vp.exp; ++k) factors.push_back(name);
  }
  if (factors.size() == 1) {
    os << factors[0];
    return;
  }
  os << "(";
  for (std::size_t i = 0; i < factors.size(); ++i) {
    if (i > 0) os << " ";
    os << factors[i];
  }
  os << ")";
}

// Right-associated sum of same-sign terms: ((t1) + ((t2) + (t3))).
void render_qepcad_sum(std::span<const Term> terms, const ProblemInstance& p,
                       std::ostream& os) {
  if (terms.empty()) {
    os << "0";
    return;
  }
  if (terms.size() == 1) {
    render_qepcad_term(terms[0], p, os);
    return;
  }
  os << "(";
  render_qepcad_term(terms[0], p, os);
  os << " + ";
  render_qepcad_sum(terms.subspan(1), p, os);
  os << ")";
}

const char* qepcad_relation(Relation r) {
  switch (r) {
    case Relation::eq: return "=";
    case Relation::neq: return "/=";
    case Relation::lt: return "<";
    case Relation::le: return "<=";
    case Relation::gt: return ">";
    case Relation::ge: return ">=";
  }
  return "?";
}

void render_qepcad_constraint(const Constraint& c, const ProblemInstance& p,
                              std::ostream& os) {
  // Negative terms move across the relation so every side renders positive,
  // e.g. x0^2 + x1^2 + x2^2 - 1 = 0 becomes ((x0 x0) + ...) = 1.
  std::vector<Term> positive, negative;
  for (const auto& t : c.lhs.terms()) {
    if (t.coeff > 0) {
      positive.push_back(t);
    } else {
      negative.push_back(t);
    }
  }
  os << "[";
  render_qepcad_sum(positive, p, os);
  os << " " << qepcad_relation(c.relation) << " ";
  render_qepcad_sum(negative, p, os);
  os << "]";
}

void render_qepcad_formula(const FormulaNode& node, const ProblemInstance& p,
                           std::ostream& os) {
  switch (node.kind) {
    case FormulaNode::Kind::constraint:
      render_qepcad_constraint(node.constraint, p, os);
      return;
    case FormulaNode::Kind::conj:
    case FormulaNode::Kind::disj: {
      const char* op = node.kind == FormulaNode::Kind::conj ? " /\\ " : " \\/ ";
      os << "[";
      for (std::size_t i = 0; i < node.children.size(); ++i) {
        if (i > 0) os << op;
        render_qepcad_formula(*node.children[i], p, os);
      }
      os << "]";
      return;
    }
    case FormulaNode::Kind::negation:
      os << "[~";
      render_qepcad_formula(*node.children[0], p, os);
      os << "]";
      return;
  }
}

}  // namespace

std::string emit_qepcad_script(const ProblemInstance& p, const VariableOrdering& ordering,
                               bool quantified) {
  if (!is_admissible(p, ordering)) {
    fail(errc::inadmissible_ordering,
         "ordering (" + ordering.to_string() + ") is not admissible for problem '" + p.id +
             "'");
  }
  // QEPCAD projects the rightmost tuple variable first.
  std::vector<Variable> tuple(ordering.order.rbegin(), ordering.order.rend());

  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < tuple.size(); ++i) {
    if (i > 0) os << ",";
    os << tuple[i].name();
  }
  os << ")\n";

  const std::size_t free_count =
      quantified ? p.variables.size() - p.quantifier_block.size() : p.variables.size();
  os << free_count << "\n";

  if (quantified) {
    for (const auto& v : tuple) {
      for (const auto& q : p.quantifier_block) {
        if (q.variable == v) {
          os << "(" << (q.quantifier == Quantifier::exists ? "E" : "A") << v.name() << ")";
          break;
        }
      }
    }
  }
  os << "[";
  render_qepcad_formula(*p.formula, p, os);
  os << "].\n";

  if (quantified) {
    os << "go\ngo\ngo\nd-stat\ngo\nfinish\n";
  } else {
    os << "go\ngo\nd-proj-factors\nd-proj-polynomials\ngo\nd-fpc-stat\ngo\n";
  }
  return os.str();
}

}  // namespace cadvo
