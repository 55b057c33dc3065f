#include "cadvo/polynomial.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <ostream>
#include <sstream>
#include <utility>

namespace cadvo {

Variable Variable::indexed(std::uint32_t index) {
  return Variable(index, "x" + std::to_string(index));
}

std::uint64_t exponent_total_degree(const ExponentVec& e) {
  std::uint64_t d = 0;
  for (const auto& vp : e) d += vp.exp;
  return d;
}

std::strong_ordering monomial_order(const ExponentVec& a, const ExponentVec& b) {
  const std::uint64_t da = exponent_total_degree(a);
  const std::uint64_t db = exponent_total_degree(b);
  if (da != db) return da <=> db;
  // Lexicographic tie-break; a positive exponent on an earlier variable wins.
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    if (a[i].var != b[j].var) {
      // The smaller index owns the first differing position.
      return a[i].var < b[j].var ? std::strong_ordering::greater
                                 : std::strong_ordering::less;
    }
    if (a[i].exp != b[j].exp) return a[i].exp <=> b[j].exp;
    ++i;
    ++j;
  }
  if (i < a.size()) return std::strong_ordering::greater;
  if (j < b.size()) return std::strong_ordering::less;
  return std::strong_ordering::equal;
}

namespace {

struct MonomialDescending {
  bool operator()(const ExponentVec& a, const ExponentVec& b) const {
    return monomial_order(a, b) == std::strong_ordering::greater;
  }
};

ExponentVec multiply_exponents(const ExponentVec& a, const ExponentVec& b) {
  ExponentVec out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    if (a[i].var == b[j].var) {
      out.push_back({a[i].var, a[i].exp + b[j].exp});
      ++i;
      ++j;
    } else if (a[i].var < b[j].var) {
      out.push_back(a[i++]);
    } else {
      out.push_back(b[j++]);
    }
  }
  for (; i < a.size(); ++i) out.push_back(a[i]);
  for (; j < b.size(); ++j) out.push_back(b[j]);
  return out;
}

// nullopt unless b divides a componentwise.
std::optional<ExponentVec> divide_exponents(const ExponentVec& a, const ExponentVec& b) {
  ExponentVec out;
  std::size_t i = 0;
  for (const auto& vp : b) {
    while (i < a.size() && a[i].var < vp.var) out.push_back(a[i++]);
    if (i == a.size() || a[i].var != vp.var || a[i].exp < vp.exp) return std::nullopt;
    if (a[i].exp > vp.exp) out.push_back({a[i].var, a[i].exp - vp.exp});
    ++i;
  }
  for (; i < a.size(); ++i) out.push_back(a[i]);
  return out;
}

}  // namespace

Polynomial::Polynomial(Integer constant) {
  if (constant != 0) terms_.push_back(Term{{}, std::move(constant)});
}

Polynomial Polynomial::variable(std::uint32_t var_index) {
  Polynomial p;
  p.terms_.push_back(Term{{{var_index, 1}}, Integer(1)});
  return p;
}

Polynomial Polynomial::from_terms(std::vector<Term> terms) {
  std::map<ExponentVec, Integer, MonomialDescending> acc;
  for (auto& t : terms) {
    if (t.coeff == 0) continue;
    auto it = acc.find(t.exps);
    if (it == acc.end()) {
      acc.emplace(std::move(t.exps), std::move(t.coeff));
    } else {
      it->second += t.coeff;
    }
  }
  Polynomial p;
  p.terms_.reserve(acc.size());
  for (auto& [e, c] : acc) {
    if (c != 0) p.terms_.push_back(Term{e, c});
  }
  return p;
}

bool Polynomial::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_[0].exps.empty());
}

Integer Polynomial::constant_term() const {
  if (!terms_.empty() && terms_.back().exps.empty()) return terms_.back().coeff;
  return Integer(0);
}

std::vector<std::uint32_t> Polynomial::variable_indices() const {
  std::vector<std::uint32_t> vars;
  for (const auto& t : terms_) {
    for (const auto& vp : t.exps) vars.push_back(vp.var);
  }
  std::sort(vars.begin(), vars.end());
  vars.erase(std::unique(vars.begin(), vars.end()), vars.end());
  return vars;
}

bool Polynomial::contains(std::uint32_t var_index) const {
  for (const auto& t : terms_) {
    for (const auto& vp : t.exps) {
      if (vp.var == var_index) return true;
    }
  }
  return false;
}

std::uint64_t Polynomial::total_degree() const {
  return terms_.empty() ? 0 : exponent_total_degree(terms_.front().exps);
}

std::uint64_t Polynomial::degree_in(std::uint32_t var_index) const {
  std::uint64_t d = 0;
  for (const auto& t : terms_) {
    for (const auto& vp : t.exps) {
      if (vp.var == var_index) d = std::max<std::uint64_t>(d, vp.exp);
    }
  }
  return d;
}

Integer Polynomial::leading_coefficient() const {
  return terms_.empty() ? Integer(0) : terms_.front().coeff;
}

Polynomial Polynomial::leading_coefficient_in(std::uint32_t var_index) const {
  auto coeffs = coefficients_in(var_index);
  return coeffs.empty() ? Polynomial() : coeffs.back();
}

std::vector<Polynomial> Polynomial::coefficients_in(std::uint32_t var_index) const {
  if (terms_.empty()) return {};
  const std::uint64_t d = degree_in(var_index);
  std::vector<std::vector<Term>> buckets(d + 1);
  for (const auto& t : terms_) {
    std::uint32_t power = 0;
    ExponentVec rest;
    rest.reserve(t.exps.size());
    for (const auto& vp : t.exps) {
      if (vp.var == var_index) {
        power = vp.exp;
      } else {
        rest.push_back(vp);
      }
    }
    buckets[power].push_back(Term{std::move(rest), t.coeff});
  }
  std::vector<Polynomial> out;
  out.reserve(d + 1);
  for (auto& b : buckets) out.push_back(from_terms(std::move(b)));
  return out;
}

Polynomial Polynomial::from_coefficients(std::span<const Polynomial> coeffs,
                                         std::uint32_t var_index) {
  std::vector<Term> terms;
  for (std::size_t k = 0; k < coeffs.size(); ++k) {
    for (const auto& t : coeffs[k].terms()) {
      ExponentVec e = t.exps;
      if (k > 0) {
        e = multiply_exponents(e, {{var_index, static_cast<std::uint32_t>(k)}});
      }
      terms.push_back(Term{std::move(e), t.coeff});
    }
  }
  return from_terms(std::move(terms));
}

Polynomial Polynomial::derivative(std::uint32_t var_index) const {
  std::vector<Term> out;
  for (const auto& t : terms_) {
    for (const auto& vp : t.exps) {
      if (vp.var != var_index) continue;
      ExponentVec e;
      e.reserve(t.exps.size());
      for (const auto& w : t.exps) {
        if (w.var == var_index) {
          if (w.exp > 1) e.push_back({w.var, w.exp - 1});
        } else {
          e.push_back(w);
        }
      }
      out.push_back(Term{std::move(e), t.coeff * vp.exp});
      break;
    }
  }
  return from_terms(std::move(out));
}

Integer Polynomial::integer_content() const {
  Integer g(0);
  for (const auto& t : terms_) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), t.coeff.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

Polynomial Polynomial::primitive() const {
  const Integer g = integer_content();
  if (g == 0 || g == 1) return *this;
  Polynomial p(*this);
  for (auto& t : p.terms_) {
    mpz_divexact(t.coeff.get_mpz_t(), t.coeff.get_mpz_t(), g.get_mpz_t());
  }
  return p;
}

Polynomial Polynomial::sign_normalized() const {
  if (!terms_.empty() && terms_.front().coeff < 0) return -*this;
  return *this;
}

Polynomial Polynomial::relabeled(std::span<const std::uint32_t> perm) const {
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const auto& t : terms_) {
    ExponentVec e;
    e.reserve(t.exps.size());
    for (const auto& vp : t.exps) {
      if (vp.var >= perm.size()) fail(errc::internal, "relabel: variable out of range");
      e.push_back({perm[vp.var], vp.exp});
    }
    std::sort(e.begin(), e.end(),
              [](const VarPower& a, const VarPower& b) { return a.var < b.var; });
    out.push_back(Term{std::move(e), t.coeff});
  }
  return from_terms(std::move(out));
}

Polynomial Polynomial::operator-() const {
  Polynomial p(*this);
  for (auto& t : p.terms_) t.coeff = -t.coeff;
  return p;
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
  std::vector<Term> terms;
  terms.reserve(a.terms_.size() + b.terms_.size());
  std::size_t i = 0, j = 0;
  while (i < a.terms_.size() && j < b.terms_.size()) {
    const auto ord = monomial_order(a.terms_[i].exps, b.terms_[j].exps);
    if (ord == std::strong_ordering::greater) {
      terms.push_back(a.terms_[i++]);
    } else if (ord == std::strong_ordering::less) {
      terms.push_back(b.terms_[j++]);
    } else {
      Integer c = a.terms_[i].coeff + b.terms_[j].coeff;
      if (c != 0) terms.push_back(Term{a.terms_[i].exps, std::move(c)});
      ++i;
      ++j;
    }
  }
  for (; i < a.terms_.size(); ++i) terms.push_back(a.terms_[i]);
  for (; j < b.terms_.size(); ++j) terms.push_back(b.terms_[j]);
  Polynomial p;
  p.terms_ = std::move(terms);
  return p;
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) { return a + (-b); }

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return Polynomial();
  std::map<ExponentVec, Integer, MonomialDescending> acc;
  for (const auto& ta : a.terms_) {
    for (const auto& tb : b.terms_) {
      ExponentVec e = multiply_exponents(ta.exps, tb.exps);
      Integer c = ta.coeff * tb.coeff;
      auto it = acc.find(e);
      if (it == acc.end()) {
        acc.emplace(std::move(e), std::move(c));
      } else {
        it->second += c;
      }
    }
  }
  Polynomial p;
  p.terms_.reserve(acc.size());
  for (auto& [e, c] : acc) {
    if (c != 0) p.terms_.push_back(Term{e, c});
  }
  return p;
}

Polynomial Polynomial::operator*(const Integer& c) const {
  if (c == 0) return Polynomial();
  Polynomial p(*this);
  for (auto& t : p.terms_) t.coeff *= c;
  return p;
}

Polynomial Polynomial::pow(std::uint32_t e) const {
  Polynomial result(Integer(1));
  Polynomial base(*this);
  while (e > 0) {
    if (e & 1u) result *= base;
    e >>= 1u;
    if (e > 0) base *= base;
  }
  return result;
}

std::strong_ordering operator<=>(const Polynomial& a, const Polynomial& b) {
  const std::size_t n = std::min(a.terms_.size(), b.terms_.size());
  for (std::size_t i = 0; i < n; ++i) {
    const auto ord = monomial_order(a.terms_[i].exps, b.terms_[i].exps);
    if (ord != std::strong_ordering::equal) return ord;
    const int c = cmp(a.terms_[i].coeff, b.terms_[i].coeff);
    if (c != 0) return c <=> 0;
  }
  return a.terms_.size() <=> b.terms_.size();
}

std::string Polynomial::to_string(
    const std::function<std::string(std::uint32_t)>& names) const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& t : terms_) {
    const bool negative = t.coeff < 0;
    if (first) {
      if (negative) os << "-";
      first = false;
    } else {
      os << (negative ? " - " : " + ");
    }
    Integer magnitude = negative ? Integer(-t.coeff) : t.coeff;
    bool printed = false;
    if (magnitude != 1 || t.exps.empty()) {
      os << magnitude.get_str();
      printed = true;
    }
    for (const auto& vp : t.exps) {
      if (printed) os << "*";
      os << names(vp.var);
      if (vp.exp > 1) os << "^" << vp.exp;
      printed = true;
    }
  }
  return os.str();
}

std::string Polynomial::to_string() const {
  return to_string([](std::uint32_t i) { return "x" + std::to_string(i); });
}

std::string Polynomial::to_string(std::span<const Variable> vars) const {
  return to_string([vars](std::uint32_t i) {
    for (const auto& v : vars) {
      if (v.index() == i) return v.name();
    }
    return "x" + std::to_string(i);
  });
}

std::ostream& operator<<(std::ostream& os, const Polynomial& p) {
  return os << p.to_string();
}

std::optional<Polynomial> divide_exact(const Polynomial& p, const Polynomial& d) {
  if (d.is_zero()) return std::nullopt;
  Polynomial q;
  Polynomial r = p;
  while (!r.is_zero()) {
    const Term& lr = r.terms().front();
    const Term& ld = d.terms().front();
    auto e = divide_exponents(lr.exps, ld.exps);
    if (!e) return std::nullopt;
    if (!mpz_divisible_p(lr.coeff.get_mpz_t(), ld.coeff.get_mpz_t())) return std::nullopt;
    Integer c;
    mpz_divexact(c.get_mpz_t(), lr.coeff.get_mpz_t(), ld.coeff.get_mpz_t());
    Polynomial t = Polynomial::from_terms({Term{std::move(*e), std::move(c)}});
    q += t;
    r -= t * d;
  }
  return q;
}

Polynomial pseudo_remainder(const Polynomial& a, const Polynomial& b,
                            std::uint32_t var_index) {
  const std::uint64_t da = a.degree_in(var_index);
  const std::uint64_t db = b.degree_in(var_index);
  if (b.is_zero()) fail(errc::internal, "pseudo_remainder: zero divisor");
  if (da < db) fail(errc::internal, "pseudo_remainder: degree mismatch");

  std::vector<Polynomial> r = a.coefficients_in(var_index);
  const std::vector<Polynomial> bc = b.coefficients_in(var_index);
  const Polynomial& lb = bc.back();

  std::uint64_t multiplications = 0;
  std::uint64_t dr = da;
  auto trim = [&] {
    while (!r.empty() && r.back().is_zero()) r.pop_back();
    dr = r.empty() ? 0 : r.size() - 1;
  };
  trim();
  while (!r.empty() && dr >= db) {
    const Polynomial lead = r.back();
    for (auto& c : r) c *= lb;
    // Subtract lead * v^(dr-db) * b, cancelling the leading entry.
    const std::uint64_t shift = dr - db;
    for (std::size_t k = 0; k < bc.size(); ++k) {
      r[shift + k] -= lead * bc[k];
    }
    ++multiplications;
    trim();
  }
  // Scale so the identity uses exactly lb^(da-db+1).
  Polynomial rem = Polynomial::from_coefficients(r, var_index);
  for (std::uint64_t k = multiplications; k < da - db + 1; ++k) rem *= lb;
  return rem;
}

namespace {

Polynomial checked_div(const Polynomial& p, const Polynomial& d, const char* where) {
  auto q = divide_exact(p, d);
  if (!q) fail(errc::internal, std::string(where) + ": division not exact");
  return std::move(*q);
}

// Content of p viewed as univariate in v: a full gcd (integer content
// included) of the coefficient polynomials.
Polynomial full_gcd(const Polynomial& p, const Polynomial& q);

Polynomial content_in(const Polynomial& p, std::uint32_t var_index) {
  Polynomial c;
  for (const auto& coeff : p.coefficients_in(var_index)) {
    if (coeff.is_zero()) continue;
    c = full_gcd(c, coeff);
    if (c.is_constant() && c.constant_term() == 1) break;
  }
  return c;
}

// A gcd that keeps integer content: up to sign the true gcd in Z[x...].
// Result is sign-normalized (positive leading coefficient).
Polynomial full_gcd(const Polynomial& p, const Polynomial& q) {
  if (p.is_zero()) return q.sign_normalized();
  if (q.is_zero()) return p.sign_normalized();

  const Integer cz = [&] {
    Integer g;
    const Integer cp = p.integer_content(), cq = q.integer_content();
    mpz_gcd(g.get_mpz_t(), cp.get_mpz_t(), cq.get_mpz_t());
    return g;
  }();
  Polynomial a = checked_div(p, Polynomial(p.integer_content()), "gcd");
  Polynomial b = checked_div(q, Polynomial(q.integer_content()), "gcd");
  if (a.is_constant() || b.is_constant()) return Polynomial(cz);

  const auto va = a.variable_indices();
  const std::uint32_t v = va.front();
  if (!b.contains(v)) {
    // gcd divides b, which is free of v; only a's content in v matters.
    return (Polynomial(cz) * full_gcd(content_in(a, v), b)).sign_normalized();
  }

  const Polynomial ca = content_in(a, v);
  const Polynomial cb = content_in(b, v);
  Polynomial f = checked_div(a, ca, "gcd");
  Polynomial g = checked_div(b, cb, "gcd");
  if (f.degree_in(v) < g.degree_in(v)) std::swap(f, g);

  // Primitive Euclidean remainder sequence in v.
  while (!g.is_zero() && g.degree_in(v) > 0) {
    Polynomial r = pseudo_remainder(f, g, v);
    f = std::move(g);
    if (r.is_zero()) {
      g = Polynomial();
    } else {
      g = checked_div(r, content_in(r, v), "gcd");
    }
  }
  Polynomial pp_gcd =
      g.is_zero() ? checked_div(f, content_in(f, v), "gcd") : Polynomial(Integer(1));
  return (Polynomial(cz) * full_gcd(ca, cb) * pp_gcd).sign_normalized();
}

}  // namespace

Polynomial gcd(const Polynomial& p, const Polynomial& q) {
  return full_gcd(p, q).primitive().sign_normalized();
}

Polynomial resultant(const Polynomial& p, const Polynomial& q, std::uint32_t v) {
  if (p.degree_in(v) < 1 || q.degree_in(v) < 1) {
    fail(errc::degree_zero, "resultant requires degree >= 1 in the variable");
  }
  Polynomial a = p, b = q;
  bool negate = false;
  if (a.degree_in(v) < b.degree_in(v)) {
    if ((a.degree_in(v) & 1) && (b.degree_in(v) & 1)) negate = !negate;
    std::swap(a, b);
  }

  // Subresultant PRS (classic Collins/Brown bookkeeping). Contents are pulled
  // out first so the sequence runs on primitive parts.
  const Polynomial ca = content_in(a, v);
  const Polynomial cb = content_in(b, v);
  a = checked_div(a, ca, "resultant");
  b = checked_div(b, cb, "resultant");
  Polynomial scale = ca.pow(static_cast<std::uint32_t>(b.degree_in(v))) *
                     cb.pow(static_cast<std::uint32_t>(a.degree_in(v)));

  Polynomial g(Integer(1));
  Polynomial h(Integer(1));
  while (true) {
    const std::uint64_t da = a.degree_in(v);
    const std::uint64_t db = b.degree_in(v);
    const std::uint32_t delta = static_cast<std::uint32_t>(da - db);
    if ((da & 1) && (db & 1)) negate = !negate;
    Polynomial r = pseudo_remainder(a, b, v);
    a = std::move(b);
    b = checked_div(r, g * h.pow(delta), "resultant");
    if (b.is_zero()) return Polynomial();  // common factor in v
    g = a.leading_coefficient_in(v);
    if (delta > 0) {
      h = checked_div(g.pow(delta), h.pow(delta - 1), "resultant");
    }  // delta == 0 leaves h unchanged
    if (b.degree_in(v) == 0) {
      const std::uint32_t deg_a = static_cast<std::uint32_t>(a.degree_in(v));
      Polynomial res =
          checked_div(b.pow(deg_a), h.pow(deg_a - 1), "resultant");
      res = scale * res;
      return negate ? -res : res;
    }
  }
}

Polynomial discriminant(const Polynomial& p, std::uint32_t v) {
  const std::uint64_t d = p.degree_in(v);
  if (d < 2) fail(errc::degree_too_low, "discriminant requires degree >= 2");
  const Polynomial res = resultant(p, p.derivative(v), v);
  auto q = divide_exact(res, p.leading_coefficient_in(v));
  if (!q) fail(errc::internal, "discriminant: leading coefficient does not divide");
  const bool negate = (d * (d - 1) / 2) % 2 == 1;
  return negate ? -*q : *q;
}

Polynomial squarefree_part(const Polynomial& p, std::uint32_t v) {
  if (p.degree_in(v) < 1) fail(errc::degree_zero, "squarefree_part requires degree >= 1");
  const Polynomial g = gcd(p, p.derivative(v));
  auto q = divide_exact(p, g);
  if (!q) fail(errc::internal, "squarefree_part: gcd does not divide");
  return q->primitive().sign_normalized();
}

namespace {

struct PolyTextParser {
  const std::string& text;
  const std::function<std::optional<std::uint32_t>(const std::string&)>& lookup;
  std::size_t pos = 0;

  void skip_ws() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  }
  bool at_end() {
    skip_ws();
    return pos >= text.size();
  }
  char peek() {
    skip_ws();
    return pos < text.size() ? text[pos] : '\0';
  }

  [[noreturn]] void error(const std::string& msg) {
    fail(errc::parse_error, msg + " at offset " + std::to_string(pos) + " in \"" + text + "\"");
  }

  Integer parse_integer() {
    skip_ws();
    std::size_t start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos == start) error("expected integer");
    return Integer(text.substr(start, pos - start));
  }

  std::string parse_name() {
    skip_ws();
    std::size_t start = pos;
    if (pos >= text.size() ||
        !(std::isalpha(static_cast<unsigned char>(text[pos])) || text[pos] == '_')) {
      error("expected variable name");
    }
    ++pos;
    while (pos < text.size() && (std::isalnum(static_cast<unsigned char>(text[pos])) ||
                                 text[pos] == '_')) {
      ++pos;
    }
    return text.substr(start, pos - start);
  }

  // factor := integer | name ('^' integer)?
  // term   := factor ('*' factor)*
  Term parse_term() {
    Term t{{}, Integer(1)};
    bool expect_factor = true;
    while (expect_factor) {
      skip_ws();
      const char c = peek();
      if (std::isdigit(static_cast<unsigned char>(c))) {
        t.coeff *= parse_integer();
      } else {
        const std::string name = parse_name();
        auto idx = lookup(name);
        if (!idx) error("unknown variable '" + name + "'");
        std::uint32_t exp = 1;
        if (peek() == '^') {
          ++pos;
          const Integer e = parse_integer();
          if (e <= 0 || !e.fits_uint_p()) error("bad exponent");
          exp = static_cast<std::uint32_t>(e.get_ui());
        }
        bool merged = false;
        for (auto& vp : t.exps) {
          if (vp.var == *idx) {
            vp.exp += exp;
            merged = true;
            break;
          }
        }
        if (!merged) t.exps.push_back({*idx, exp});
      }
      if (peek() == '*') {
        ++pos;
      } else {
        expect_factor = false;
      }
    }
    std::sort(t.exps.begin(), t.exps.end(),
              [](const VarPower& a, const VarPower& b) { return a.var < b.var; });
    return t;
  }

  Polynomial parse() {
    std::vector<Term> terms;
    bool negative = false;
    if (peek() == '-') {
      ++pos;
      negative = true;
    } else if (peek() == '+') {
      ++pos;
    }
    while (true) {
      Term t = parse_term();
      if (negative) t.coeff = -t.coeff;
      terms.push_back(std::move(t));
      if (at_end()) break;
      const char c = peek();
      if (c == '+') {
        negative = false;
      } else if (c == '-') {
        negative = true;
      } else {
        error("expected '+' or '-'");
      }
      ++pos;
    }
    return Polynomial::from_terms(std::move(terms));
  }
};

}  // namespace

Polynomial parse_polynomial(
    const std::string& text,
    const std::function<std::optional<std::uint32_t>(const std::string&)>& lookup) {
  PolyTextParser parser{text, lookup};
  if (parser.at_end()) fail(errc::parse_error, "empty polynomial text");
  Polynomial p = parser.parse();
  return p;
}

Polynomial parse_polynomial(const std::string& text, std::span<const Variable> vars) {
  return parse_polynomial(text, [vars](const std::string& name) -> std::optional<std::uint32_t> {
    for (const auto& v : vars) {
      if (v.name() == name) return v.index();
    }
    return std::nullopt;
  });
}

}  // namespace cadvo
