#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "cadvo/error.hpp"

namespace cadvo {

using Integer = mpz_class;
using Rational = mpq_class;

// A problem variable: a 0-based index plus the display name used in
// serializations ("x0", "y", ...). Identity is the index; the name is
// presentation only.
class Variable {
 public:
  Variable() = default;
  Variable(std::uint32_t index, std::string name)
      : index_(index), name_(std::move(name)) {}

  // Variable with the default name "x<index>".
  static Variable indexed(std::uint32_t index);

  std::uint32_t index() const { return index_; }
  const std::string& name() const { return name_; }

  friend bool operator==(const Variable& a, const Variable& b) {
    return a.index_ == b.index_;
  }
  friend auto operator<=>(const Variable& a, const Variable& b) {
    return a.index_ <=> b.index_;
  }

 private:
  std::uint32_t index_ = 0;
  std::string name_ = "x0";
};

// One variable raised to a positive power.
struct VarPower {
  std::uint32_t var = 0;
  std::uint32_t exp = 0;

  friend bool operator==(const VarPower&, const VarPower&) = default;
};

// Exponent vector: sorted by variable index, no zero exponents.
using ExponentVec = std::vector<VarPower>;

std::uint64_t exponent_total_degree(const ExponentVec& e);

// Graded-lexicographic order on monomials: total degree first, ties by
// lexicographic comparison with lower-indexed variables more significant.
std::strong_ordering monomial_order(const ExponentVec& a, const ExponentVec& b);

struct Term {
  ExponentVec exps;
  Integer coeff;

  friend bool operator==(const Term&, const Term&) = default;
};

// Sparse multivariate polynomial with exact integer coefficients.
// Terms are kept in strictly descending graded-lexicographic order with no
// zero coefficients and no repeated exponent vectors, so equal polynomials
// compare and serialize identically. The zero polynomial has no terms.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(Integer constant);
  explicit Polynomial(long constant) : Polynomial(Integer(constant)) {}

  static Polynomial variable(const Variable& v) { return variable(v.index()); }
  static Polynomial variable(std::uint32_t var_index);
  // Builds from arbitrary terms, merging and sorting into canonical form.
  static Polynomial from_terms(std::vector<Term> terms);

  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  // Constant term (0 if absent).
  Integer constant_term() const;

  // Distinct variable indices occurring in the polynomial, ascending.
  std::vector<std::uint32_t> variable_indices() const;
  bool contains(std::uint32_t var_index) const;

  // Max over terms of the sum of exponents; 0 for constants and, by
  // convention, for the zero polynomial.
  std::uint64_t total_degree() const;
  std::uint64_t degree_in(std::uint32_t var_index) const;
  std::uint64_t degree_in(const Variable& v) const { return degree_in(v.index()); }

  // Coefficient of the graded-lex leading term.
  Integer leading_coefficient() const;
  // Leading coefficient viewed as univariate in v (a polynomial free of v).
  Polynomial leading_coefficient_in(std::uint32_t var_index) const;

  // Coefficients by ascending power of v, size degree_in(v)+1; empty for the
  // zero polynomial.
  std::vector<Polynomial> coefficients_in(std::uint32_t var_index) const;
  static Polynomial from_coefficients(std::span<const Polynomial> coeffs,
                                      std::uint32_t var_index);

  Polynomial derivative(std::uint32_t var_index) const;
  Polynomial derivative(const Variable& v) const { return derivative(v.index()); }

  // Gcd of all coefficients, nonnegative; 0 for the zero polynomial.
  Integer integer_content() const;
  // Polynomial divided by its integer content (zero stays zero).
  Polynomial primitive() const;
  // Flips sign if the graded-lex leading coefficient is negative.
  Polynomial sign_normalized() const;

  // Substitutes var := perm[var] and re-canonicalizes.
  Polynomial relabeled(std::span<const std::uint32_t> perm) const;

  Polynomial operator-() const;
  friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  Polynomial& operator+=(const Polynomial& o) { return *this = *this + o; }
  Polynomial& operator-=(const Polynomial& o) { return *this = *this - o; }
  Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }
  Polynomial operator*(const Integer& c) const;
  Polynomial pow(std::uint32_t e) const;

  friend bool operator==(const Polynomial&, const Polynomial&) = default;
  // Arbitrary but stable total order, used to keep polynomial sets canonical.
  friend std::strong_ordering operator<=>(const Polynomial& a, const Polynomial& b);

  // Canonical text form: "x0^4*x2 + 9*x1". Names resolved through `names`
  // (by variable index); falls back to "x<i>".
  std::string to_string(const std::function<std::string(std::uint32_t)>& names) const;
  std::string to_string() const;
  std::string to_string(std::span<const Variable> vars) const;

 private:
  std::vector<Term> terms_;
};

std::ostream& operator<<(std::ostream& os, const Polynomial& p);

// Quotient of an exact division, or nullopt if d does not divide p.
std::optional<Polynomial> divide_exact(const Polynomial& p, const Polynomial& d);

// lc(b, v)^(deg_v(a) - deg_v(b) + 1) * a = q*b + prem; requires b nonzero
// with deg_v(b) <= deg_v(a).
Polynomial pseudo_remainder(const Polynomial& a, const Polynomial& b,
                            std::uint32_t var_index);

// Primitive, sign-normalized gcd; gcd(0, q) is the normalization of q.
Polynomial gcd(const Polynomial& p, const Polynomial& q);

// Resultant with respect to v via the subresultant PRS; exact, free of v.
// Requires both degrees in v to be at least 1.
Polynomial resultant(const Polynomial& p, const Polynomial& q, std::uint32_t var_index);
inline Polynomial resultant(const Polynomial& p, const Polynomial& q, const Variable& v) {
  return resultant(p, q, v.index());
}

// (-1)^(d(d-1)/2) * res(p, dp/dv) / lc(p, v) with d = deg_v(p) >= 2.
Polynomial discriminant(const Polynomial& p, std::uint32_t var_index);
inline Polynomial discriminant(const Polynomial& p, const Variable& v) {
  return discriminant(p, v.index());
}

// p / gcd(p, dp/dv), primitive and sign-normalized; requires deg_v(p) >= 1.
Polynomial squarefree_part(const Polynomial& p, std::uint32_t var_index);
inline Polynomial squarefree_part(const Polynomial& p, const Variable& v) {
  return squarefree_part(p, v.index());
}

// Parses the canonical text form. Variable names are resolved through
// `lookup`, which returns the variable index or nullopt (-> ParseError).
Polynomial parse_polynomial(
    const std::string& text,
    const std::function<std::optional<std::uint32_t>(const std::string&)>& lookup);
Polynomial parse_polynomial(const std::string& text, std::span<const Variable> vars);

}  // namespace cadvo
