#include "cadvo/sturm.hpp"

#include <algorithm>

namespace cadvo {

namespace {

void trim(DenseCoeffs& c) {
  while (!c.empty() && c.back() == 0) c.pop_back();
}

Integer content(const DenseCoeffs& c) {
  Integer g(0);
  for (const auto& x : c) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

void divide_by_content(DenseCoeffs& c) {
  const Integer g = content(c);
  if (g == 0 || g == 1) return;
  for (auto& x : c) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
}

DenseCoeffs derivative(const DenseCoeffs& c) {
  DenseCoeffs d;
  for (std::size_t k = 1; k < c.size(); ++k) d.push_back(c[k] * static_cast<long>(k));
  trim(d);
  return d;
}

// Remainder of a by b scaled by the positive factor |lc(b)|^(deg a - deg b + 1).
DenseCoeffs positive_pseudo_remainder(const DenseCoeffs& a, const DenseCoeffs& b) {
  DenseCoeffs r = a;
  const std::size_t db = b.size() - 1;
  const Integer lb = abs(b.back());
  const bool lb_negative = b.back() < 0;
  std::size_t budget = a.size() - b.size() + 1;
  trim(r);
  while (r.size() >= b.size()) {
    const Integer lead = r.back();
    for (auto& x : r) x *= lb;
    const std::size_t shift = r.size() - 1 - db;
    // r -= lead * sign(lc(b)) * x^shift * b cancels the lead while keeping
    // the accumulated multiplier |lc(b)|^k positive.
    const Integer factor = lb_negative ? Integer(-lead) : lead;
    for (std::size_t k = 0; k < b.size(); ++k) r[shift + k] -= factor * b[k];
    --budget;
    trim(r);
  }
  for (; budget > 0; --budget) {
    for (auto& x : r) x *= lb;
  }
  return r;
}

int sign_at_plus_infinity(const DenseCoeffs& c) {
  return sgn(c.back());
}

int sign_at_minus_infinity(const DenseCoeffs& c) {
  const int s = sgn(c.back());
  return (c.size() - 1) % 2 == 0 ? s : -s;
}

unsigned sign_variations(const std::vector<int>& signs) {
  unsigned v = 0;
  int last = 0;
  for (int s : signs) {
    if (s == 0) continue;
    if (last != 0 && s != last) ++v;
    last = s;
  }
  return v;
}

}  // namespace

DenseCoeffs dense_coefficients(const Polynomial& p) {
  if (p.is_zero()) fail(errc::zero_polynomial, "zero polynomial has no root count");
  const auto vars = p.variable_indices();
  if (vars.size() > 1) fail(errc::multivariate, "expected a univariate polynomial");
  if (vars.empty()) return {p.constant_term()};
  DenseCoeffs c(p.degree_in(vars[0]) + 1, Integer(0));
  for (const auto& t : p.terms()) {
    const std::size_t k = t.exps.empty() ? 0 : t.exps[0].exp;
    c[k] = t.coeff;
  }
  return c;
}

std::vector<DenseCoeffs> sturm_chain(const DenseCoeffs& squarefree) {
  std::vector<DenseCoeffs> chain;
  chain.push_back(squarefree);
  DenseCoeffs d = derivative(squarefree);
  if (d.empty()) return chain;
  chain.push_back(std::move(d));
  while (chain.back().size() > 1) {
    DenseCoeffs r = positive_pseudo_remainder(chain[chain.size() - 2], chain.back());
    if (r.empty()) break;  // cannot happen for squarefree input
    for (auto& x : r) x = -x;
    divide_by_content(r);
    chain.push_back(std::move(r));
  }
  return chain;
}

unsigned count_distinct_real_roots(const Polynomial& p) {
  DenseCoeffs c = dense_coefficients(p);
  if (c.size() <= 1) return 0;

  // Squarefree part via the univariate chain: p / gcd(p, p').
  const auto vars = p.variable_indices();
  const Polynomial sf = squarefree_part(p, vars[0]);
  c = dense_coefficients(sf);
  if (c.size() <= 1) return 0;

  const auto chain = sturm_chain(c);
  std::vector<int> at_minus, at_plus;
  at_minus.reserve(chain.size());
  at_plus.reserve(chain.size());
  for (const auto& f : chain) {
    at_minus.push_back(sign_at_minus_infinity(f));
    at_plus.push_back(sign_at_plus_infinity(f));
  }
  const unsigned vm = sign_variations(at_minus);
  const unsigned vp = sign_variations(at_plus);
  if (vm < vp) fail(errc::internal, "Sturm variation count underflow");
  return vm - vp;
}

}  // namespace cadvo
