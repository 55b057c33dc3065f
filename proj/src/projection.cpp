#include "cadvo/projection.hpp"

#include <algorithm>
#include <sstream>

namespace cadvo {

namespace {

std::atomic<std::uint64_t> projection_calls{0};

std::optional<Variable> main_variable(const Polynomial& p,
                                      std::span<const Variable> elimination_context) {
  for (const auto& v : elimination_context) {
    if (p.contains(v.index())) return v;
  }
  return std::nullopt;
}

}  // namespace

std::vector<Polynomial> canonicalize_set(std::span<const Polynomial> polys,
                                         std::span<const Variable> elimination_context) {
  std::vector<Polynomial> out;
  out.reserve(polys.size());
  for (const auto& p : polys) {
    if (p.is_constant()) continue;
    Polynomial q = p.primitive().sign_normalized();
    const auto mv = main_variable(q, elimination_context);
    if (mv && q.degree_in(*mv) >= 1) {
      q = squarefree_part(q, *mv);
    }
    out.push_back(std::move(q));
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<Polynomial> mccallum_step(std::span<const Polynomial> polys, const Variable& v,
                                      std::span<const Variable> remaining_context) {
  projection_calls.fetch_add(1, std::memory_order_relaxed);
  std::vector<Polynomial> out;
  std::vector<const Polynomial*> with_v;
  for (const auto& p : polys) {
    if (p.contains(v.index())) {
      with_v.push_back(&p);
    } else {
      out.push_back(p);  // free of v: pass through
    }
  }
  for (const auto* p : with_v) {
    for (auto& c : p->coefficients_in(v.index())) {
      out.push_back(std::move(c));
    }
    if (p->degree_in(v) >= 2) {
      out.push_back(discriminant(*p, v));
    }
  }
  for (std::size_t i = 0; i < with_v.size(); ++i) {
    for (std::size_t j = i + 1; j < with_v.size(); ++j) {
      out.push_back(resultant(*with_v[i], *with_v[j], v));
    }
  }
  return canonicalize_set(out, remaining_context);
}

ProjectionSet full_projection(const ProblemInstance& problem,
                              const VariableOrdering& ordering) {
  if (!is_admissible(problem, ordering)) {
    fail(errc::inadmissible_ordering,
         "ordering (" + ordering.to_string() + ") is not admissible for problem '" +
             problem.id + "'");
  }
  projection_calls.fetch_add(1, std::memory_order_relaxed);
  const std::vector<Polynomial> input = polynomials_of(problem);
  if (input.empty()) {
    fail(errc::empty_input, "problem '" + problem.id + "' has no nonconstant polynomial");
  }
  ProjectionSet ps;
  std::span<const Variable> context(ordering.order);
  ps.levels.push_back(canonicalize_set(input, context));
  for (std::size_t k = 0; k + 1 < ordering.order.size(); ++k) {
    const Variable& v = ordering.order[k];
    const auto remaining = context.subspan(k + 1);
    ps.levels.push_back(mccallum_step(ps.levels.back(), v, remaining));
  }
  return ps;
}

std::string projection_to_string(const ProjectionSet& ps, std::span<const Variable> vars) {
  std::ostringstream os;
  const std::size_t n = ps.levels.size();
  for (std::size_t i = 0; i < n; ++i) {
    os << "S_" << (n - i) << ":";
    if (ps.levels[i].empty()) os << " (empty)";
    os << "\n";
    for (const auto& p : ps.levels[i]) {
      os << "  " << p.to_string(vars) << "\n";
    }
  }
  return os.str();
}

std::uint64_t projection_call_count() {
  return projection_calls.load(std::memory_order_relaxed);
}

void reset_projection_call_count() {
  projection_calls.store(0, std::memory_order_relaxed);
}

}  // namespace cadvo
