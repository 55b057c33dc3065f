#pragma once

#include <atomic>
#include <span>

#include "cadvo/problem.hpp"

namespace cadvo {

// Projection polynomial sets: levels[0] is S_n (the canonicalized input),
// levels.back() is S_1, univariate in the last-eliminated variable. Each
// level is sorted and duplicate-free.
struct ProjectionSet {
  std::vector<std::vector<Polynomial>> levels;
};

// Replaces each polynomial by its primitive, sign-normalized squarefree part
// (squarefree with respect to its main variable, the first variable of
// `elimination_context` it contains), drops constants, and deduplicates.
std::vector<Polynomial> canonicalize_set(std::span<const Polynomial> polys,
                                         std::span<const Variable> elimination_context);

// One McCallum projection step eliminating v: all coefficients with respect
// to v, discriminants of the polynomials of v-degree >= 2, resultants of
// distinct pairs both containing v, plus pass-through of polynomials free of
// v; the union is canonicalized against `remaining_context`.
std::vector<Polynomial> mccallum_step(std::span<const Polynomial> polys, const Variable& v,
                                      std::span<const Variable> remaining_context);

// Full projection along the elimination order. EmptyInput when the problem
// contributes no nonconstant polynomial; InadmissibleOrdering when the
// ordering does not fit the quantifier structure.
ProjectionSet full_projection(const ProblemInstance& problem,
                              const VariableOrdering& ordering);

std::string projection_to_string(const ProjectionSet& ps, std::span<const Variable> vars);

// Instrumentation: number of projection computations since the last reset.
// Used by tests to confirm which heuristics touch projection at all.
std::uint64_t projection_call_count();
void reset_projection_call_count();

}  // namespace cadvo
