#pragma once

#include "cadvo/polynomial.hpp"

namespace cadvo {

// Dense univariate view, coefficients by ascending power, no trailing zeros.
using DenseCoeffs = std::vector<Integer>;

// Requires at most one variable; ZeroPolynomial / Multivariate otherwise.
DenseCoeffs dense_coefficients(const Polynomial& p);

// Sturm chain of a squarefree integer polynomial. Each element is an integer
// polynomial equal to a positive multiple of the textbook chain entry, which
// leaves sign variations unchanged.
std::vector<DenseCoeffs> sturm_chain(const DenseCoeffs& squarefree);

// Number of distinct real roots over (-inf, +inf), via sign variations of the
// Sturm chain of the squarefree part, with the endpoint signs taken
// symbolically from leading coefficients and degree parity. Constants have no
// roots; the zero polynomial is an error.
unsigned count_distinct_real_roots(const Polynomial& p);

}  // namespace cadvo
