#pragma once

#include <vector>

#include "mcurve/poly/unipoly.hpp"

namespace mcurve {

struct PolyFactor {
  UniPoly poly;  // monic, irreducible over Q
  int multiplicity = 1;
};

/// Rational roots of a nonzero polynomial, ascending, without repetition.
/// Exact: roots are isolated with Sturm sequences and confirmed by
/// evaluation, so no integer factorisation is needed.
std::vector<Rational> rational_roots(const UniPoly& p);

/// Complete factorisation over Q of a polynomial whose squarefree parts
/// have degree <= 4. Factors are sorted by (degree, coefficients) and
/// multiplied together give monic(p). Larger squarefree parts without
/// rational roots or quadratic factors throw InvalidArgument.
std::vector<PolyFactor> factor_over_q(const UniPoly& p);

bool is_irreducible_over_q(const UniPoly& p);

/// Integer square root if n is a perfect square.
bool exact_sqrt(const Integer& n, Integer& root);

}  // namespace mcurve
