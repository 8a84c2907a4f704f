#pragma once

#include "mcurve/poly/hform.hpp"
#include "mcurve/poly/unipoly.hpp"

namespace mcurve {

/// Sylvester resultant of f and g with respect to `var`. The result is a
/// form in the two remaining variables (its `var` exponent is always 0) of
/// degree deg f * deg g. Throws InvalidArgument when either form does not
/// involve `var`.
HForm resultant_eliminating(const HForm& f, const HForm& g, Var var);

/// Binary form (no z) dehomogenised at y = 1: coefficient i of x^i y^(n-i).
UniPoly dehomogenize_xy(const HForm& binary);

/// Rational parametrisation of a line used by restrict_to_line.
///
/// For l = l0 x + l1 y + l2 z let j be the largest index with l_j != 0 and
/// i1 < i2 the other two indices. Then
///   P0 = l_j e_{i1} - l_{i1} e_j,   P1 = l_j e_{i2} - l_{i2} e_j
/// both lie on the line and are independent. The line is s P0 + t P1.
struct LineParametrization {
  std::array<Rational, 3> p0;
  std::array<Rational, 3> p1;
};
LineParametrization parametrize_line(const HForm& line);

/// f restricted to a line, as the binary form B(s, t) = f(s P0 + t P1).
/// `poly` is B(s, 1); `root_at_infinity` = deg f - deg poly is the
/// multiplicity of the root (s : t) = (1 : 0), i.e. of the point P0.
/// For nonzero B, root multiplicities equal intersection multiplicities.
struct Restriction {
  UniPoly poly;
  int root_at_infinity = 0;
  bool identically_zero() const { return poly.is_zero(); }
};
Restriction restrict_to_line(const HForm& f, const HForm& line);

}  // namespace mcurve
