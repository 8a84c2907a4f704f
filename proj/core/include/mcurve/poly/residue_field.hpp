#pragma once

#include <array>
#include <vector>

#include "mcurve/poly/hform.hpp"
#include "mcurve/poly/unipoly.hpp"

namespace mcurve {

/// The field Q[a]/(m(a)) for a monic irreducible m. Elements are UniPoly
/// values of degree < deg m. A degree-1 modulus gives Q itself, so rational
/// and algebraic points share one code path.
class ResidueField {
 public:
  using Elem = UniPoly;
  using Point = std::array<Elem, 3>;

  /// The modulus is made monic; irreducibility is the caller's contract.
  explicit ResidueField(const UniPoly& modulus);

  int degree() const { return modulus_.degree(); }
  const UniPoly& modulus() const { return modulus_; }

  Elem from_rational(const Rational& c) const { return reduce(UniPoly::constant(c)); }
  /// Class of a, i.e. the distinguished root of the modulus.
  Elem generator() const { return reduce(UniPoly{0, 1}); }
  Elem reduce(const UniPoly& p) const { return p % modulus_; }

  Elem add(const Elem& a, const Elem& b) const { return a + b; }
  Elem sub(const Elem& a, const Elem& b) const { return a - b; }
  Elem mul(const Elem& a, const Elem& b) const { return (a * b) % modulus_; }
  Elem inverse(const Elem& a) const;
  bool is_zero(const Elem& a) const { return a.is_zero(); }

  Elem evaluate(const HForm& f, const Point& p) const;
  Point gradient(const HForm& f, const Point& p) const;
  Point cross(const Point& a, const Point& b) const;
  Point scale(const Elem& c, const Point& p) const;
  bool is_zero_point(const Point& p) const;

 private:
  UniPoly modulus_;
};

/// Polynomial in one variable with coefficients in a ResidueField
/// (coefficient i multiplies z^i; trailing zeros trimmed).
using FieldPoly = std::vector<ResidueField::Elem>;

void trim(FieldPoly& p);
/// Monic gcd over the field.
FieldPoly field_gcd(const ResidueField& k, FieldPoly a, FieldPoly b);

}  // namespace mcurve
