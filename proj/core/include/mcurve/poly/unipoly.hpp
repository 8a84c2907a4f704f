#pragma once

#include <compare>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "mcurve/poly/rational.hpp"

namespace mcurve {

/// Dense univariate polynomial over Q; coefficient i multiplies s^i.
/// Trailing zeros are trimmed so the leading coefficient is nonzero unless
/// the polynomial is zero.
class UniPoly {
 public:
  UniPoly() = default;
  UniPoly(std::initializer_list<Rational> coeffs);
  explicit UniPoly(std::vector<Rational> coeffs);

  static UniPoly constant(const Rational& c) { return UniPoly(std::vector<Rational>{c}); }
  /// c * s^n
  static UniPoly monomial(int n, const Rational& c = 1);

  bool is_zero() const { return coeffs_.empty(); }
  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  const Rational& leading() const { return coeffs_.back(); }
  const std::vector<Rational>& coeffs() const { return coeffs_; }
  Rational coeff(int i) const;

  Rational evaluate(const Rational& s) const;
  UniPoly derivative() const;
  UniPoly monic() const;
  /// Integer coefficients with content 1 and positive leading coefficient.
  UniPoly primitive() const;

  std::string to_string(char var = 's') const;

  friend bool operator==(const UniPoly&, const UniPoly&) = default;
  friend auto operator<=>(const UniPoly& a, const UniPoly& b) {
    if (a.degree() != b.degree()) return a.degree() <=> b.degree();
    for (int i = a.degree(); i >= 0; --i) {
      if (a.coeffs_[i] != b.coeffs_[i]) return a.coeffs_[i] < b.coeffs_[i] ? std::strong_ordering::less
                                                                            : std::strong_ordering::greater;
    }
    return std::strong_ordering::equal;
  }

  UniPoly operator-() const;

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

UniPoly operator+(const UniPoly& a, const UniPoly& b);
UniPoly operator-(const UniPoly& a, const UniPoly& b);
UniPoly operator*(const UniPoly& a, const UniPoly& b);
UniPoly operator*(const Rational& c, const UniPoly& a);

/// Euclidean division a = q b + r with deg r < deg b.
std::pair<UniPoly, UniPoly> divmod(const UniPoly& a, const UniPoly& b);
UniPoly operator%(const UniPoly& a, const UniPoly& b);
/// Exact quotient; throws when b does not divide a.
UniPoly exact_div(const UniPoly& a, const UniPoly& b);

/// Monic gcd over Q. Both zero is an error.
UniPoly gcd_uni(const UniPoly& a, const UniPoly& b);

/// Extended gcd: returns (g, u, v) with u a + v b = g, g monic.
struct ExtendedGcd {
  UniPoly gcd;
  UniPoly u;
  UniPoly v;
};
ExtendedGcd extended_gcd(const UniPoly& a, const UniPoly& b);

/// Squarefree decomposition (Yun): pairs (monic squarefree factor, multiplicity),
/// pairwise coprime, product over factors equals monic(a).
std::vector<std::pair<UniPoly, int>> squarefree_decomposition(const UniPoly& a);

}  // namespace mcurve
