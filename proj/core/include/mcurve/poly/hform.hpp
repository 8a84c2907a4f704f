#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "mcurve/poly/rational.hpp"

namespace mcurve {

enum class Var { X = 0, Y = 1, Z = 2 };

/// Exponent triple (a, b, c) of the monomial x^a y^b z^c.
struct Exponent {
  int x = 0;
  int y = 0;
  int z = 0;

  int degree() const { return x + y + z; }
  int operator[](Var v) const { return v == Var::X ? x : (v == Var::Y ? y : z); }
  friend bool operator==(const Exponent&, const Exponent&) = default;
};

inline Exponent operator+(Exponent a, Exponent b) { return {a.x + b.x, a.y + b.y, a.z + b.z}; }

/// Graded lexicographic order with x > y > z. `before(a, b)` is true when
/// a is the larger monomial, so ordered containers iterate from the leading
/// monomial down: x^2, xy, xz, y^2, yz, z^2.
struct GrlexBefore {
  bool operator()(const Exponent& a, const Exponent& b) const {
    if (a.degree() != b.degree()) return a.degree() > b.degree();
    if (a.x != b.x) return a.x > b.x;
    return a.y > b.y;
  }
};

/// All exponent triples of the given degree in grlex order;
/// length (degree+1)(degree+2)/2.
std::vector<Exponent> monomial_basis(int degree);

/// Number of monomials of degree n in three variables (0 for n < 0).
inline std::size_t basis_size(int n) {
  return n < 0 ? 0 : static_cast<std::size_t>(n + 1) * static_cast<std::size_t>(n + 2) / 2;
}

/// Position of e inside monomial_basis(e.degree()).
inline std::size_t basis_index(const Exponent& e) {
  const std::size_t j = static_cast<std::size_t>(e.y + e.z);
  return j * (j + 1) / 2 + static_cast<std::size_t>(e.z);
}

using TermMap = std::map<Exponent, Rational, GrlexBefore>;
using LinearMap = std::array<std::array<Rational, 3>, 3>;

/// Homogeneous form in x, y, z with rational coefficients. Zero
/// coefficients are never stored; the zero form keeps its declared degree.
class HForm {
 public:
  HForm() = default;
  explicit HForm(int degree);

  static HForm constant(const Rational& c);
  static HForm variable(Var v);
  static HForm monomial(Exponent e, const Rational& c = 1);
  /// a*x + b*y + c*z
  static HForm linear(const Rational& a, const Rational& b, const Rational& c);
  /// a x^2 + b y^2 + c z^2 + d xy + e xz + f yz
  static HForm conic(const Rational& a, const Rational& b, const Rational& c,
                     const Rational& d, const Rational& e, const Rational& f);

  int degree() const { return degree_; }
  bool is_zero() const { return terms_.empty(); }
  const TermMap& terms() const { return terms_; }
  std::size_t term_count() const { return terms_.size(); }
  Rational coefficient(const Exponent& e) const;

  /// Adds c to the coefficient of e; e must have the form's degree.
  void add_term(const Exponent& e, const Rational& c);

  /// Highest power of v occurring in the form (-1 for the zero form).
  int degree_in(Var v) const;

  Rational evaluate(const std::array<Rational, 3>& point) const;

  /// Scaled so the coefficients are coprime integers and the leading
  /// (grlex-first) coefficient is positive.
  HForm normalized() const;
  /// Coefficients rescaled to coprime integers, sign preserved.
  HForm primitive() const;

  /// Coefficient vector in the grlex basis of S_degree.
  std::vector<Rational> dense() const;

  std::string to_string() const;

  friend bool operator==(const HForm& a, const HForm& b) {
    return a.degree_ == b.degree_ && a.terms_ == b.terms_;
  }

  HForm operator-() const;
  HForm& operator*=(const Rational& c);

 private:
  int degree_ = 0;
  TermMap terms_;
};

HForm operator+(const HForm& a, const HForm& b);
HForm operator-(const HForm& a, const HForm& b);
HForm operator*(const HForm& a, const HForm& b);
HForm operator*(const Rational& c, const HForm& f);

inline HForm multiply(const HForm& a, const HForm& b) { return a * b; }
HForm power(const HForm& f, int n);

/// Formal partial derivative. A degree-0 input yields the zero form.
HForm partial(const HForm& f, Var v);

/// f(M v): every variable is replaced by the corresponding row of M applied
/// to (x, y, z).
HForm substitute_linear(const HForm& f, const LinearMap& m);

/// Euler combination x f_x + y f_y + z f_z.
HForm euler_combination(const HForm& f);

/// True when b = c * a for some nonzero rational c.
bool proportional(const HForm& a, const HForm& b);

}  // namespace mcurve
