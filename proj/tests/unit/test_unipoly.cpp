#include <gtest/gtest.h>

#include <random>

#include "mcurve/error.hpp"
#include "mcurve/poly/factor.hpp"
#include "mcurve/poly/residue_field.hpp"
#include "mcurve/poly/resultant.hpp"
#include "mcurve/poly/unipoly.hpp"
#include "random_forms.hpp"

using namespace mcurve;

namespace {

const HForm x = HForm::variable(Var::X);
const HForm y = HForm::variable(Var::Y);
const HForm z = HForm::variable(Var::Z);
const UniPoly s{0, 1};

UniPoly product(const std::vector<PolyFactor>& fs) {
  UniPoly p = UniPoly::constant(1);
  for (const auto& f : fs)
    for (int i = 0; i < f.multiplicity; ++i) p = p * f.poly;
  return p;
}

// Oracle: brute-force rational root test from the rational root theorem for
// small integer polynomials.
bool has_rational_root_brute(const UniPoly& p) {
  UniPoly q = p.primitive();
  long a0 = q.coeff(0).get_num().get_si();
  long an = q.leading().get_num().get_si();
  if (a0 == 0) return true;
  for (long num = 1; num <= std::labs(a0); ++num) {
    if (a0 % num) continue;
    for (long den = 1; den <= std::labs(an); ++den) {
      if (an % den) continue;
      for (int sign : {-1, 1}) {
        if (q.evaluate(make_rational(sign * num, den)) == 0) return true;
      }
    }
  }
  return false;
}

// Oracle: monic integer quartic has a monic integer quadratic factor, by
// enumeration of x^2 + b x + c with c | a0 and |b| bounded.
bool has_quadratic_factor_brute(const UniPoly& monic_int) {
  long a0 = monic_int.coeff(0).get_num().get_si();
  for (long c = -std::labs(a0); c <= std::labs(a0); ++c) {
    if (c == 0 || a0 % c) continue;
    for (long b = -60; b <= 60; ++b) {
      UniPoly quad{Rational(c), Rational(b), 1};
      if ((monic_int % quad).is_zero()) return true;
    }
  }
  return false;
}

}  // namespace

TEST(UniPoly, GcdExamples) {
  // Binary forms in (s, t) are compared through their t = 1 dehomogenisation.
  UniPoly a{-1, 0, 1};  // s^2 - 1
  UniPoly b{-1, 1};     // s - 1
  EXPECT_EQ(gcd_uni(a, b), b);
  UniPoly c{1, 0, 1};  // s^2 + 1
  EXPECT_EQ(gcd_uni(c, b), UniPoly::constant(1));
  UniPoly d{3, 0, 6};
  EXPECT_EQ(gcd_uni(d, d), d.monic());
  EXPECT_THROW(gcd_uni(UniPoly{}, UniPoly{}), Error);
}

TEST(UniPoly, SquarefreeDecomposition) {
  UniPoly p = (s - UniPoly::constant(1)) * (s - UniPoly::constant(1)) * (s * s + UniPoly::constant(2)) * s * s * s;
  auto sq = squarefree_decomposition(p);
  ASSERT_EQ(sq.size(), 3u);
  EXPECT_EQ(sq[0].first, UniPoly({2, 0, 1}));
  EXPECT_EQ(sq[0].second, 1);
  EXPECT_EQ(sq[1].first, UniPoly({-1, 1}));
  EXPECT_EQ(sq[1].second, 2);
  EXPECT_EQ(sq[2].first, s);
  EXPECT_EQ(sq[2].second, 3);
}

TEST(Factor, RationalRoots) {
  UniPoly p = (Rational(3) * s - UniPoly::constant(2)) * (s + UniPoly::constant(5)) * (s * s - UniPoly::constant(2));
  auto r = rational_roots(p);
  ASSERT_EQ(r.size(), 2u);
  EXPECT_EQ(r[0], -5);
  EXPECT_EQ(r[1], Rational(2, 3));
  // Large roots do not need integer factorisation.
  Integer big("123456789012345678901234567");
  UniPoly q = (s - UniPoly::constant(Rational(big))) * (s * s + UniPoly::constant(1));
  auto rq = rational_roots(q);
  ASSERT_EQ(rq.size(), 1u);
  EXPECT_EQ(rq[0], Rational(big));
}

TEST(Factor, QuarticSplittingIntoQuadratics) {
  UniPoly p = (s * s + UniPoly::constant(1)) * (s * s - UniPoly::constant(2));
  auto f = factor_over_q(p);
  ASSERT_EQ(f.size(), 2u);
  EXPECT_EQ(product(f), p.monic());
  UniPoly q = (s * s + s + UniPoly::constant(Rational(1, 3))) * (Rational(2) * s * s - UniPoly::constant(3) * s + UniPoly::constant(7));
  auto g = factor_over_q(q);
  ASSERT_EQ(g.size(), 2u);
  EXPECT_EQ(product(g), q.monic());
  // x^4 + 1 is irreducible over Q.
  EXPECT_TRUE(is_irreducible_over_q(UniPoly{1, 0, 0, 0, 1}));
  // x^4 + 4 = (x^2 + 2x + 2)(x^2 - 2x + 2)
  EXPECT_EQ(factor_over_q(UniPoly{4, 0, 0, 0, 1}).size(), 2u);
}

TEST(FactorProperty, FactorsMultiplyBackAndAreIrreducible) {
  std::mt19937_64 rng(2024);
  std::uniform_int_distribution<int> coef(-6, 6);
  for (int trial = 0; trial < 300; ++trial) {
    // Random monic integer polynomial of degree 2..4, sometimes with
    // planted factors.
    int deg = 2 + static_cast<int>(rng() % 3);
    std::vector<Rational> c;
    for (int i = 0; i < deg; ++i) c.push_back(coef(rng));
    c.push_back(1);
    UniPoly p(std::move(c));
    if (trial % 3 == 0) p = p * UniPoly{Rational(coef(rng)), 1};
    if (p.degree() > 4) p = UniPoly{Rational(coef(rng)), Rational(coef(rng)), 1} * UniPoly{Rational(coef(rng)), Rational(coef(rng)), 1};
    auto fs = factor_over_q(p);
    EXPECT_EQ(product(fs), p.monic());
    for (const auto& f : fs) {
      if (f.poly.degree() >= 2) EXPECT_FALSE(has_rational_root_brute(f.poly)) << f.poly.to_string();
      if (f.poly.degree() == 4) EXPECT_FALSE(has_quadratic_factor_brute(f.poly)) << f.poly.to_string();
    }
  }
}

TEST(Restriction, ConicOnCoordinateLines) {
  HForm q = x * x + y * y - z * z;
  Restriction r1 = restrict_to_line(q, z);
  EXPECT_EQ(r1.poly, UniPoly({1, 0, 1}));  // s^2 + t^2
  EXPECT_EQ(r1.root_at_infinity, 0);
  EXPECT_TRUE(rational_roots(r1.poly).empty());

  Restriction r2 = restrict_to_line(q, y);
  EXPECT_EQ(r2.poly, UniPoly({-1, 0, 1}));  // s^2 - t^2
  auto roots = rational_roots(r2.poly);
  ASSERT_EQ(roots.size(), 2u);
  // s = +-1 with P0 = (1:0:0), P1 = (0:0:1): points (+-1 : 0 : 1).
  auto par = parametrize_line(y);
  EXPECT_EQ(par.p0, (std::array<Rational, 3>{1, 0, 0}));
  EXPECT_EQ(par.p1, (std::array<Rational, 3>{0, 0, 1}));
}

TEST(Restriction, TransversalSecantOfCircle) {
  HForm q = x * x + y * y - z * z;
  Restriction r = restrict_to_line(q, y - x - z);
  ASSERT_EQ(r.poly.degree() + r.root_at_infinity, 2);
  // Discriminant of the binary quadratic must be nonzero.
  Rational a = r.poly.coeff(2), b = r.poly.coeff(1), c = r.poly.coeff(0);
  Rational disc = r.root_at_infinity == 0 ? Rational(b * b - 4 * a * c) : Rational(b * b);
  EXPECT_NE(disc, 0);
  EXPECT_THROW(restrict_to_line(q, HForm(1)), Error);
}

TEST(Restriction, PointsLieOnLine) {
  for (const HForm& l : {x, y, z, x + Rational(2) * y - z, y - Rational(3) * z}) {
    auto par = parametrize_line(l);
    EXPECT_EQ(l.evaluate(par.p0), 0);
    EXPECT_EQ(l.evaluate(par.p1), 0);
  }
}

TEST(RestrictionProperty, Multiplicative) {
  std::mt19937_64 rng(5);
  for (int i = 0; i < 30; ++i) {
    HForm f = testkit::random_form(rng, 2);
    HForm g = testkit::random_form(rng, 3);
    HForm l = testkit::random_form(rng, 1, 1.0);
    if (l.is_zero()) continue;
    auto rf = restrict_to_line(f, l), rg = restrict_to_line(g, l), rfg = restrict_to_line(f * g, l);
    EXPECT_EQ(rfg.poly, rf.poly * rg.poly);
  }
}

TEST(Resultant, ConicAndLine) {
  HForm q = x * x + y * y - z * z;
  EXPECT_EQ(resultant_eliminating(q, z - y, Var::Z), x * x);
}

TEST(Resultant, ProportionalConicsVanish) {
  HForm q = x * x + y * y - z * z;
  EXPECT_TRUE(resultant_eliminating(q, Rational(3) * q, Var::Z).is_zero());
}

TEST(Resultant, TwoConicsTangentTwice) {
  // Sylvester determinant by hand: Res(-z^2 + A, -z^2 + B) = (B - A)^2 with
  // A = x^2 + y^2, B = x^2 + 2y^2, i.e. y^4.
  HForm q1 = x * x + y * y - z * z;
  HForm q2 = x * x + Rational(2) * y * y - z * z;
  HForm r = resultant_eliminating(q1, q2, Var::Z);
  EXPECT_EQ(r, y * y * y * y);
  auto sq = squarefree_decomposition(dehomogenize_xy(r));
  EXPECT_TRUE(sq.empty());  // constant after dehomogenising at y = 1
}

TEST(Resultant, RequiresVariable) {
  EXPECT_THROW(resultant_eliminating(x * x + y * y, z * z - x * x, Var::Z), Error);
}

TEST(ResultantProperty, VanishesIffCommonFactor) {
  std::mt19937_64 rng(31337);
  for (int i = 0; i < 25; ++i) {
    HForm h = testkit::random_form(rng, 1 + static_cast<int>(rng() % 2), 1.0);
    HForm a = testkit::random_form(rng, 1 + static_cast<int>(rng() % 2), 1.0);
    HForm b = testkit::random_form(rng, 1 + static_cast<int>(rng() % 2), 1.0);
    if (h.degree_in(Var::Z) < 1 || a.degree_in(Var::Z) < 0 || b.degree_in(Var::Z) < 0) continue;
    EXPECT_TRUE(resultant_eliminating(h * a, h * b, Var::Z).is_zero());
    if (a.degree_in(Var::Z) >= 1 && b.degree_in(Var::Z) >= 1) {
      // Generic a, b share no factor.
      EXPECT_FALSE(resultant_eliminating(a, b, Var::Z).is_zero());
    }
  }
}

TEST(ResidueField, QuadraticExtensionArithmetic) {
  ResidueField k(UniPoly{-2, 0, 1});  // Q(sqrt 2)
  auto a = k.generator();
  EXPECT_EQ(k.mul(a, a), k.from_rational(2));
  auto b = k.add(a, k.from_rational(1));
  auto inv = k.inverse(b);
  EXPECT_EQ(k.mul(b, inv), k.from_rational(1));
  HForm q = x * x + y * y - Rational(2) * z * z;
  // (0 : sqrt2 : 1) lies on x^2 + y^2 - 2 z^2
  ResidueField::Point p{k.from_rational(0), a, k.from_rational(1)};
  EXPECT_TRUE(k.is_zero(k.evaluate(q, p)));
}

TEST(ResidueField, FieldGcd) {
  ResidueField k(UniPoly{1, 0, 1});  // Q(i)
  auto i = k.generator();
  auto one = k.from_rational(1);
  // (z - i)(z + 1) and (z - i)(z - 2) share z - i.
  FieldPoly a{k.sub(k.from_rational(0), i), k.sub(one, i), one};          // z^2 + (1 - i) z - i
  FieldPoly b{k.mul(i, k.from_rational(2)), k.sub(k.from_rational(-2), i), one};  // z^2 - (2 + i) z + 2i
  FieldPoly g = field_gcd(k, a, b);
  ASSERT_EQ(g.size(), 2u);
  EXPECT_EQ(g[0], k.sub(k.from_rational(0), i));
}
