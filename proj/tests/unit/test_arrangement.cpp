#include <gtest/gtest.h>

#include <random>

#include "fixture_forms.hpp"
#include "mcurve/arrangement/arrangement.hpp"
#include "mcurve/error.hpp"
#include "mcurve/poly/residue_field.hpp"
#include "numeric_oracle.hpp"
#include "random_arrangements.hpp"

using namespace mcurve;
using namespace mcurve::testkit;

namespace {

ErrorKind kind_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  ADD_FAILURE() << "no error thrown";
  return ErrorKind::InternalInconsistency;
}

WeakCombinatorics wc_of(std::initializer_list<long> counts, int d, int k) {
  WeakCombinatorics wc;
  wc.d = d;
  wc.k = k;
  int r = 2;
  for (long n : counts) wc.counts[r++] = n;
  return wc;
}

const ComponentId kFirstConic{ComponentKind::Conic, 0};

}  // namespace

TEST(Validate, NormalizesAndCounts) {
  const Arrangement a = validate(Arrangement({line(-2, 0, 0), line(0, 3, -3)}, {conic(2, 2, -2, 0, 0, 0)}));
  EXPECT_EQ(a.d(), 2);
  EXPECT_EQ(a.k(), 1);
  EXPECT_EQ(a.lines()[0], line(1, 0, 0));
  EXPECT_EQ(a.lines()[1], line(0, 1, -1));
  EXPECT_EQ(a.conics()[0], conic(1, 1, -1, 0, 0, 0));
  EXPECT_EQ(validate(cl1_arr()).d(), 6);
}

TEST(Validate, Rejections) {
  EXPECT_EQ(kind_of([] { validate(Arrangement({}, {conic(0, 0, 0, 1, 0, 0)})); }), ErrorKind::SingularConic);
  EXPECT_EQ(kind_of([] { validate(Arrangement({line(1, 0, 0), line(2, 0, 0)}, {})); }), ErrorKind::DuplicateComponent);
  EXPECT_EQ(kind_of([] { validate(Arrangement({HForm(1)}, {})); }), ErrorKind::ZeroForm);
  EXPECT_EQ(kind_of([] { validate(Arrangement({conic(1, 1, 1, 0, 0, 0)}, {})); }), ErrorKind::InvalidComponent);
}

TEST(ComponentIds, ParseAndPrint) {
  EXPECT_EQ(ComponentId::parse("C2"), (ComponentId{ComponentKind::Conic, 1}));
  EXPECT_EQ(ComponentId::parse("L10").to_string(), "L10");
  EXPECT_EQ(kind_of([] { ComponentId::parse("Q1"); }), ErrorKind::ParseError);
  EXPECT_EQ(kind_of([] { ComponentId::parse("L0"); }), ErrorKind::ParseError);
  EXPECT_EQ(kind_of([] { cl1_arr().global_of({ComponentKind::Conic, 1}); }), ErrorKind::UnknownComponent);
}

TEST(SingularPoints, TwoLines) {
  const auto pts = singular_points(validate(Arrangement({line(1, 0, 0), line(0, 1, 0)}, {})));
  ASSERT_EQ(pts.size(), 1u);
  EXPECT_EQ(pts[0].multiplicity, 2);
  EXPECT_EQ(pts[0].field_degree, 1);
  EXPECT_EQ(pts[0].coordinates[0], UniPoly());
  EXPECT_EQ(pts[0].coordinates[1], UniPoly());
  EXPECT_EQ(pts[0].coordinates[2], UniPoly{1});
}

TEST(SingularPoints, GoldenFixtures) {
  EXPECT_EQ(weak_combinatorics(validate(cl1_arr())), wc_of({3, 0, 4}, 6, 1));
  EXPECT_EQ(weak_combinatorics(validate(cl2_arr())), wc_of({5, 2, 4}, 7, 1));
  EXPECT_EQ(weak_combinatorics(validate(cl3_arr())), wc_of({6, 4, 6}, 9, 1));
  EXPECT_EQ(weak_combinatorics(validate(st_arr())), wc_of({1, 0, 3}, 3, 2));
  EXPECT_EQ(weak_combinatorics(validate(Arrangement({line(1, 0, 0), line(0, 1, 0), line(0, 0, 1)}, {}))),
            wc_of({3}, 3, 0));
}

TEST(SingularPoints, IrrationalPairOnSecondExample) {
  const auto pts = singular_points(validate(cl2_arr()));
  int pairs = 0;
  for (const auto& p : pts) {
    if (p.field_degree == 2) {
      ++pairs;
      EXPECT_EQ(p.local_count, 2);
      EXPECT_EQ(p.minimal_polynomial, (UniPoly{-2, 0, 1}));
    }
  }
  EXPECT_EQ(pairs, 1);
}

TEST(SingularPoints, TangentLineIsRejected) {
  const Arrangement a = validate(Arrangement({line(0, 1, -1)}, {conic(1, 1, -1, 0, 0, 0)}));
  EXPECT_EQ(kind_of([&] { singular_points(a); }), ErrorKind::NonOrdinarySingularity);
  // Tangent at the point P0 of the line parametrization: x = 0 touches y^2 = xz at (0:0:1).
  const Arrangement b = validate(Arrangement({line(1, 0, 0)}, {conic(0, 1, 0, 0, -1, 0)}));
  EXPECT_EQ(kind_of([&] { singular_points(b); }), ErrorKind::NonOrdinarySingularity);
}

TEST(SingularPoints, TangentConicsAreRejected) {
  // x^2 + y^2 = z^2 and x^2 + 2 y^2 = z^2 touch at (1 : 0 : 1) and (-1 : 0 : 1).
  const Arrangement a = validate(Arrangement({}, {conic(1, 1, -1, 0, 0, 0), conic(1, 2, -1, 0, 0, 0)}));
  EXPECT_EQ(kind_of([&] { singular_points(a); }), ErrorKind::NonOrdinarySingularity);
  // Tangency at a point also on a line.
  const Arrangement b =
      validate(Arrangement({line(0, 1, 0)}, {conic(1, 1, -1, 0, 0, 0), conic(1, 2, -1, 0, 0, 0)}));
  EXPECT_EQ(kind_of([&] { singular_points(b); }), ErrorKind::NonOrdinarySingularity);
}

TEST(SingularPoints, FiveLinesThroughAPoint) {
  std::vector<HForm> lines;
  for (int i = 0; i < 5; ++i) lines.push_back(line(1, i, 0));
  EXPECT_EQ(kind_of([&] { singular_points(validate(Arrangement(lines, {}))); }), ErrorKind::MultiplicityTooHigh);
}

TEST(SingularPoints, ConicOnlyPoints) {
  // Four rational points (+-1 : +-1 : 1)... of x^2 + y^2 = 2z^2 and x^2 - 2y^2 = -z^2.
  const Arrangement rational = validate(Arrangement({}, {conic(1, 1, -2, 0, 0, 0), conic(1, -2, 1, 0, 0, 0)}));
  auto pts = singular_points(rational);
  ASSERT_EQ(pts.size(), 4u);
  for (const auto& p : pts) EXPECT_EQ(p.field_degree, 1);
  // A generic pair meets in four conjugate points.
  const Arrangement quartic = validate(Arrangement({}, {conic(1, 1, -1, 0, 0, 0), conic(1, 0, 0, 0, 0, -1)}));
  pts = singular_points(quartic);
  long total = 0;
  for (const auto& p : pts) total += p.local_count;
  EXPECT_EQ(total, 4);
  EXPECT_EQ(weak_combinatorics(quartic), wc_of({4}, 0, 2));
}

TEST(SingularPoints, ShearBudgetIsEnforced) {
  // Both conics pass through (0 : 0 : 1) so the identity projection fails
  // and a zero budget of random shears is exhausted immediately.
  const Arrangement a = validate(Arrangement({}, {conic(1, 1, 0, 0, -1, 0), conic(1, 2, 0, 0, 0, -1)}));
  SingularPointOptions opts;
  opts.max_shears = 1;
  EXPECT_EQ(kind_of([&] { singular_points(a, opts); }), ErrorKind::ShearExhausted);
  opts.max_shears = 16;
  EXPECT_NO_THROW(singular_points(a, opts));
}

TEST(SingularPoints, WitnessesReevaluate) {
  for (const Arrangement& a : {validate(cl2_arr()), validate(st_arr()), validate(cl3_arr())}) {
    for (const auto& p : singular_points(a)) {
      const ResidueField k(p.minimal_polynomial);
      int vanishing = 0;
      for (int g = 0; g < a.component_count(); ++g) {
        if (k.is_zero(k.evaluate(a.component(g), p.coordinates))) ++vanishing;
      }
      EXPECT_EQ(vanishing, p.multiplicity);
      EXPECT_EQ(static_cast<int>(p.incidence.size()), p.multiplicity);
    }
  }
}

TEST(ConicTrace, Examples) {
  EXPECT_EQ(conic_trace(validate(cl1_arr()), kFirstConic), 4);
  EXPECT_EQ(conic_trace(validate(cl2_arr()), kFirstConic), 6);
  EXPECT_EQ(conic_trace(validate(Arrangement({line(1, 0, 0)}, {conic(1, 1, -1, 0, 0, 0)})), kFirstConic), 2);
  EXPECT_EQ(kind_of([] { conic_trace(validate(cl1_arr()), {ComponentKind::Line, 0}); }),
            ErrorKind::UnknownComponent);
}

TEST(DeleteComponent, Examples) {
  const Arrangement cl3 = validate(cl3_arr());
  const Arrangement lines = delete_component(cl3, kFirstConic);
  EXPECT_EQ(lines.k(), 0);
  EXPECT_EQ(lines.d(), 9);
  EXPECT_EQ(weak_combinatorics(lines), wc_of({6, 10}, 9, 0));
  EXPECT_EQ(delete_component(validate(cl1_arr()), kFirstConic).d(), 6);
  EXPECT_EQ(kind_of([&] { delete_component(cl3, {ComponentKind::Conic, 3}); }), ErrorKind::UnknownComponent);
  const Arrangement two = validate(Arrangement({line(1, 0, 0), line(0, 1, 0)}, {}));
  EXPECT_EQ(kind_of([&] { delete_component(two, {ComponentKind::Line, 0}); }), ErrorKind::TooFewComponents);
}

TEST(DefiningForm, Degrees) {
  EXPECT_EQ(defining_form(validate(cl2_arr())).degree(), 9);
  EXPECT_EQ(defining_form(validate(cl3_arr())).degree(), 11);
  EXPECT_EQ(defining_form(validate(cl3_arr())), cl3_form().normalized());
  const Arrangement single({}, {conic(1, 1, -1, 0, 0, 0)});
  EXPECT_EQ(defining_form(single), conic(1, 1, -1, 0, 0, 0));
}

TEST(ArrangementProperties, CoordinateChangeInvariance) {
  std::mt19937_64 rng(31);
  for (const Arrangement& a : {cl1_arr(), cl2_arr(), cl3_arr()}) {
    const auto expected = weak_combinatorics(validate(a));
    const int r = conic_trace(validate(a), kFirstConic);
    for (int trial = 0; trial < 10; ++trial) {
      const Arrangement moved = validate(transform(a, random_invertible(rng)));
      const auto pts = singular_points(moved);
      EXPECT_EQ(weak_combinatorics(moved, pts), expected);
      EXPECT_EQ(conic_trace(moved, kFirstConic, pts), r);
    }
  }
}

TEST(ArrangementProperties, RandomArrangementsAgreeWithNumericOracle) {
  std::mt19937_64 rng(32);
  NumericOracle oracle;
  for (int trial = 0; trial < 20; ++trial) {
    const int d = trial % 8, k = trial % 3;
    if (d + 2 * k < 3) continue;
    const Arrangement a = random_ordinary_arrangement(rng, d, k);
    const auto pts = singular_points(a);
    const auto wc = weak_combinatorics(a, pts);  // includes the Bezout check
    std::map<int, long> exact;
    for (const auto& [r, n] : wc.counts) if (n) exact[r] = n;
    EXPECT_EQ(oracle.counts(a), exact) << "trial " << trial;
    for (int c = 0; c < a.k(); ++c) {
      EXPECT_LE(conic_trace(a, {ComponentKind::Conic, c}, pts), 2 * (a.d() + 2 * (a.k() - 1)));
    }
  }
}

TEST(ArrangementProperties, GoldenFixturesAgreeWithNumericOracle) {
  NumericOracle oracle(99);
  EXPECT_EQ(oracle.counts(cl3_arr()), (std::map<int, long>{{2, 6}, {3, 4}, {4, 6}}));
  EXPECT_EQ(oracle.counts(st_arr()), (std::map<int, long>{{2, 1}, {4, 3}}));
}
