#include <algorithm>
#include <map>
#include <random>

#include "mcurve/arrangement/arrangement.hpp"
#include "mcurve/error.hpp"
#include "mcurve/poly/factor.hpp"
#include "mcurve/poly/residue_field.hpp"
#include "mcurve/poly/resultant.hpp"

namespace mcurve {

namespace {

using Point = ResidueField::Point;

const UniPoly kRationalModulus{0, 1};

// Scales a projective point so its last nonzero coordinate is 1.
Point normalize_point(const ResidueField& k, Point p) {
  for (int c = 2; c >= 0; --c) {
    if (!k.is_zero(p[c])) return k.scale(k.inverse(p[c]), p);
  }
  throw Error(ErrorKind::InternalInconsistency, "singular point with all coordinates zero");
}

class PointFinder {
 public:
  PointFinder(const Arrangement& arr, const SingularPointOptions& opts) : arr_(arr), opts_(opts), rng_(opts.shear_seed) {}

  std::vector<SingularPoint> run() {
    for (int i = 0; i < arr_.d(); ++i) scan_line(i);
    for (int a = arr_.d(); a < arr_.component_count(); ++a) {
      for (int b = a + 1; b < arr_.component_count(); ++b) scan_conic_pair(a, b);
    }
    std::sort(points_.begin(), points_.end(), [](const SingularPoint& x, const SingularPoint& y) {
      if (x.incidence != y.incidence) return x.incidence < y.incidence;
      return x.minimal_polynomial < y.minimal_polynomial;
    });
    return std::move(points_);
  }

 private:
  std::string name(int g) const { return arr_.id_of(g).to_string(); }

  std::vector<int> incidence_at(const ResidueField& k, const Point& p) const {
    std::vector<int> inc;
    for (int g = 0; g < arr_.component_count(); ++g) {
      if (k.is_zero(k.evaluate(arr_.component(g), p))) inc.push_back(g);
    }
    return inc;
  }

  void record(const ResidueField& k, const Point& p, std::vector<int> incidence, std::pair<int, int> origin) {
    if (incidence.size() >= 5) {
      throw Error(ErrorKind::MultiplicityTooHigh,
                  std::to_string(incidence.size()) + " components pass through one point (" + name(incidence[0]) +
                      ", " + name(incidence[1]) + ", ...)");
    }
    std::vector<Point> grads;
    for (int g : incidence) grads.push_back(k.gradient(arr_.component(g), p));
    for (std::size_t i = 0; i < grads.size(); ++i) {
      for (std::size_t j = i + 1; j < grads.size(); ++j) {
        if (k.is_zero_point(k.cross(grads[i], grads[j]))) {
          throw Error(ErrorKind::NonOrdinarySingularity,
                      name(incidence[i]) + " and " + name(incidence[j]) + " are tangent at a common point");
        }
      }
    }
    SingularPoint sp;
    sp.multiplicity = static_cast<int>(incidence.size());
    sp.incidence = std::move(incidence);
    sp.field_degree = k.degree();
    sp.local_count = k.degree();
    // Rational points all share the modulus "a"; their coordinates are
    // already constants.
    sp.minimal_polynomial = k.degree() == 1 ? kRationalModulus : k.modulus();
    sp.coordinates = normalize_point(k, p);
    sp.origin = origin;
    points_.push_back(std::move(sp));
  }

  // Points on line i not lying on any earlier line.
  void scan_line(int i) {
    const HForm& line = arr_.component(i);
    const auto param = parametrize_line(line);
    std::map<UniPoly, std::vector<int>> by_factor;
    std::vector<int> at_infinity;
    for (int j = 0; j < arr_.component_count(); ++j) {
      if (j == i) continue;
      const auto res = restrict_to_line(arr_.component(j), line);
      if (res.identically_zero()) {
        throw Error(ErrorKind::InternalInconsistency, name(j) + " contains " + name(i));
      }
      if (res.root_at_infinity >= 2) {
        throw Error(ErrorKind::NonOrdinarySingularity, name(i) + " is tangent to " + name(j));
      }
      if (res.root_at_infinity == 1) at_infinity.push_back(j);
      if (res.poly.degree() < 1) continue;
      for (const auto& f : factor_over_q(res.poly)) {
        if (f.multiplicity >= 2) {
          throw Error(ErrorKind::NonOrdinarySingularity, name(i) + " is tangent to " + name(j));
        }
        by_factor[f.poly].push_back(j);
      }
    }
    auto emit = [&](const ResidueField& k, const Point& p, const std::vector<int>& others) {
      std::vector<int> inc = others;
      inc.push_back(i);
      std::sort(inc.begin(), inc.end());
      if (inc.front() != i) return;  // already found from an earlier line
      record(k, p, inc, {i, others.front()});
    };
    const ResidueField q(kRationalModulus);
    if (!at_infinity.empty()) {
      emit(q, {q.from_rational(param.p0[0]), q.from_rational(param.p0[1]), q.from_rational(param.p0[2])},
           at_infinity);
    }
    for (const auto& [factor, others] : by_factor) {
      if (factor.degree() == 1) {
        const Rational s = -factor.coeff(0);
        Point p;
        for (int c = 0; c < 3; ++c) p[c] = q.from_rational(s * param.p0[c] + param.p1[c]);
        emit(q, p, others);
      } else {
        const ResidueField k(factor);
        Point p;
        for (int c = 0; c < 3; ++c) p[c] = k.reduce(UniPoly{param.p1[c], param.p0[c]});
        emit(k, p, others);
      }
    }
  }

  LinearMap random_shear() {
    std::uniform_int_distribution<int> coeff(-opts_.shear_range, opts_.shear_range);
    while (true) {
      LinearMap m;
      for (auto& row : m) {
        for (auto& v : row) v = coeff(rng_);
      }
      const Rational det = m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
                           m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
                           m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
      if (det != 0) return m;
    }
  }

  // Coefficients in z of q(a, 1, z) over the residue field.
  static FieldPoly restrict_to_fiber(const ResidueField& k, const HForm& q) {
    FieldPoly out(static_cast<std::size_t>(q.degree()) + 1, k.from_rational(0));
    const auto a = k.generator();
    for (const auto& [e, c] : q.terms()) {
      UniPoly term = k.from_rational(c);
      for (int i = 0; i < e.x; ++i) term = k.mul(term, a);
      out[e.z] = k.add(out[e.z], term);
    }
    trim(out);
    return out;
  }

  enum class PairOutcome { Done, Reshear };

  // Points on conics a and b that lie on no line and have (a, b) as their
  // two smallest conics.
  void scan_conic_pair(int a, int b) {
    for (int attempt = 0; attempt < opts_.max_shears; ++attempt) {
      LinearMap t{};
      if (attempt == 0) {
        for (int c = 0; c < 3; ++c) t[c][c] = 1;
      } else {
        t = random_shear();
      }
      if (try_conic_pair(a, b, t) == PairOutcome::Done) return;
    }
    throw Error(ErrorKind::ShearExhausted, "could not separate the intersection points of " + name(a) + " and " +
                                               name(b) + " after " + std::to_string(opts_.max_shears) + " shears");
  }

  PairOutcome try_conic_pair(int a, int b, const LinearMap& t) {
    const HForm qa = substitute_linear(arr_.component(a), t);
    const HForm qb = substitute_linear(arr_.component(b), t);
    const Exponent zz{0, 0, 2};
    if (qa.coefficient(zz) == 0 || qb.coefficient(zz) == 0) return PairOutcome::Reshear;
    const HForm res = resultant_eliminating(qa, qb, Var::Z);
    if (res.is_zero()) throw Error(ErrorKind::InternalInconsistency, name(a) + " and " + name(b) + " share a component");
    const UniPoly r = dehomogenize_xy(res);
    if (r.degree() != 4) return PairOutcome::Reshear;

    struct Found {
      ResidueField field;
      Point point;
      std::vector<int> incidence;
    };
    std::vector<Found> found;
    for (const auto& f : factor_over_q(r)) {
      const ResidueField k(f.poly);
      const FieldPoly g = field_gcd(k, restrict_to_fiber(k, qa), restrict_to_fiber(k, qb));
      if (g.size() == 3) return PairOutcome::Reshear;  // two points in one fiber
      if (g.size() != 2) {
        throw Error(ErrorKind::InternalInconsistency, "resultant root without a common point of " + name(a) + " and " +
                                                          name(b));
      }
      if (f.multiplicity >= 2) {
        throw Error(ErrorKind::NonOrdinarySingularity, name(a) + " and " + name(b) + " are tangent at a common point");
      }
      const Point sheared{k.generator(), k.from_rational(1), k.sub(k.from_rational(0), g[0])};
      Point p;
      for (int c = 0; c < 3; ++c) {
        p[c] = k.from_rational(0);
        for (int j = 0; j < 3; ++j) p[c] = k.add(p[c], k.mul(k.from_rational(t[c][j]), sheared[j]));
      }
      auto inc = incidence_at(k, p);
      if (!std::binary_search(inc.begin(), inc.end(), a) || !std::binary_search(inc.begin(), inc.end(), b)) {
        throw Error(ErrorKind::InternalInconsistency, "recovered point is not on " + name(a) + " and " + name(b));
      }
      if (inc.front() < arr_.d()) continue;  // on a line: found by the line scan
      if (inc[0] != a || inc[1] != b) continue;  // found from an earlier conic pair
      found.push_back({k, p, std::move(inc)});
    }
    for (auto& f : found) record(f.field, f.point, std::move(f.incidence), {a, b});
    return PairOutcome::Done;
  }

  const Arrangement& arr_;
  SingularPointOptions opts_;
  std::mt19937_64 rng_;
  std::vector<SingularPoint> points_;
};

}  // namespace

std::vector<SingularPoint> singular_points(const Arrangement& arr, const SingularPointOptions& opts) {
  if (opts.max_shears < 1) throw Error(ErrorKind::InvalidArgument, "max_shears must be positive");
  return PointFinder(arr, opts).run();
}

}  // namespace mcurve
