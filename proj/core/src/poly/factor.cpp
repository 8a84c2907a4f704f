#include "mcurve/poly/factor.hpp"

#include <algorithm>

#include "mcurve/error.hpp"

namespace mcurve {

namespace {

// Integer coefficient vector of a primitive polynomial.
std::vector<Integer> integer_coeffs(const UniPoly& p) {
  UniPoly q = p.primitive();
  std::vector<Integer> out;
  for (const auto& c : q.coeffs()) out.push_back(c.get_num());
  return out;
}

// g(y) = a_n^{n-1} p(y / a_n): monic with integer coefficients, and
// y is a root of g iff y / a_n is a root of p.
std::vector<Integer> monic_transform(const std::vector<Integer>& a) {
  const int n = static_cast<int>(a.size()) - 1;
  const Integer& lead = a[n];
  std::vector<Integer> g(a.size());
  Integer scale = 1;  // lead^(n-1-i) for i from n-1 down to 0
  g[n] = 1;
  for (int i = n - 1; i >= 0; --i) {
    g[i] = a[i] * scale;
    scale *= lead;
  }
  return g;
}

int sign_changes(const std::vector<UniPoly>& chain, const Rational& x) {
  int changes = 0;
  int last = 0;
  for (const auto& p : chain) {
    Rational v = p.evaluate(x);
    int s = sgn(v);
    if (s == 0) continue;
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  return changes;
}

UniPoly to_uni(const std::vector<Integer>& c) {
  std::vector<Rational> v;
  for (const auto& x : c) v.emplace_back(x);
  return UniPoly(std::move(v));
}

// Integer roots of a squarefree monic integer polynomial.
std::vector<Integer> integer_roots_squarefree(const std::vector<Integer>& g) {
  UniPoly p = to_uni(g);
  std::vector<Integer> roots;
  if (p.degree() < 1) return roots;
  std::vector<UniPoly> chain{p, p.derivative()};
  while (chain.back().degree() > 0) {
    UniPoly r = chain[chain.size() - 2] % chain.back();
    if (r.is_zero()) break;
    chain.push_back(-r);
  }
  // Cauchy bound: every root has |y| < 1 + max |g_i|.
  Integer bound = 0;
  for (const auto& c : g) bound = std::max(bound, Integer(abs(c)));
  bound += 1;
  // Roots in the half-open interval (lo, hi]; recurse until width 1.
  struct Interval {
    Integer lo, hi;
    int vlo, vhi;
  };
  std::vector<Interval> stack;
  const int vlo = sign_changes(chain, Rational(-bound));
  const int vhi = sign_changes(chain, Rational(bound));
  stack.push_back({-bound, bound, vlo, vhi});
  while (!stack.empty()) {
    Interval iv = stack.back();
    stack.pop_back();
    if (iv.vlo - iv.vhi <= 0) continue;
    if (iv.hi - iv.lo == 1) {
      if (p.evaluate(Rational(iv.hi)) == 0) roots.push_back(iv.hi);
      continue;
    }
    Integer mid = iv.lo + (iv.hi - iv.lo) / 2;
    const int vmid = sign_changes(chain, Rational(mid));
    stack.push_back({iv.lo, mid, iv.vlo, vmid});
    stack.push_back({mid, iv.hi, vmid, iv.vhi});
  }
  std::sort(roots.begin(), roots.end());
  return roots;
}

std::vector<Rational> rational_roots_squarefree(const UniPoly& p) {
  std::vector<Integer> a = integer_coeffs(p);
  std::vector<Rational> roots;
  if (a.size() < 2) return roots;
  const Integer lead = a.back();
  for (const auto& y : integer_roots_squarefree(monic_transform(a))) roots.push_back(make_rational(y, lead));
  std::sort(roots.begin(), roots.end());
  return roots;
}

// Splits a monic squarefree quartic without rational roots into two monic
// quadratics over Q if possible. Works on the monic integer transform
// y^4 + a y^3 + b y^2 + c y + d, whose quadratic factors (by Gauss) are
// integral; q + s is then an integer root of the resolvent cubic.
bool split_quartic(const UniPoly& quartic, UniPoly& left, UniPoly& right) {
  std::vector<Integer> coeffs = integer_coeffs(quartic);
  const Integer lead = coeffs.back();
  std::vector<Integer> g = monic_transform(coeffs);
  const Integer& d = g[0];
  const Integer& c = g[1];
  const Integer& b = g[2];
  const Integer& a = g[3];
  std::vector<Integer> resolvent{-(a * a * d - 4 * b * d + c * c), a * c - 4 * d, -b, 1};
  UniPoly res = to_uni(resolvent);
  // Squarefree part keeps Sturm isolation valid.
  UniPoly sqf = UniPoly::constant(1);
  for (const auto& [f, m] : squarefree_decomposition(res)) sqf = sqf * f;
  std::vector<Rational> us = rational_roots_squarefree(sqf);
  for (const auto& ur : us) {
    if (!is_integer(ur)) continue;
    const Integer u = ur.get_num();
    Integer disc = u * u - 4 * d;
    Integer root;
    if (disc < 0 || !exact_sqrt(disc, root)) continue;
    if ((u + root) % 2 != 0) continue;
    const Integer q = (u + root) / 2;
    const Integer s = (u - root) / 2;
    std::vector<std::pair<Integer, Integer>> candidates;  // (p, r)
    if (q != s) {
      Integer num = c - a * q;
      Integer den = s - q;
      if (num % den != 0) continue;
      Integer pp = num / den;
      candidates.emplace_back(pp, a - pp);
    } else {
      Integer disc2 = a * a - 4 * (b - 2 * q);
      Integer r2;
      if (disc2 < 0 || !exact_sqrt(disc2, r2)) continue;
      if ((a + r2) % 2 != 0) continue;
      candidates.emplace_back((a + r2) / 2, (a - r2) / 2);
    }
    for (const auto& [pp, rr] : candidates) {
      UniPoly f1 = to_uni({q, pp, 1});
      UniPoly f2 = to_uni({s, rr, 1});
      if (!(f1 * f2 == to_uni(g))) continue;
      // Undo y = lead * x: y^2 + p y + q -> x^2 + (p/lead) x + q/lead^2.
      Rational L(lead);
      left = UniPoly{Rational(q) / (L * L), Rational(pp) / L, 1};
      right = UniPoly{Rational(s) / (L * L), Rational(rr) / L, 1};
      return true;
    }
  }
  return false;
}

void factor_squarefree(const UniPoly& f, int multiplicity, std::vector<PolyFactor>& out) {
  UniPoly rest = f.monic();
  for (const auto& r : rational_roots_squarefree(rest)) {
    UniPoly lin{-r, 1};
    out.push_back({lin, multiplicity});
    rest = exact_div(rest, lin).monic();
  }
  if (rest.degree() < 1) return;
  if (rest.degree() <= 3) {
    out.push_back({rest, multiplicity});
    return;
  }
  if (rest.degree() == 4) {
    UniPoly l, r;
    if (split_quartic(rest, l, r)) {
      out.push_back({l, multiplicity});
      out.push_back({r, multiplicity});
    } else {
      out.push_back({rest, multiplicity});
    }
    return;
  }
  throw Error(ErrorKind::InvalidArgument, "factorisation supports squarefree parts of degree <= 4 only");
}

}  // namespace

bool exact_sqrt(const Integer& n, Integer& root) {
  if (n < 0) return false;
  root = sqrt(n);
  return root * root == n;
}

std::vector<Rational> rational_roots(const UniPoly& p) {
  if (p.is_zero()) throw Error(ErrorKind::InvalidArgument, "rational roots of the zero polynomial");
  std::vector<Rational> roots;
  for (const auto& [f, m] : squarefree_decomposition(p)) {
    auto r = rational_roots_squarefree(f);
    roots.insert(roots.end(), r.begin(), r.end());
  }
  std::sort(roots.begin(), roots.end());
  return roots;
}

std::vector<PolyFactor> factor_over_q(const UniPoly& p) {
  if (p.is_zero()) throw Error(ErrorKind::InvalidArgument, "factorisation of the zero polynomial");
  std::vector<PolyFactor> out;
  for (const auto& [f, m] : squarefree_decomposition(p)) factor_squarefree(f, m, out);
  std::sort(out.begin(), out.end(), [](const PolyFactor& a, const PolyFactor& b) { return a.poly < b.poly; });
  return out;
}

bool is_irreducible_over_q(const UniPoly& p) {
  if (p.degree() < 1) return false;
  auto f = factor_over_q(p);
  return f.size() == 1 && f[0].multiplicity == 1;
}

}  // namespace mcurve
