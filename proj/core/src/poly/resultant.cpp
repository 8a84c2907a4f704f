#include "mcurve/poly/resultant.hpp"

#include <utility>
#include <vector>

#include "mcurve/error.hpp"

namespace mcurve {

namespace {

// Index pair of the two variables that survive elimination of `var`.
std::pair<int, int> remaining(Var var) {
  switch (var) {
    case Var::X: return {1, 2};
    case Var::Y: return {0, 2};
    case Var::Z: return {0, 1};
  }
  return {0, 1};
}

int component(const Exponent& e, int i) { return i == 0 ? e.x : (i == 1 ? e.y : e.z); }

// Coefficients of f as a polynomial in var, each dehomogenised to a
// univariate polynomial in the first remaining variable (second set to 1).
std::vector<UniPoly> coefficients_in(const HForm& f, Var var) {
  const auto [u, w] = remaining(var);
  (void)w;
  const int n = f.degree_in(var);
  std::vector<std::vector<Rational>> raw(static_cast<std::size_t>(n) + 1);
  for (const auto& [e, c] : f.terms()) {
    auto& slot = raw[e[var]];
    const int pu = component(e, u);
    if (static_cast<int>(slot.size()) <= pu) slot.resize(pu + 1);
    slot[pu] += c;
  }
  std::vector<UniPoly> out;
  for (auto& v : raw) out.emplace_back(std::move(v));
  return out;
}

// Determinant over Q[t] by fraction-free (Bareiss) elimination.
UniPoly bareiss_det(std::vector<std::vector<UniPoly>> m) {
  const std::size_t n = m.size();
  UniPoly prev = UniPoly::constant(1);
  bool negate = false;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t piv = k;
    while (piv < n && m[piv][k].is_zero()) ++piv;
    if (piv == n) return {};
    if (piv != k) {
      std::swap(m[piv], m[k]);
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        m[i][j] = exact_div(m[k][k] * m[i][j] - m[i][k] * m[k][j], prev);
      }
      m[i][k] = UniPoly{};
    }
    prev = m[k][k];
  }
  return negate ? -m[n - 1][n - 1] : m[n - 1][n - 1];
}

}  // namespace

HForm resultant_eliminating(const HForm& f, const HForm& g, Var var) {
  const int m = f.degree_in(var);
  const int n = g.degree_in(var);
  if (m < 1 || n < 1) throw Error(ErrorKind::InvalidArgument, "resultant: a form does not involve the eliminated variable");
  auto fc = coefficients_in(f, var);
  auto gc = coefficients_in(g, var);
  const int size = m + n;
  std::vector<std::vector<UniPoly>> syl(size, std::vector<UniPoly>(size));
  for (int r = 0; r < n; ++r) {
    for (int i = 0; i <= m; ++i) syl[r][r + (m - i)] = fc[i];
  }
  for (int r = 0; r < m; ++r) {
    for (int i = 0; i <= n; ++i) syl[n + r][r + (n - i)] = gc[i];
  }
  UniPoly det = bareiss_det(std::move(syl));
  const int out_degree = f.degree() * g.degree();
  HForm out(out_degree);
  const auto [u, w] = remaining(var);
  for (int i = 0; i <= det.degree(); ++i) {
    if (det.coeffs()[i] == 0) continue;
    if (i > out_degree) throw Error(ErrorKind::InternalInconsistency, "resultant degree overflow");
    int exps[3] = {0, 0, 0};
    exps[u] = i;
    exps[w] = out_degree - i;
    out.add_term({exps[0], exps[1], exps[2]}, det.coeffs()[i]);
  }
  return out;
}

UniPoly dehomogenize_xy(const HForm& binary) {
  std::vector<Rational> v(static_cast<std::size_t>(binary.degree()) + 1);
  for (const auto& [e, c] : binary.terms()) {
    if (e.z != 0) throw Error(ErrorKind::InvalidArgument, "dehomogenize_xy: form involves z");
    v[e.x] += c;
  }
  return UniPoly(std::move(v));
}

LineParametrization parametrize_line(const HForm& line) {
  if (line.degree() != 1 || line.is_zero()) throw Error(ErrorKind::InvalidComponent, "not a nonzero linear form");
  std::array<Rational, 3> l{line.coefficient({1, 0, 0}), line.coefficient({0, 1, 0}), line.coefficient({0, 0, 1})};
  int j = 2;
  while (l[j] == 0) --j;
  int others[2];
  int k = 0;
  for (int i = 0; i < 3; ++i) {
    if (i != j) others[k++] = i;
  }
  LineParametrization p;
  p.p0 = {0, 0, 0};
  p.p1 = {0, 0, 0};
  p.p0[others[0]] = l[j];
  p.p0[j] = -l[others[0]];
  p.p1[others[1]] = l[j];
  p.p1[j] = -l[others[1]];
  return p;
}

Restriction restrict_to_line(const HForm& f, const HForm& line) {
  if (line.degree() != 1 || line.is_zero()) throw Error(ErrorKind::InvalidComponent, "restriction target is not a nonzero line");
  const LineParametrization par = parametrize_line(line);
  // x_i = s p0_i + t p1_i; with t = 1 each coordinate is a linear polynomial in s.
  std::array<UniPoly, 3> coord;
  for (int i = 0; i < 3; ++i) coord[i] = UniPoly{par.p1[i], par.p0[i]};
  const int n = f.degree();
  std::array<std::vector<UniPoly>, 3> powers;
  for (int i = 0; i < 3; ++i) {
    powers[i].push_back(UniPoly::constant(1));
    for (int k = 1; k <= n; ++k) powers[i].push_back(powers[i].back() * coord[i]);
  }
  UniPoly sum;
  for (const auto& [e, c] : f.terms()) sum = sum + c * (powers[0][e.x] * powers[1][e.y] * powers[2][e.z]);
  Restriction r;
  r.poly = sum;
  r.root_at_infinity = sum.is_zero() ? 0 : n - sum.degree();
  return r;
}

}  // namespace mcurve
