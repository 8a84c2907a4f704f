#include "mcurve/mtheory/mtheory.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

#include "mcurve/error.hpp"
#include "mcurve/poly/factor.hpp"

namespace mcurve {

namespace {

ConstraintVerdict equality(long lhs, long rhs, std::string rule, std::string detail = {}) {
  return {lhs == rhs, lhs, rhs, std::move(rule), std::move(detail), {}};
}

void require_multiplicity_at_most_four(const WeakCombinatorics& wc) {
  for (const auto& [r, n] : wc.counts) {
    if (r >= 5 && n > 0) {
      throw Error(ErrorKind::UnsupportedMultiplicity,
                  "n_" + std::to_string(r) + " = " + std::to_string(n) + ": only multiplicities up to 4 are covered");
    }
  }
}

}  // namespace

std::string PoincarePolynomial::to_string() const {
  std::string s;
  auto append = [&](long c, const std::string& text) {
    if (c == 0) return;
    if (s.empty()) {
      s = (c < 0 ? "-" : "") + text;
    } else {
      s += (c < 0 ? " - " : " + ") + text;
    }
  };
  append(c2, (std::labs(c2) == 1 ? std::string() : std::to_string(std::labs(c2))) + "t^2");
  append(c1, (std::labs(c1) == 1 ? std::string() : std::to_string(std::labs(c1))) + "t");
  append(c0, std::to_string(std::labs(c0)));
  return s.empty() ? "0" : s;
}

long tau_of(const WeakCombinatorics& wc) { return tau_from_counts(wc); }

ConstraintVerdict bezout_check(const WeakCombinatorics& wc) {
  return equality(bezout_pair_count(wc.d, wc.k), bezout_point_count(wc), "bezout",
                  "4 C(k,2) + 2kd + C(d,2) = sum C(r,2) n_r");
}

ConstraintVerdict char_check(const WeakCombinatorics& wc) {
  if (wc.k < 1) throw Error(ErrorKind::OutOfRange, "the constraint needs at least one conic");
  if (wc.d < 3) throw Error(ErrorKind::OutOfRange, "the constraint needs at least three lines");
  require_multiplicity_at_most_four(wc);
  const long lhs = wc.n(2) + 2 * wc.n(3) + 3 * wc.n(4);
  const long l = wc.d / 2, k = wc.k;
  if (wc.d % 2 == 0) {
    return equality(lhs, (k + l) * (k + l) + l - k - 3, "char-even-lines",
                    "n2 + 2 n3 + 3 n4 = (k+l)^2 + l - k - 3, l = " + std::to_string(l));
  }
  return equality(lhs, (k + l) * (k + l) + 2 * l - 1, "char-odd-lines",
                  "n2 + 2 n3 + 3 n4 = (k+l)^2 + 2l - 1, l = " + std::to_string(l));
}

std::pair<ConstraintVerdict, ConstraintVerdict> one_conic_check(const WeakCombinatorics& wc) {
  if (wc.k != 1) throw Error(ErrorKind::OutOfRange, "the one-conic system needs exactly one conic");
  if (wc.d < 3) throw Error(ErrorKind::OutOfRange, "the one-conic system needs at least three lines");
  require_multiplicity_at_most_four(wc);
  const long l = wc.d / 2;
  const long doubles_triples = wc.n(2) + wc.n(3);
  const long triples_quadruples = wc.n(3) + 3 * wc.n(4);
  const std::string suffix = ", l = " + std::to_string(l);
  if (wc.d % 2 == 0) {
    return {equality(doubles_triples, 3 * l - 6, "one-conic-even-lines-n2+n3", "n2 + n3 = 3l - 6" + suffix),
            equality(triples_quadruples, l * l + 3, "one-conic-even-lines-n3+3n4", "n3 + 3 n4 = l^2 + 3" + suffix)};
  }
  return {equality(doubles_triples, 3 * l - 2, "one-conic-odd-lines-n2+n3", "n2 + n3 = 3l - 2" + suffix),
          equality(triples_quadruples, l * l + l + 2, "one-conic-odd-lines-n3+3n4",
                   "n3 + 3 n4 = l^2 + l + 2" + suffix)};
}

std::vector<std::tuple<long, long, long>> enumerate_one_conic(int d) {
  if (d < 3) throw Error(ErrorKind::OutOfRange, "enumeration needs at least three lines");
  const long box = static_cast<long>(d) * d;
  std::vector<std::tuple<long, long, long>> out;
  WeakCombinatorics wc;
  wc.d = d;
  wc.k = 1;
  // The first equation fixes n2 once n3 is chosen, so only (n3, n4) range
  // over the box; every solution inside the box is visited.
  const long l = d / 2;
  const long sum23 = d % 2 == 0 ? 3 * l - 6 : 3 * l - 2;
  for (long n3 = 0; n3 <= box; ++n3) {
    const long n2 = sum23 - n3;
    if (n2 < 0 || n2 > box) continue;
    for (long n4 = 0; n4 <= box; ++n4) {
      wc.counts = {{2, n2}, {3, n3}, {4, n4}};
      const auto [a, b] = one_conic_check(wc);
      if (a.satisfied && b.satisfied) out.emplace_back(n2, n3, n4);
    }
  }
  std::sort(out.begin(), out.end(), std::greater<>());
  return out;
}

bool addition_never_free_advisory(int d, int r) { return r == 2 * d; }

int mdr_lower_bound_lines(int d) { return (d + 1) / 2 - 2; }

bool deletion_splitting_refuted(int d, int r) {
  const auto split = splits_rationally(poincare_of_deletion(d, r));
  return split && split->first < mdr_lower_bound_lines(d);
}

ConstraintVerdict mvp_allowed(int d, int r) {
  if (d < 3) throw Error(ErrorKind::OutOfRange, "the conic-trace rule needs at least three lines");
  if (r < 1) throw Error(ErrorKind::OutOfRange, "conic trace must be positive");
  const long l = d / 2;
  const long m = r / 2;
  const bool even_d = d % 2 == 0, even_r = r % 2 == 0;
  ConstraintVerdict v;
  v.lhs = m;
  v.rule = std::string("conic-trace-") + (even_d ? "even" : "odd") + "-lines-" + (even_r ? "even" : "odd") + "-trace";
  const std::string ls = " (l = " + std::to_string(l) + ", m = " + std::to_string(m) + ")";
  if (even_r) {
    const long bound = even_d ? l - 1 : l;
    v.rhs = bound;
    v.satisfied = m == l + 2 || m <= bound;
    v.detail = "m = l+2 or m <= " + std::string(even_d ? "l-1" : "l") + ls;
  } else {
    const long bound = even_d ? l - 2 : l - 1;
    v.rhs = bound;
    v.satisfied = m <= bound;
    v.detail = "m <= " + std::string(even_d ? "l-2" : "l-1") + ls;
  }
  if (r > 2 * d) {
    v.satisfied = false;
    v.rule = "conic-trace-bezout";
    v.detail = "a conic meets " + std::to_string(d) + " lines in at most " + std::to_string(2 * d) + " points";
    return v;
  }
  if (addition_never_free_advisory(d, r)) {
    v.advisories.push_back("r = 2d: adding the conic to the lines never yields a free arrangement");
  }
  if (deletion_splitting_refuted(d, r)) {
    const auto split = *splits_rationally(poincare_of_deletion(d, r));
    std::string note = "deletion polynomial splits with exponents (" + std::to_string(split.first) + ", " +
                       std::to_string(split.second) + ") below the mdr lower bound " +
                       std::to_string(mdr_lower_bound_lines(d)) + " for lines, so the deletion cannot be free";
    if (mdr_lower_bound_is_advisory(d)) note += " (bound for odd degree is advisory)";
    v.advisories.push_back(std::move(note));
  }
  return v;
}

PoincarePolynomial poincare_cl(const WeakCombinatorics& wc) {
  long weighted = 0;
  for (const auto& [r, n] : wc.counts) weighted += static_cast<long>(r - 1) * n;
  return {1, 2L * wc.k + wc.d - 1, weighted - wc.d + 1};
}

PoincarePolynomial poincare_curve(int e, long tau) {
  const long e1 = e - 1;
  return {1, e1, e1 * e1 - tau};
}

std::optional<std::pair<long, long>> splits_rationally(const PoincarePolynomial& p) {
  if (p.c0 != 1) return std::nullopt;
  const Integer disc = Integer(p.c1) * p.c1 - 4 * Integer(p.c2);
  if (disc < 0) return std::nullopt;
  Integer root;
  if (!exact_sqrt(disc, root)) return std::nullopt;
  const Integer twice_d1 = p.c1 - root;
  if (twice_d1 % 2 != 0) return std::nullopt;
  const long d1 = Integer(twice_d1 / 2).get_si();
  return std::make_pair(d1, p.c1 - d1);
}

PoincarePolynomial poincare_of_deletion(int d, int r) {
  if (d < 3) throw Error(ErrorKind::OutOfRange, "deletion formula needs at least three lines");
  if (r < 1) throw Error(ErrorKind::OutOfRange, "conic trace must be positive");
  const long l = d / 2;
  if (d % 2 == 0) return {1, 2 * l - 1, l * l + l - 2 - r};
  return {1, 2 * l, l * l + 2 * l - r};
}

ConstraintVerdict deletion_identity_check(const PoincarePolynomial& p_cl, const PoincarePolynomial& p_l, int r) {
  const std::string detail =
      p_cl.to_string() + " against (" + p_l.to_string() + ") + 2t + " + std::to_string(r) + "t^2";
  if (p_cl.c0 != p_l.c0) return equality(p_cl.c0, p_l.c0, "deletion-identity", detail);
  if (p_cl.c1 != p_l.c1 + 2) return equality(p_cl.c1, p_l.c1 + 2, "deletion-identity", detail);
  return equality(p_cl.c2, p_l.c2 + r, "deletion-identity", detail);
}

RegularityValues m_reg_values(int total_degree) {
  if (total_degree < 5) throw Error(ErrorKind::DegreeTooSmall, "regularity values need total degree at least 5");
  const int m = total_degree / 2;
  return {total_degree % 2 == 0 ? 3 * m - 2 : 3 * m - 1, m + 1};
}

}  // namespace mcurve
