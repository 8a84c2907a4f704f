#pragma once

#include <optional>
#include <set>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "mcurve/combinatorics.hpp"

namespace mcurve {

/// 1 + c1 t + c2 t^2 with integer coefficients.
struct PoincarePolynomial {
  long c0 = 1;
  long c1 = 0;
  long c2 = 0;

  /// e.g. "6t^2 + 5t + 1"
  std::string to_string() const;
  friend bool operator==(const PoincarePolynomial&, const PoincarePolynomial&) = default;
};

/// Outcome of one combinatorial constraint. For equalities `satisfied` is
/// lhs == rhs; for the conic-trace rule lhs is m and rhs the bound it is
/// compared against, with the admissible set spelled out in `detail`.
struct ConstraintVerdict {
  bool satisfied = false;
  long lhs = 0;
  long rhs = 0;
  std::string rule;
  std::string detail;
  std::vector<std::string> advisories;
};

/// Sum of (r-1)^2 n_r.
long tau_of(const WeakCombinatorics& wc);

/// 4 C(k,2) + 2kd + C(d,2) against the sum of C(r,2) n_r.
ConstraintVerdict bezout_check(const WeakCombinatorics& wc);

/// Necessary condition on n2 + 2 n3 + 3 n4 for an M-arrangement with
/// k >= 1 conics and d >= 3 lines:
///   d = 2l:   (k+l)^2 + l - k - 3
///   d = 2l+1: (k+l)^2 + 2l - 1
/// Throws UnsupportedMultiplicity for points of multiplicity >= 5 and
/// OutOfRange when k = 0 or d < 3.
ConstraintVerdict char_check(const WeakCombinatorics& wc);

/// The two equations for one conic: (n2 + n3, n3 + 3 n4) must equal
/// (3l - 6, l^2 + 3) for d = 2l and (3l - 2, l^2 + l + 2) for d = 2l+1.
/// Throws OutOfRange unless k = 1 and d >= 3.
std::pair<ConstraintVerdict, ConstraintVerdict> one_conic_check(const WeakCombinatorics& wc);

/// All (n2, n3, n4) >= 0 passing one_conic_check for d lines and one
/// conic, searched over the box [0, d^2]^3. Sorted descending in n2.
std::vector<std::tuple<long, long, long>> enumerate_one_conic(int d);

/// Whether a conic trace r = |C ∩ rest| is admissible for an M-arrangement
/// of d lines and one conic. With r = 2m or 2m+1:
///   d = 2l,   r even: m = l+2 or m <= l-1;  r odd: m <= l-2
///   d = 2l+1, r even: m = l+2 or m <= l;    r odd: m <= l-1
/// r > 2d is impossible by Bezout. Advisories flag r = 2d (never free) and
/// a deletion polynomial whose splitting contradicts the mdr lower bound.
ConstraintVerdict mvp_allowed(int d, int r);

/// True iff r = 2d: adding a conic meeting d lines transversally in 2d
/// points never gives a free arrangement.
bool addition_never_free_advisory(int d, int r);

/// 1 + (2k+d-1) t + (sum (r-1) n_r - d + 1) t^2.
PoincarePolynomial poincare_cl(const WeakCombinatorics& wc);

/// 1 + (e-1) t + ((e-1)^2 - tau) t^2 for a reduced curve of degree e.
PoincarePolynomial poincare_curve(int e, long tau);

/// (d1, d2) with d1 <= d2, d1 + d2 = c1, d1 d2 = c2, if integral.
std::optional<std::pair<long, long>> splits_rationally(const PoincarePolynomial& p);

/// Poincare polynomial of the lines left after deleting the conic from a
/// one-conic M-arrangement with trace r:
///   d = 2l:   (l^2 + l - 2 - r) t^2 + (2l - 1) t + 1
///   d = 2l+1: (l^2 + 2l - r) t^2 + 2l t + 1
PoincarePolynomial poincare_of_deletion(int d, int r);

/// P(CL) = P(L) + 2t + r t^2, coefficientwise.
ConstraintVerdict deletion_identity_check(const PoincarePolynomial& p_cl, const PoincarePolynomial& p_l, int r);

/// ceil(d/2) - 2, a lower bound for mdr of d lines with ordinary points of
/// multiplicity <= 4. Established for even d; advisory for odd d.
int mdr_lower_bound_lines(int d);
inline bool mdr_lower_bound_is_advisory(int d) { return d % 2 != 0; }

/// Whether the deletion polynomial for (d, r) splits as (1+d1 t)(1+d2 t)
/// with d1 below the mdr lower bound, which rules out a free deletion.
bool deletion_splitting_refuted(int d, int r);

struct RegularityValues {
  int reg_M = 0;
  int reg_AR = 0;
};
/// Regularity of an M-curve of total degree D: reg_M = 3m-2 (D = 2m) or
/// 3m-1 (D = 2m+1), reg_AR = m+1. Throws DegreeTooSmall for D < 5.
RegularityValues m_reg_values(int total_degree);

}  // namespace mcurve
