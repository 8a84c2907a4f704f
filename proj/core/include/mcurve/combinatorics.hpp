#pragma once

#include <map>
#include <string>

namespace mcurve {

/// C(d, k; n_2, ..., n_t): d lines, k conics and n_r points of multiplicity r.
struct WeakCombinatorics {
  int d = 0;
  int k = 0;
  std::map<int, long> counts;

  long n(int r) const {
    auto it = counts.find(r);
    return it == counts.end() ? 0 : it->second;
  }
  /// Highest r with n_r > 0, or 1 when there are no singular points.
  int t() const;
  int total_degree() const { return d + 2 * k; }

  /// Checks the type invariants: d, k >= 0, r >= 2, n_r >= 0, d + 2k >= 3.
  /// Throws NegativeCount or InvalidArgument.
  void check() const;

  /// "d,k;n2,n3,..." listing counts from r = 2 up to t.
  std::string to_string() const;

  friend bool operator==(const WeakCombinatorics& a, const WeakCombinatorics& b) {
    return a.d == b.d && a.k == b.k && a.trimmed() == b.trimmed();
  }

 private:
  std::map<int, long> trimmed() const;
};

/// Pairwise intersection count 4 C(k,2) + 2kd + C(d,2).
long bezout_pair_count(int d, int k);
/// Sum over r of C(r,2) n_r.
long bezout_point_count(const WeakCombinatorics& wc);
/// Sum over r of (r-1)^2 n_r, the total Tjurina number of an arrangement
/// with ordinary singularities.
long tau_from_counts(const WeakCombinatorics& wc);

}  // namespace mcurve
