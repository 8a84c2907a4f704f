#include "mcurve/combinatorics.hpp"

#include "mcurve/error.hpp"

namespace mcurve {

int WeakCombinatorics::t() const {
  int t = 1;
  for (const auto& [r, n] : counts) {
    if (n > 0) t = std::max(t, r);
  }
  return t;
}

void WeakCombinatorics::check() const {
  if (d < 0 || k < 0) throw Error(ErrorKind::NegativeCount, "negative number of lines or conics");
  for (const auto& [r, n] : counts) {
    if (r < 2) throw Error(ErrorKind::InvalidArgument, "multiplicities start at 2");
    if (n < 0) throw Error(ErrorKind::NegativeCount, "n_" + std::to_string(r) + " is negative");
  }
  if (d + 2 * k < 3) throw Error(ErrorKind::InvalidArgument, "total degree d + 2k must be at least 3");
}

std::string WeakCombinatorics::to_string() const {
  std::string s = std::to_string(d) + "," + std::to_string(k) + ";";
  const int top = std::max(2, t());
  for (int r = 2; r <= top; ++r) {
    if (r > 2) s += ",";
    s += std::to_string(n(r));
  }
  return s;
}

std::map<int, long> WeakCombinatorics::trimmed() const {
  std::map<int, long> out;
  for (const auto& [r, n] : counts) {
    if (n != 0) out.emplace(r, n);
  }
  return out;
}

long bezout_pair_count(int d, int k) {
  const long dl = d, kl = k;
  return 4 * (kl * (kl - 1) / 2) + 2 * kl * dl + dl * (dl - 1) / 2;
}

long bezout_point_count(const WeakCombinatorics& wc) {
  long s = 0;
  for (const auto& [r, n] : wc.counts) s += static_cast<long>(r) * (r - 1) / 2 * n;
  return s;
}

long tau_from_counts(const WeakCombinatorics& wc) {
  long s = 0;
  for (const auto& [r, n] : wc.counts) s += static_cast<long>(r - 1) * (r - 1) * n;
  return s;
}

}  // namespace mcurve
