#include "mcurve/syzygy/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <random>

#include "mcurve/error.hpp"

namespace mcurve {

void IntMatrix::add_row(SparseVector row) {
  for (std::size_t i = 0; i < row.cols.size(); ++i) {
    if (row.cols[i] >= ncols_ || (i > 0 && row.cols[i] <= row.cols[i - 1]) || row.vals[i] == 0) {
      throw Error(ErrorKind::InvalidArgument, "malformed sparse row");
    }
  }
  rows_.push_back(std::move(row));
}

MontgomeryPrime::MontgomeryPrime(std::uint64_t p) : p_(p) {
  if (p % 2 == 0 || p >= (std::uint64_t{1} << 63)) throw Error(ErrorKind::InvalidArgument, "Montgomery modulus must be odd and < 2^63");
  std::uint64_t inv = p;
  for (int i = 0; i < 6; ++i) inv *= 2 - p * inv;
  pinv_neg_ = ~inv + 1;
  one_ = (~p + 1) % p;
  r2_ = static_cast<std::uint64_t>((static_cast<unsigned __int128>(one_) * one_) % p);
}

std::uint64_t MontgomeryPrime::reduce_integer(const Integer& z) const {
  std::uint64_t r = mpz_fdiv_ui(z.get_mpz_t(), p_);
  return to_mont(r);
}

std::uint64_t MontgomeryPrime::inverse(std::uint64_t a) const {
  if (a == 0) throw Error(ErrorKind::InternalInconsistency, "inverting zero modulo p");
  std::uint64_t result = one_;
  std::uint64_t base = a;
  std::uint64_t e = p_ - 2;
  while (e) {
    if (e & 1) result = mul(result, base);
    base = mul(base, base);
    e >>= 1;
  }
  return result;
}

namespace {

// Gaussian elimination in place on dense Montgomery rows; columns
// [0, active_cols) drive pivoting, the rest are carried along. Returns the
// rank; afterwards rows [rank, n) are zero on the active columns.
std::size_t eliminate_dense(std::vector<std::vector<std::uint64_t>>& a, std::size_t active_cols,
                            const MontgomeryPrime& f) {
  const std::size_t n = a.size();
  if (n == 0) return 0;
  const std::size_t width = a[0].size();
  std::size_t rank = 0;
  std::vector<std::size_t> nz;
  for (std::size_t col = 0; col < active_cols && rank < n; ++col) {
    std::size_t piv = rank;
    while (piv < n && a[piv][col] == 0) ++piv;
    if (piv == n) continue;
    std::swap(a[piv], a[rank]);
    auto& prow = a[rank];
    const std::uint64_t inv = f.inverse(prow[col]);
    nz.clear();
    for (std::size_t j = col; j < width; ++j) {
      if (prow[j] != 0) {
        prow[j] = f.mul(prow[j], inv);
        nz.push_back(j);
      }
    }
    for (std::size_t i = rank + 1; i < n; ++i) {
      auto& row = a[i];
      const std::uint64_t factor = row[col];
      if (factor == 0) continue;
      for (std::size_t j : nz) row[j] = f.sub(row[j], f.mul(factor, prow[j]));
    }
    ++rank;
  }
  return rank;
}

std::vector<std::vector<std::uint64_t>> to_dense(const IntMatrix& m, const MontgomeryPrime& f, std::size_t extra) {
  std::vector<std::vector<std::uint64_t>> a(m.rows(), std::vector<std::uint64_t>(m.cols() + extra, 0));
  for (std::size_t i = 0; i < m.rows(); ++i) {
    const auto& r = m.row(i);
    for (std::size_t k = 0; k < r.size(); ++k) a[i][r.cols[k]] = f.reduce_integer(r.vals[k]);
  }
  return a;
}

// Divides the vector (and its companion, if any) by the gcd of all entries
// and makes the leading entry positive.
void remove_content(SparseVector& v, SparseVector* companion) {
  Integer g = 0;
  for (const auto& x : v.vals) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
    if (g == 1) break;
  }
  if (companion && g != 1) {
    for (const auto& x : companion->vals) {
      mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
      if (g == 1) break;
    }
  }
  if (g == 0) return;
  const bool negate = !v.vals.empty() && v.vals[0] < 0;
  if (g == 1 && !negate) return;
  if (negate) g = -g;
  for (auto& x : v.vals) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
  if (companion) {
    for (auto& x : companion->vals) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
  }
}

// out = a*u - b*w (sparse merge).
SparseVector combine(const Integer& a, const SparseVector& u, const Integer& b, const SparseVector& w) {
  SparseVector out;
  out.cols.reserve(u.size() + w.size());
  out.vals.reserve(u.size() + w.size());
  std::size_t i = 0, j = 0;
  Integer tmp;
  while (i < u.size() || j < w.size()) {
    if (j == w.size() || (i < u.size() && u.cols[i] < w.cols[j])) {
      out.cols.push_back(u.cols[i]);
      out.vals.emplace_back(a * u.vals[i]);
      ++i;
    } else if (i == u.size() || w.cols[j] < u.cols[i]) {
      out.cols.push_back(w.cols[j]);
      out.vals.emplace_back(-b * w.vals[j]);
      ++j;
    } else {
      tmp = a * u.vals[i] - b * w.vals[j];
      if (tmp != 0) {
        out.cols.push_back(u.cols[i]);
        out.vals.push_back(tmp);
      }
      ++i;
      ++j;
    }
  }
  return out;
}

struct ExactReduction {
  std::size_t rank = 0;
  std::vector<SparseVector> kernel;  // companions of rows reduced to zero
};

ExactReduction reduce_exact(const IntMatrix& m, bool track) {
  ExactReduction out;
  std::vector<int> pivot_of_col(m.cols(), -1);
  std::vector<SparseVector> pivots;
  std::vector<SparseVector> pivot_companions;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    SparseVector r = m.row(i);
    SparseVector comp;
    if (track) {
      comp.cols.push_back(static_cast<std::uint32_t>(i));
      comp.vals.emplace_back(1);
    }
    remove_content(r, track ? &comp : nullptr);
    while (!r.empty()) {
      const int p = pivot_of_col[r.cols[0]];
      if (p < 0) break;
      const SparseVector& pv = pivots[p];
      Integer g;
      mpz_gcd(g.get_mpz_t(), pv.vals[0].get_mpz_t(), r.vals[0].get_mpz_t());
      Integer a = pv.vals[0] / g;
      Integer b = r.vals[0] / g;
      r = combine(a, r, b, pv);
      if (track) comp = combine(a, comp, b, pivot_companions[p]);
      remove_content(r, track ? &comp : nullptr);
    }
    if (r.empty()) {
      if (track) {
        // Normalise the kernel vector on its own.
        remove_content(comp, nullptr);
        out.kernel.push_back(std::move(comp));
      }
      continue;
    }
    pivot_of_col[r.cols[0]] = static_cast<int>(pivots.size());
    pivots.push_back(std::move(r));
    if (track) pivot_companions.push_back(std::move(comp));
  }
  out.rank = pivots.size();
  return out;
}

// log2(sqrt(sq)), 0 for empty rows.
double log2_sqrt(const Integer& sq) {
  if (sq == 0) return 0;
  long exp = 0;
  const double mant = mpz_get_d_2exp(&exp, sq.get_mpz_t());
  return 0.5 * (std::log2(mant) + static_cast<double>(exp));
}

}  // namespace

std::size_t rank_mod_p(const IntMatrix& m, std::uint64_t p) {
  MontgomeryPrime f(p);
  auto a = to_dense(m, f, 0);
  return eliminate_dense(a, m.cols(), f);
}

std::size_t rank_mod_p_dense(std::vector<std::vector<std::uint64_t>> rows, std::size_t ncols, std::uint64_t p) {
  MontgomeryPrime f(p);
  for (auto& r : rows) {
    r.resize(ncols, 0);
    for (auto& v : r) v = f.to_mont(v);
  }
  return eliminate_dense(rows, ncols, f);
}

std::size_t rank_exact(const IntMatrix& m) { return reduce_exact(m, false).rank; }

std::vector<std::vector<std::uint64_t>> left_kernel_mod_p(const IntMatrix& m, std::uint64_t p) {
  MontgomeryPrime f(p);
  const std::size_t n = m.rows();
  auto a = to_dense(m, f, n);
  for (std::size_t i = 0; i < n; ++i) a[i][m.cols() + i] = f.one();
  const std::size_t rank = eliminate_dense(a, m.cols(), f);
  std::vector<std::vector<std::uint64_t>> out;
  for (std::size_t i = rank; i < n; ++i) {
    std::vector<std::uint64_t> v(n);
    for (std::size_t j = 0; j < n; ++j) v[j] = f.from_mont(a[i][m.cols() + j]);
    out.push_back(std::move(v));
  }
  return out;
}

std::vector<std::vector<Integer>> left_kernel_exact(const IntMatrix& m) {
  auto red = reduce_exact(m, true);
  std::vector<std::vector<Integer>> out;
  for (const auto& k : red.kernel) {
    std::vector<Integer> v(m.rows(), 0);
    for (std::size_t i = 0; i < k.size(); ++i) v[k.cols[i]] = k.vals[i];
    out.push_back(std::move(v));
  }
  return out;
}

double hadamard_bits(const IntMatrix& m, std::size_t minor_size) {
  const std::size_t n = std::min({m.rows(), m.cols(), minor_size});
  if (n == 0) return 0;
  std::vector<double> row_bits, col_bits;
  std::vector<Integer> col_sq(m.cols(), 0);
  for (const auto& r : m.data()) {
    Integer sq = 0;
    for (std::size_t k = 0; k < r.size(); ++k) {
      const Integer v2 = r.vals[k] * r.vals[k];
      sq += v2;
      col_sq[r.cols[k]] += v2;
    }
    row_bits.push_back(log2_sqrt(sq));
  }
  for (const auto& sq : col_sq) col_bits.push_back(log2_sqrt(sq));
  auto largest_sum = [n](std::vector<double> v) {
    std::sort(v.begin(), v.end(), std::greater<>());
    double s = 0;
    for (std::size_t i = 0; i < n && i < v.size(); ++i) s += v[i];
    return s;
  };
  // A tiny relative slack absorbs floating-point rounding of the logarithms.
  return std::min(largest_sum(row_bits), largest_sum(col_bits)) * (1 + 1e-12) + 1e-6;
}

std::vector<std::uint64_t> random_primes(std::uint64_t seed, std::size_t count) {
  std::mt19937_64 rng(seed);
  std::vector<std::uint64_t> out;
  while (out.size() < count) {
    std::uint64_t candidate = (rng() >> 3) | (std::uint64_t{1} << 61) | 1;
    Integer z(std::to_string(candidate));
    mpz_nextprime(z.get_mpz_t(), z.get_mpz_t());
    if (z >= Integer(std::to_string(std::uint64_t{1} << 62))) continue;
    std::uint64_t p = std::stoull(z.get_str());
    if (std::find(out.begin(), out.end(), p) == out.end()) out.push_back(p);
  }
  return out;
}

}  // namespace mcurve
