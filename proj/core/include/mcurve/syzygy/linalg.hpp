#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "mcurve/poly/rational.hpp"

namespace mcurve {

/// Sparse integer vector with strictly increasing column indices.
struct SparseVector {
  std::vector<std::uint32_t> cols;
  std::vector<Integer> vals;

  bool empty() const { return cols.empty(); }
  std::size_t size() const { return cols.size(); }
};

/// Integer matrix stored as sparse rows. Rank computations treat rows as
/// the generating vectors; left kernels are dependencies among rows.
class IntMatrix {
 public:
  IntMatrix() = default;
  explicit IntMatrix(std::size_t ncols) : ncols_(ncols) {}

  std::size_t rows() const { return rows_.size(); }
  std::size_t cols() const { return ncols_; }
  const std::vector<SparseVector>& data() const { return rows_; }
  const SparseVector& row(std::size_t i) const { return rows_[i]; }

  /// Appends a row; entries must be sorted by column and nonzero.
  void add_row(SparseVector row);

 private:
  std::size_t ncols_ = 0;
  std::vector<SparseVector> rows_;
};

/// Arithmetic modulo an odd prime p < 2^63 in Montgomery form.
class MontgomeryPrime {
 public:
  explicit MontgomeryPrime(std::uint64_t p);

  std::uint64_t prime() const { return p_; }
  std::uint64_t to_mont(std::uint64_t a) const { return mul(a % p_, r2_); }
  std::uint64_t from_mont(std::uint64_t a) const { return reduce(a); }
  std::uint64_t reduce_integer(const Integer& z) const;

  std::uint64_t mul(std::uint64_t a, std::uint64_t b) const {
    return reduce(static_cast<unsigned __int128>(a) * b);
  }
  std::uint64_t add(std::uint64_t a, std::uint64_t b) const {
    std::uint64_t s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  std::uint64_t sub(std::uint64_t a, std::uint64_t b) const { return a >= b ? a - b : a + p_ - b; }
  std::uint64_t inverse(std::uint64_t a_mont) const;
  std::uint64_t one() const { return one_; }

 private:
  std::uint64_t reduce(unsigned __int128 t) const {
    std::uint64_t m = static_cast<std::uint64_t>(t) * pinv_neg_;
    unsigned __int128 u = (t + static_cast<unsigned __int128>(m) * p_) >> 64;
    std::uint64_t r = static_cast<std::uint64_t>(u);
    return r >= p_ ? r - p_ : r;
  }

  std::uint64_t p_;
  std::uint64_t pinv_neg_;  // -p^{-1} mod 2^64
  std::uint64_t r2_;        // 2^128 mod p
  std::uint64_t one_;       // 2^64 mod p
};

std::size_t rank_mod_p(const IntMatrix& m, std::uint64_t p);

/// Exact rank over Q by fraction-free elimination: each new row is reduced
/// against the current pivots by integer cross-multiplication and divided by
/// its content after every step.
std::size_t rank_exact(const IntMatrix& m);

/// Basis of the left kernel {lambda : lambda^T M = 0} modulo p, one vector
/// per dependent row, entries in [0, p).
std::vector<std::vector<std::uint64_t>> left_kernel_mod_p(const IntMatrix& m, std::uint64_t p);

/// Basis of the left kernel over Q as primitive integer vectors.
std::vector<std::vector<Integer>> left_kernel_exact(const IntMatrix& m);

/// Rank modulo p of a dense matrix with entries already reduced mod p.
std::size_t rank_mod_p_dense(std::vector<std::vector<std::uint64_t>> rows, std::size_t ncols, std::uint64_t p);

/// Upper bound, in bits, for the absolute value of every square minor of m
/// of size at most minor_size (Hadamard's inequality over the largest row or
/// column norms, whichever is smaller).
double hadamard_bits(const IntMatrix& m, std::size_t minor_size = SIZE_MAX);

/// Random primes in [2^61, 2^62), derived deterministically from the seed.
std::vector<std::uint64_t> random_primes(std::uint64_t seed, std::size_t count);

}  // namespace mcurve
