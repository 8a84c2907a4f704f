#pragma once

#include <vector>

#include "mcurve/poly/rational.hpp"
#include "mcurve/syzygy/linalg.hpp"

namespace mcurve::testkit {

// Textbook Gaussian elimination over Q on a dense copy.
inline std::size_t dense_rational_rank(std::vector<std::vector<Rational>> a) {
  std::size_t rank = 0;
  const std::size_t rows = a.size();
  const std::size_t cols = rows ? a[0].size() : 0;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t piv = rank;
    while (piv < rows && a[piv][c] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(a[piv], a[rank]);
    for (std::size_t i = rank + 1; i < rows; ++i) {
      if (a[i][c] == 0) continue;
      const Rational factor = a[i][c] / a[rank][c];
      for (std::size_t j = c; j < cols; ++j) a[i][j] -= factor * a[rank][j];
    }
    ++rank;
  }
  return rank;
}

inline std::vector<std::vector<Rational>> to_dense(const IntMatrix& m) {
  std::vector<std::vector<Rational>> a(m.rows(), std::vector<Rational>(m.cols(), 0));
  for (std::size_t i = 0; i < m.rows(); ++i) {
    const auto& r = m.row(i);
    for (std::size_t k = 0; k < r.size(); ++k) a[i][r.cols[k]] = Rational(r.vals[k]);
  }
  return a;
}

}  // namespace mcurve::testkit
