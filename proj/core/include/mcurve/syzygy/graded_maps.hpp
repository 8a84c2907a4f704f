#pragma once

#include <array>

#include "mcurve/poly/hform.hpp"
#include "mcurve/syzygy/linalg.hpp"

namespace mcurve {

/// The Jacobian data of a form with integer coefficients: f itself (scaled
/// to a primitive integer form) and its three partials.
class JacobianData {
 public:
  explicit JacobianData(const HForm& f);

  int degree() const { return degree_; }
  const HForm& form() const { return f_; }
  const std::array<HForm, 3>& partials() const { return partials_; }

  /// Matrix of (a, b, c) -> a f_x + b f_y + c f_z restricted to
  /// S_source^3 -> S_{source + d - 1}. Row v*|S_source| + i is
  /// (monomial i of S_source) * f_v; columns are the grlex basis of the target.
  IntMatrix jacobian_map(int source_degree) const;

  /// Matrix whose rows span KR(f)_r inside S_r^3: multiples by S_{r-d+1} of
  /// (f_y, -f_x, 0), (f_z, 0, -f_x), (0, f_z, -f_y). Columns are S_r^3 with
  /// component-major layout.
  IntMatrix koszul_map(int r) const;

 private:
  int degree_;
  HForm f_;
  std::array<HForm, 3> partials_;
};

}  // namespace mcurve
