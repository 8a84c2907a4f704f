#pragma once

#include <string>
#include <vector>

#include "mcurve/arrangement/arrangement.hpp"
#include "mcurve/syzygy/syzygy.hpp"

namespace mcurve {

struct MCurveCertificate {
  bool is_m_arrangement = false;
  long target_tau = 0;
  long actual_tau = 0;
  int total_degree = 0;
  long quadruple_points = 0;
  WeakCombinatorics combinatorics;
  std::vector<SingularPoint> points;
  std::string details;
};

/// Decides whether an arrangement with ordinary singularities of
/// multiplicity <= 4 is an M-arrangement: deg J_f must equal the target for
/// D = d + 2k and there must be an ordinary quadruple point. The Tjurina
/// number from the Milnor algebra is cross-checked against sum (r-1)^2 n_r.
/// Throws DegreeTooSmall for D < 5.
MCurveCertificate m_curve_certify(const Arrangement& arr, RankEngine& engine, const SingularPointOptions& opts = {});

/// Same, reusing an existing analysis of the defining form.
MCurveCertificate m_curve_certify(const Arrangement& arr, JacobianSyzygies& analysis,
                                  const SingularPointOptions& opts = {});

}  // namespace mcurve
