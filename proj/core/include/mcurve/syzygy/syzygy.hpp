#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "mcurve/poly/hform.hpp"
#include "mcurve/syzygy/graded_maps.hpp"
#include "mcurve/syzygy/rank_engine.hpp"

namespace mcurve {

/// Upper bound of du Plessis and Wall for a reduced plane curve of degree d
/// whose minimal syzygy degree is r. For 2r >= d the binomial correction
/// C(2r-d+2, 2) is subtracted.
long tau_max(int d, int r);

struct DpwVerdict {
  bool is_free = false;
  long tau = 0;
  long tau_max = 0;
  int r = 0;
};

struct Thresholds {
  /// Coincidence threshold mdr_e + d - 2; absent for smooth curves.
  std::optional<int> ct;
  /// First index from which the Hilbert function of M(f) is constant.
  int st = 0;
};

struct Regularity {
  std::optional<int> reg_M;
  std::optional<int> reg_AR;
  /// Always the stability threshold; equals reg_M only for free curves.
  int st_advisory = 0;
};

struct SyzygyReport {
  int degree = 0;
  std::vector<long> hilbert;
  long tau = 0;
  int mdr = 0;
  std::optional<int> mdr_e;
  bool is_free = false;
  std::optional<std::pair<int, int>> exponents;
  std::optional<int> ct;
  int st = 0;
  std::optional<int> reg_M;
  std::optional<int> reg_AR;
  /// tau meets the M-curve target for this degree. The arrangement-level
  /// certificate additionally requires an ordinary quadruple point.
  bool is_m_curve = false;
  long dpw_bound = 0;
  /// Minimal generator degrees of AR(f) up to generators_checked_to, when
  /// requested.
  std::optional<std::vector<int>> generator_degrees;
  int generators_checked_to = -1;
  RankBackend backend;
};

/// M-curve target for deg J_f in total degree D >= 5: 3m^2-3m+3 for D = 2m,
/// 3m^2+1 for D = 2m+1. Throws DegreeTooSmall below 5.
long m_curve_target(int total_degree);

/// Graded invariants of the Jacobian ideal of one reduced form. Ranks are
/// cached per degree, so asking for several invariants reuses work.
class JacobianSyzygies {
 public:
  explicit JacobianSyzygies(const HForm& f, RankEngine& engine);

  int degree() const { return data_.degree(); }
  const JacobianData& data() const { return data_; }

  /// dim M(f)_k.
  long milnor_dimension(int k, bool verdict_critical = false);
  /// dim M(f)_k for k = 0..k_max.
  std::vector<long> milnor_hilbert(int k_max);

  /// Stabilized Hilbert value. Checks the window [3d-6, 3d-4] and slides it
  /// up to 5d before raising StabilizationFailure.
  long tau();
  /// Last index of the window where the Hilbert function was found constant.
  int window_end();

  long ar_dimension(int r, bool verdict_critical = false);
  /// Smallest r with AR(f)_r != 0; at most d - 1.
  int mdr();
  long koszul_dimension(int r);
  /// Smallest r with ER(f)_r = AR(f)_r / KR(f)_r nonzero. Equals mdr when
  /// mdr < d - 1. Absent for smooth curves.
  std::optional<int> mdr_e();

  DpwVerdict dpw_verdict();
  /// (mdr, d-1-mdr); throws NotFree.
  std::pair<int, int> exponents();
  /// Number of minimal generators of AR(f) in each degree 0..r_max; the
  /// returned multiset lists each degree once per generator.
  std::vector<int> generator_degrees(int r_max);
  Thresholds thresholds();
  Regularity regularity();

  SyzygyReport report(std::optional<int> generators_to = std::nullopt);

 private:
  struct CachedRank {
    std::size_t rank = 0;
    bool certified = false;
  };
  std::size_t jacobian_rank(int source_degree, bool verdict_critical);
  std::optional<long> generators_in_degree_modular(int r);
  long generators_in_degree_exact(int r);

  JacobianData data_;
  RankEngine& engine_;
  std::map<int, CachedRank> jacobian_ranks_;
  std::map<int, long> koszul_ranks_;
  std::optional<long> tau_;
  int window_end_ = -1;
  std::optional<int> mdr_;
  std::optional<std::optional<int>> mdr_e_;
};

// One-shot helpers. Each builds a fresh analysis with the given engine (or
// a default modular-certified engine).
std::vector<long> milnor_hilbert(const HForm& f, int k_max, RankEngine* engine = nullptr);
long tau(const HForm& f, RankEngine* engine = nullptr);
long ar_dimension(const HForm& f, int r, RankEngine* engine = nullptr);
int mdr(const HForm& f, RankEngine* engine = nullptr);
long koszul_dimension(const HForm& f, int r, RankEngine* engine = nullptr);
std::optional<int> mdr_e(const HForm& f, RankEngine* engine = nullptr);
DpwVerdict dpw_verdict(const HForm& f, RankEngine* engine = nullptr);
std::pair<int, int> exponents(const HForm& f, RankEngine* engine = nullptr);
std::vector<int> generator_degrees(const HForm& f, int r_max, RankEngine* engine = nullptr);
Thresholds thresholds(const HForm& f, RankEngine* engine = nullptr);
Regularity regularity(const HForm& f, RankEngine* engine = nullptr);

}  // namespace mcurve
