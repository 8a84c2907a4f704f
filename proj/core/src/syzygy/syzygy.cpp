#include "mcurve/syzygy/syzygy.hpp"

#include <algorithm>
#include <string>

#include "mcurve/error.hpp"

namespace mcurve {

long tau_max(int d, int r) {
  long base = static_cast<long>(d - 1) * (d - r - 1) + static_cast<long>(r) * r;
  if (2 * r >= d) {
    const long n = 2L * r - d + 2;
    base -= n * (n - 1) / 2;
  }
  return base;
}

long m_curve_target(int total_degree) {
  if (total_degree < 5) {
    throw Error(ErrorKind::DegreeTooSmall, "total degree " + std::to_string(total_degree) + " is below 5");
  }
  const long m = total_degree / 2;
  return total_degree % 2 == 0 ? 3 * m * m - 3 * m + 3 : 3 * m * m + 1;
}

namespace {

Exponent shifted(Exponent e, int var) {
  if (var == 0) ++e.x;
  if (var == 1) ++e.y;
  if (var == 2) ++e.z;
  return e;
}

// Multiplies a syzygy in S_{r-1}^3 (component-major layout) by one variable,
// yielding (column, value) pairs in S_r^3 sorted by column.
template <typename T>
std::vector<std::pair<std::uint32_t, T>> shift_syzygy(const std::vector<T>& v, int r, int var,
                                                     const std::vector<Exponent>& source_basis) {
  const std::size_t ns = basis_size(r - 1);
  const std::size_t nt = basis_size(r);
  std::vector<std::pair<std::uint32_t, T>> out;
  for (std::size_t idx = 0; idx < v.size(); ++idx) {
    if (v[idx] == 0) continue;
    const std::size_t comp = idx / ns;
    const std::size_t i = idx % ns;
    const std::size_t col = comp * nt + basis_index(shifted(source_basis[i], var));
    out.emplace_back(static_cast<std::uint32_t>(col), v[idx]);
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  return out;
}

}  // namespace

JacobianSyzygies::JacobianSyzygies(const HForm& f, RankEngine& engine) : data_(f), engine_(engine) {
  if (f.is_zero()) throw Error(ErrorKind::ZeroForm, "cannot analyse the zero form");
  if (f.degree() < 1) throw Error(ErrorKind::InvalidArgument, "form must have positive degree");
}

std::size_t JacobianSyzygies::jacobian_rank(int source_degree, bool verdict_critical) {
  auto it = jacobian_ranks_.find(source_degree);
  if (it != jacobian_ranks_.end() && (it->second.certified || !verdict_critical)) return it->second.rank;
  const std::size_t rank = engine_.rank(data_.jacobian_map(source_degree), verdict_critical);
  const bool certified = verdict_critical || engine_.mode() == RankMode::Exact;
  jacobian_ranks_[source_degree] = {rank, certified};
  return rank;
}

long JacobianSyzygies::milnor_dimension(int k, bool verdict_critical) {
  if (k < 0) return 0;
  const int source = k - degree() + 1;
  const long full = static_cast<long>(basis_size(k));
  if (source < 0) return full;
  return full - static_cast<long>(jacobian_rank(source, verdict_critical));
}

std::vector<long> JacobianSyzygies::milnor_hilbert(int k_max) {
  std::vector<long> out;
  for (int k = 0; k <= k_max; ++k) out.push_back(milnor_dimension(k));
  return out;
}

long JacobianSyzygies::tau() {
  if (tau_) return *tau_;
  const int d = degree();
  const int limit = 5 * d;
  for (int start = std::max(0, 3 * d - 6); start + 2 <= limit; ++start) {
    const long a = milnor_dimension(start, true);
    if (milnor_dimension(start + 1, true) == a && milnor_dimension(start + 2, true) == a) {
      tau_ = a;
      window_end_ = start + 2;
      return a;
    }
  }
  throw Error(ErrorKind::StabilizationFailure,
              "Hilbert function of the Milnor algebra not constant on any window up to " + std::to_string(limit));
}

int JacobianSyzygies::window_end() {
  tau();
  return window_end_;
}

long JacobianSyzygies::ar_dimension(int r, bool verdict_critical) {
  if (r < 0) return 0;
  return 3 * static_cast<long>(basis_size(r)) - static_cast<long>(jacobian_rank(r, verdict_critical));
}

int JacobianSyzygies::mdr() {
  if (mdr_) return *mdr_;
  for (int r = 0; r <= degree() - 1; ++r) {
    if (ar_dimension(r, true) > 0) {
      mdr_ = r;
      return r;
    }
  }
  throw Error(ErrorKind::InternalInconsistency, "no Jacobian syzygy found up to degree d - 1");
}

long JacobianSyzygies::koszul_dimension(int r) {
  if (r < degree() - 1) return 0;
  auto it = koszul_ranks_.find(r);
  if (it != koszul_ranks_.end()) return it->second;
  const long rank = static_cast<long>(engine_.rank(data_.koszul_map(r), true));
  koszul_ranks_[r] = rank;
  return rank;
}

std::optional<int> JacobianSyzygies::mdr_e() {
  if (mdr_e_) return *mdr_e_;
  const int d = degree();
  const int m = mdr();
  if (m < d - 1) {
    mdr_e_ = std::optional<int>(m);
    return m;
  }
  if (tau() == 0) {
    mdr_e_ = std::optional<int>();
    return std::nullopt;
  }
  // A singular curve has ct <= 3(d-2), hence mdr_e <= 2d - 4.
  for (int r = d - 1; r <= std::max(2 * d - 4, d - 1); ++r) {
    if (ar_dimension(r, true) - koszul_dimension(r) > 0) {
      mdr_e_ = std::optional<int>(r);
      return r;
    }
  }
  throw Error(ErrorKind::InternalInconsistency, "singular curve without essential syzygies up to degree 2d - 4");
}

DpwVerdict JacobianSyzygies::dpw_verdict() {
  DpwVerdict v;
  const int d = degree();
  v.r = mdr();
  v.tau = tau();
  v.tau_max = tau_max(d, v.r);
  if (v.tau > v.tau_max) {
    throw Error(ErrorKind::BoundViolated, "tau " + std::to_string(v.tau) + " exceeds the du Plessis-Wall bound " +
                                              std::to_string(v.tau_max));
  }
  v.is_free = 2 * v.r < d && v.tau == v.tau_max;
  return v;
}

std::pair<int, int> JacobianSyzygies::exponents() {
  const auto v = dpw_verdict();
  if (!v.is_free) throw Error(ErrorKind::NotFree, "curve is not free");
  return {v.r, degree() - 1 - v.r};
}

std::optional<long> JacobianSyzygies::generators_in_degree_modular(int r) {
  const auto source_basis = monomial_basis(r - 1);
  const std::size_t width = 3 * basis_size(r);
  const IntMatrix target = data_.jacobian_map(r);
  const IntMatrix previous = r > 0 ? data_.jacobian_map(r - 1) : IntMatrix();
  std::optional<long> agreed;
  for (auto p : engine_.primes()) {
    const long ar = static_cast<long>(width) - static_cast<long>(rank_mod_p(target, p));
    long image = 0;
    if (r > 0) {
      std::vector<std::vector<std::uint64_t>> rows;
      for (const auto& k : left_kernel_mod_p(previous, p)) {
        for (int var = 0; var < 3; ++var) {
          std::vector<std::uint64_t> row(width, 0);
          for (const auto& [c, val] : shift_syzygy(k, r, var, source_basis)) row[c] = val;
          rows.push_back(std::move(row));
        }
      }
      image = static_cast<long>(rank_mod_p_dense(std::move(rows), width, p));
    }
    const long count = ar - image;
    if (agreed && *agreed != count) return std::nullopt;
    agreed = count;
  }
  return agreed;
}

long JacobianSyzygies::generators_in_degree_exact(int r) {
  const long ar = ar_dimension(r, true);
  if (r == 0 || ar == 0) return ar;
  const auto source_basis = monomial_basis(r - 1);
  IntMatrix image(3 * basis_size(r));
  for (const auto& k : left_kernel_exact(data_.jacobian_map(r - 1))) {
    for (int var = 0; var < 3; ++var) {
      SparseVector row;
      for (auto& [c, val] : shift_syzygy(k, r, var, source_basis)) {
        row.cols.push_back(c);
        row.vals.push_back(val);
      }
      image.add_row(std::move(row));
    }
  }
  return ar - static_cast<long>(rank_exact(image));
}

std::vector<int> JacobianSyzygies::generator_degrees(int r_max) {
  std::vector<int> out;
  for (int r = 0; r <= r_max; ++r) {
    long count = 0;
    if (engine_.mode() == RankMode::Exact) {
      count = generators_in_degree_exact(r);
    } else if (auto m = generators_in_degree_modular(r)) {
      count = *m;
    } else {
      engine_.note_fallback();
      count = generators_in_degree_exact(r);
    }
    if (count < 0) throw Error(ErrorKind::InternalInconsistency, "negative generator count");
    out.insert(out.end(), static_cast<std::size_t>(count), r);
  }
  return out;
}

Thresholds JacobianSyzygies::thresholds() {
  Thresholds t;
  const int d = degree();
  const long tv = tau();
  const int end = window_end();
  int st = end;
  while (st > 0 && milnor_dimension(st - 1) == tv) --st;
  t.st = st;
  if (auto e = mdr_e()) t.ct = *e + d - 2;
  const auto v = dpw_verdict();
  if (v.is_free) {
    const int d2 = d - 1 - v.r;
    if (!t.ct || *t.ct + t.st != 3 * (d - 2) || t.st != d - 3 + d2) {
      throw Error(ErrorKind::InternalInconsistency, "thresholds of a free curve violate ct + st = 3(d-2)");
    }
  }
  return t;
}

Regularity JacobianSyzygies::regularity() {
  Regularity reg;
  const auto t = thresholds();
  reg.st_advisory = t.st;
  if (dpw_verdict().is_free) {
    reg.reg_M = t.st;
    reg.reg_AR = t.st - degree() + 3;
  }
  return reg;
}

SyzygyReport JacobianSyzygies::report(std::optional<int> generators_to) {
  SyzygyReport rep;
  rep.degree = degree();
  rep.tau = tau();
  rep.hilbert = milnor_hilbert(window_end());
  const auto v = dpw_verdict();
  rep.mdr = v.r;
  rep.dpw_bound = v.tau_max;
  rep.is_free = v.is_free;
  if (v.is_free) rep.exponents = std::make_pair(v.r, rep.degree - 1 - v.r);
  rep.mdr_e = mdr_e();
  const auto t = thresholds();
  rep.ct = t.ct;
  rep.st = t.st;
  const auto reg = regularity();
  rep.reg_M = reg.reg_M;
  rep.reg_AR = reg.reg_AR;
  rep.is_m_curve = rep.degree >= 5 && rep.tau == m_curve_target(rep.degree);
  if (generators_to) {
    rep.generator_degrees = generator_degrees(*generators_to);
    rep.generators_checked_to = *generators_to;
  }
  rep.backend = engine_.backend();
  return rep;
}

namespace {

template <typename Fn>
auto with_engine(const HForm& f, RankEngine* engine, Fn&& fn) {
  RankEngine local;
  JacobianSyzygies s(f, engine ? *engine : local);
  return fn(s);
}

}  // namespace

std::vector<long> milnor_hilbert(const HForm& f, int k_max, RankEngine* engine) {
  return with_engine(f, engine, [&](JacobianSyzygies& s) { return s.milnor_hilbert(k_max); });
}
long tau(const HForm& f, RankEngine* engine) {
  return with_engine(f, engine, [](JacobianSyzygies& s) { return s.tau(); });
}
long ar_dimension(const HForm& f, int r, RankEngine* engine) {
  return with_engine(f, engine, [&](JacobianSyzygies& s) { return s.ar_dimension(r, true); });
}
int mdr(const HForm& f, RankEngine* engine) {
  return with_engine(f, engine, [](JacobianSyzygies& s) { return s.mdr(); });
}
long koszul_dimension(const HForm& f, int r, RankEngine* engine) {
  return with_engine(f, engine, [&](JacobianSyzygies& s) { return s.koszul_dimension(r); });
}
std::optional<int> mdr_e(const HForm& f, RankEngine* engine) {
  return with_engine(f, engine, [](JacobianSyzygies& s) { return s.mdr_e(); });
}
DpwVerdict dpw_verdict(const HForm& f, RankEngine* engine) {
  return with_engine(f, engine, [](JacobianSyzygies& s) { return s.dpw_verdict(); });
}
std::pair<int, int> exponents(const HForm& f, RankEngine* engine) {
  return with_engine(f, engine, [](JacobianSyzygies& s) { return s.exponents(); });
}
std::vector<int> generator_degrees(const HForm& f, int r_max, RankEngine* engine) {
  return with_engine(f, engine, [&](JacobianSyzygies& s) { return s.generator_degrees(r_max); });
}
Thresholds thresholds(const HForm& f, RankEngine* engine) {
  return with_engine(f, engine, [](JacobianSyzygies& s) { return s.thresholds(); });
}
Regularity regularity(const HForm& f, RankEngine* engine) {
  return with_engine(f, engine, [](JacobianSyzygies& s) { return s.regularity(); });
}

}  // namespace mcurve
