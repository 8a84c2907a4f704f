#include "mcurve/syzygy/graded_maps.hpp"

#include <algorithm>

#include "mcurve/error.hpp"

namespace mcurve {

namespace {

// Sparse row holding the coefficients of monomial * g, placed at column
// offset + basis index within S_{deg m + deg g}.
void append_product(const Exponent& m, const HForm& g, const Rational& sign, std::uint32_t offset,
                    std::vector<std::pair<std::uint32_t, Integer>>& out) {
  for (const auto& [e, c] : g.terms()) {
    out.emplace_back(offset + static_cast<std::uint32_t>(basis_index(m + e)), Integer(sign.get_num() * c.get_num()));
  }
}

SparseVector to_sparse(std::vector<std::pair<std::uint32_t, Integer>>& entries) {
  std::sort(entries.begin(), entries.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  SparseVector v;
  for (auto& [c, x] : entries) {
    if (x == 0) continue;
    v.cols.push_back(c);
    v.vals.push_back(std::move(x));
  }
  return v;
}

}  // namespace

JacobianData::JacobianData(const HForm& f) : degree_(f.degree()), f_(f.normalized()) {
  if (f.is_zero()) throw Error(ErrorKind::ZeroForm, "Jacobian data of the zero form");
  partials_ = {partial(f_, Var::X), partial(f_, Var::Y), partial(f_, Var::Z)};
}

IntMatrix JacobianData::jacobian_map(int source_degree) const {
  const int target = source_degree + degree_ - 1;
  IntMatrix m(basis_size(target));
  if (source_degree < 0) return m;
  const auto basis = monomial_basis(source_degree);
  std::vector<std::pair<std::uint32_t, Integer>> entries;
  for (int v = 0; v < 3; ++v) {
    for (const auto& mono : basis) {
      entries.clear();
      append_product(mono, partials_[v], 1, 0, entries);
      m.add_row(to_sparse(entries));
    }
  }
  return m;
}

IntMatrix JacobianData::koszul_map(int r) const {
  const std::size_t block = basis_size(r);
  IntMatrix m(3 * block);
  const int source = r - degree_ + 1;
  if (source < 0) return m;
  const auto basis = monomial_basis(source);
  const auto& [fx, fy, fz] = partials_;
  // Each generator lists (component, form, sign).
  struct Entry {
    int component;
    const HForm* form;
    int sign;
  };
  const std::array<std::array<Entry, 2>, 3> generators{{
      {{{0, &fy, 1}, {1, &fx, -1}}},
      {{{0, &fz, 1}, {2, &fx, -1}}},
      {{{1, &fz, 1}, {2, &fy, -1}}},
  }};
  std::vector<std::pair<std::uint32_t, Integer>> entries;
  for (const auto& gen : generators) {
    for (const auto& mono : basis) {
      entries.clear();
      for (const auto& e : gen) {
        append_product(mono, *e.form, e.sign, static_cast<std::uint32_t>(e.component * block), entries);
      }
      m.add_row(to_sparse(entries));
    }
  }
  return m;
}

}  // namespace mcurve
