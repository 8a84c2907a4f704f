#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "mcurve/combinatorics.hpp"
#include "mcurve/poly/hform.hpp"
#include "mcurve/poly/unipoly.hpp"

namespace mcurve {

enum class ComponentKind { Line, Conic };

/// Names a component: L1..Ld for lines, C1..Ck for conics (1-based).
struct ComponentId {
  ComponentKind kind = ComponentKind::Line;
  int index = 0;  // 0-based

  std::string to_string() const;
  /// Parses "L3" or "C1"; throws ParseError.
  static ComponentId parse(const std::string& text);
  friend bool operator==(const ComponentId&, const ComponentId&) = default;
};

/// Lines followed by conics. Components are addressed either by
/// ComponentId or by a global index: lines occupy 0..d-1, conics d..d+k-1.
class Arrangement {
 public:
  Arrangement() = default;
  Arrangement(std::vector<HForm> lines, std::vector<HForm> conics);

  const std::vector<HForm>& lines() const { return lines_; }
  const std::vector<HForm>& conics() const { return conics_; }
  int d() const { return static_cast<int>(lines_.size()); }
  int k() const { return static_cast<int>(conics_.size()); }
  int total_degree() const { return d() + 2 * k(); }
  int component_count() const { return d() + k(); }

  const HForm& component(int global) const;
  ComponentId id_of(int global) const;
  /// Throws UnknownComponent when the id is out of range.
  int global_of(const ComponentId& id) const;

  friend bool operator==(const Arrangement&, const Arrangement&) = default;

 private:
  std::vector<HForm> lines_;
  std::vector<HForm> conics_;
};

/// Normalizes every component (coprime integer coefficients, first nonzero
/// coefficient positive) and checks the standing hypotheses: no zero forms,
/// correct degrees, smooth conics and no two proportional components.
/// Throws ZeroForm, InvalidComponent, SingularConic or DuplicateComponent.
Arrangement validate(const Arrangement& arr);

/// Determinant of the symmetric matrix of a conic (scaled by 4 to stay
/// integral for integer input).
Rational conic_discriminant(const HForm& conic);

/// A singular point of the union, or a conjugate family of them. All
/// conjugates of a point share its incidence because the components are
/// rational, so one record stands for `local_count` = field_degree points.
struct SingularPoint {
  std::vector<int> incidence;  // global component indices, ascending
  int multiplicity = 0;
  int field_degree = 1;
  int local_count = 1;
  /// Monic irreducible minimal polynomial m(a) of the residue field
  /// (the polynomial "a" for rational points).
  UniPoly minimal_polynomial;
  /// Coordinates in Q[a]/(m).
  std::array<UniPoly, 3> coordinates;
  /// The two components whose intersection produced the point.
  std::pair<int, int> origin;
};

struct SingularPointOptions {
  std::uint64_t shear_seed = 0x5eed;
  int max_shears = 16;
  int shear_range = 20;
};

/// Every singular point of the union with its exact multiplicity. Throws
/// NonOrdinarySingularity, MultiplicityTooHigh or ShearExhausted.
std::vector<SingularPoint> singular_points(const Arrangement& arr, const SingularPointOptions& opts = {});

/// Tallies n_r (counting complex points) and verifies the Bezout identity;
/// throws InternalInconsistency if it fails.
WeakCombinatorics weak_combinatorics(const Arrangement& arr, const SingularPointOptions& opts = {});
WeakCombinatorics weak_combinatorics(const Arrangement& arr, const std::vector<SingularPoint>& points);

/// Number of distinct points of the conic lying on another component.
int conic_trace(const Arrangement& arr, const ComponentId& conic, const SingularPointOptions& opts = {});
int conic_trace(const Arrangement& arr, const ComponentId& conic, const std::vector<SingularPoint>& points);

/// Arrangement without the named component; at least two must remain.
Arrangement delete_component(const Arrangement& arr, const ComponentId& id);

/// Product of all components, degree d + 2k.
HForm defining_form(const Arrangement& arr);

/// Applies f -> f(M v) to every component.
Arrangement transform(const Arrangement& arr, const LinearMap& m);

}  // namespace mcurve
