#include "mcurve/arrangement/arrangement.hpp"

#include <algorithm>
#include <cctype>

#include "mcurve/error.hpp"

namespace mcurve {

std::string ComponentId::to_string() const {
  return (kind == ComponentKind::Line ? "L" : "C") + std::to_string(index + 1);
}

ComponentId ComponentId::parse(const std::string& text) {
  if (text.size() < 2 || (text[0] != 'L' && text[0] != 'C' && text[0] != 'l' && text[0] != 'c')) {
    throw Error(ErrorKind::ParseError, "component id must look like L1 or C1, got '" + text + "'");
  }
  for (std::size_t i = 1; i < text.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(text[i]))) {
      throw Error(ErrorKind::ParseError, "component id must look like L1 or C1, got '" + text + "'");
    }
  }
  if (text.size() > 9) throw Error(ErrorKind::ParseError, "component index too large in '" + text + "'");
  const int n = std::stoi(text.substr(1));
  if (n < 1) throw Error(ErrorKind::ParseError, "component ids are 1-based, got '" + text + "'");
  return {std::toupper(static_cast<unsigned char>(text[0])) == 'L' ? ComponentKind::Line : ComponentKind::Conic,
          n - 1};
}

Arrangement::Arrangement(std::vector<HForm> lines, std::vector<HForm> conics)
    : lines_(std::move(lines)), conics_(std::move(conics)) {}

const HForm& Arrangement::component(int global) const {
  if (global < 0 || global >= component_count()) {
    throw Error(ErrorKind::UnknownComponent, "component index " + std::to_string(global) + " out of range");
  }
  return global < d() ? lines_[global] : conics_[global - d()];
}

ComponentId Arrangement::id_of(int global) const {
  if (global < 0 || global >= component_count()) {
    throw Error(ErrorKind::UnknownComponent, "component index " + std::to_string(global) + " out of range");
  }
  return global < d() ? ComponentId{ComponentKind::Line, global} : ComponentId{ComponentKind::Conic, global - d()};
}

int Arrangement::global_of(const ComponentId& id) const {
  const int limit = id.kind == ComponentKind::Line ? d() : k();
  if (id.index < 0 || id.index >= limit) throw Error(ErrorKind::UnknownComponent, "no component " + id.to_string());
  return id.kind == ComponentKind::Line ? id.index : d() + id.index;
}

Rational conic_discriminant(const HForm& q) {
  const Rational a = q.coefficient({2, 0, 0}), b = q.coefficient({0, 2, 0}), c = q.coefficient({0, 0, 2});
  const Rational d = q.coefficient({1, 1, 0}), e = q.coefficient({1, 0, 1}), f = q.coefficient({0, 1, 1});
  return 4 * a * b * c + d * e * f - a * f * f - b * e * e - c * d * d;
}

Arrangement validate(const Arrangement& arr) {
  std::vector<HForm> lines, conics;
  for (int g = 0; g < arr.component_count(); ++g) {
    const HForm& f = arr.component(g);
    const std::string name = arr.id_of(g).to_string();
    const int expected = g < arr.d() ? 1 : 2;
    if (f.degree() != expected) {
      throw Error(ErrorKind::InvalidComponent, name + " has degree " + std::to_string(f.degree()));
    }
    if (f.is_zero()) throw Error(ErrorKind::ZeroForm, name + " is the zero form");
    if (expected == 2 && conic_discriminant(f) == 0) {
      throw Error(ErrorKind::SingularConic, name + " = " + f.to_string() + " is a singular conic");
    }
    (expected == 1 ? lines : conics).push_back(f.normalized());
  }
  auto check_duplicates = [](const std::vector<HForm>& forms, char tag) {
    for (std::size_t i = 0; i < forms.size(); ++i) {
      for (std::size_t j = i + 1; j < forms.size(); ++j) {
        if (forms[i] == forms[j]) {
          throw Error(ErrorKind::DuplicateComponent, std::string(1, tag) + std::to_string(i + 1) + " and " + tag +
                                                         std::to_string(j + 1) + " are proportional");
        }
      }
    }
  };
  check_duplicates(lines, 'L');
  check_duplicates(conics, 'C');
  return Arrangement(std::move(lines), std::move(conics));
}

WeakCombinatorics weak_combinatorics(const Arrangement& arr, const std::vector<SingularPoint>& points) {
  WeakCombinatorics wc;
  wc.d = arr.d();
  wc.k = arr.k();
  for (const auto& p : points) wc.counts[p.multiplicity] += p.local_count;
  const long lhs = bezout_point_count(wc);
  const long rhs = bezout_pair_count(wc.d, wc.k);
  if (lhs != rhs) {
    throw Error(ErrorKind::InternalInconsistency, "Bezout check failed: points account for " + std::to_string(lhs) +
                                                      " intersections, components give " + std::to_string(rhs));
  }
  return wc;
}

WeakCombinatorics weak_combinatorics(const Arrangement& arr, const SingularPointOptions& opts) {
  return weak_combinatorics(arr, singular_points(arr, opts));
}

int conic_trace(const Arrangement& arr, const ComponentId& conic, const std::vector<SingularPoint>& points) {
  if (conic.kind != ComponentKind::Conic) throw Error(ErrorKind::UnknownComponent, conic.to_string() + " is not a conic");
  const int g = arr.global_of(conic);
  int r = 0;
  for (const auto& p : points) {
    if (std::binary_search(p.incidence.begin(), p.incidence.end(), g)) r += p.local_count;
  }
  return r;
}

int conic_trace(const Arrangement& arr, const ComponentId& conic, const SingularPointOptions& opts) {
  arr.global_of(conic);
  return conic_trace(arr, conic, singular_points(arr, opts));
}

Arrangement delete_component(const Arrangement& arr, const ComponentId& id) {
  arr.global_of(id);
  if (arr.component_count() - 1 < 2) {
    throw Error(ErrorKind::TooFewComponents, "deleting " + id.to_string() + " leaves fewer than two components");
  }
  std::vector<HForm> lines = arr.lines(), conics = arr.conics();
  auto& list = id.kind == ComponentKind::Line ? lines : conics;
  list.erase(list.begin() + id.index);
  return Arrangement(std::move(lines), std::move(conics));
}

HForm defining_form(const Arrangement& arr) {
  HForm f = HForm::constant(1);
  for (int g = 0; g < arr.component_count(); ++g) f = f * arr.component(g);
  return f;
}

Arrangement transform(const Arrangement& arr, const LinearMap& m) {
  std::vector<HForm> lines, conics;
  for (const auto& l : arr.lines()) lines.push_back(substitute_linear(l, m));
  for (const auto& c : arr.conics()) conics.push_back(substitute_linear(c, m));
  return Arrangement(std::move(lines), std::move(conics));
}

}  // namespace mcurve
