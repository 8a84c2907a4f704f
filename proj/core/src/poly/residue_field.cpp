#include "mcurve/poly/residue_field.hpp"

#include "mcurve/error.hpp"

namespace mcurve {

ResidueField::ResidueField(const UniPoly& modulus) : modulus_(modulus.monic()) {
  if (modulus_.degree() < 1) throw Error(ErrorKind::InvalidArgument, "residue field modulus must have degree >= 1");
}

ResidueField::Elem ResidueField::inverse(const Elem& a) const {
  if (a.is_zero()) throw Error(ErrorKind::InternalInconsistency, "inverting zero in residue field");
  ExtendedGcd eg = extended_gcd(a, modulus_);
  if (eg.gcd.degree() != 0) throw Error(ErrorKind::InternalInconsistency, "residue field modulus is reducible");
  return reduce(eg.u);
}

ResidueField::Elem ResidueField::evaluate(const HForm& f, const Point& p) const {
  const int n = f.degree();
  std::array<std::vector<Elem>, 3> powers;
  for (int i = 0; i < 3; ++i) {
    powers[i].push_back(from_rational(1));
    for (int k = 1; k <= n; ++k) powers[i].push_back(mul(powers[i].back(), p[i]));
  }
  Elem sum;
  for (const auto& [e, c] : f.terms()) {
    Elem term = mul(mul(powers[0][e.x], powers[1][e.y]), powers[2][e.z]);
    sum = sum + c * term;
  }
  return reduce(sum);
}

ResidueField::Point ResidueField::gradient(const HForm& f, const Point& p) const {
  return {evaluate(partial(f, Var::X), p), evaluate(partial(f, Var::Y), p), evaluate(partial(f, Var::Z), p)};
}

ResidueField::Point ResidueField::cross(const Point& a, const Point& b) const {
  return {sub(mul(a[1], b[2]), mul(a[2], b[1])), sub(mul(a[2], b[0]), mul(a[0], b[2])),
          sub(mul(a[0], b[1]), mul(a[1], b[0]))};
}

ResidueField::Point ResidueField::scale(const Elem& c, const Point& p) const {
  return {mul(c, p[0]), mul(c, p[1]), mul(c, p[2])};
}

bool ResidueField::is_zero_point(const Point& p) const {
  return p[0].is_zero() && p[1].is_zero() && p[2].is_zero();
}

void trim(FieldPoly& p) {
  while (!p.empty() && p.back().is_zero()) p.pop_back();
}

FieldPoly field_gcd(const ResidueField& k, FieldPoly a, FieldPoly b) {
  trim(a);
  trim(b);
  auto monic = [&](FieldPoly& p) {
    if (p.empty()) return;
    auto inv = k.inverse(p.back());
    for (auto& c : p) c = k.mul(c, inv);
  };
  auto rem = [&](FieldPoly x, const FieldPoly& y) {
    // y is monic
    while (x.size() >= y.size() && !x.empty()) {
      auto q = x.back();
      std::size_t shift = x.size() - y.size();
      for (std::size_t j = 0; j < y.size(); ++j) x[shift + j] = k.sub(x[shift + j], k.mul(q, y[j]));
      trim(x);
    }
    return x;
  };
  monic(a);
  monic(b);
  while (!b.empty()) {
    FieldPoly r = rem(a, b);
    monic(r);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

}  // namespace mcurve
