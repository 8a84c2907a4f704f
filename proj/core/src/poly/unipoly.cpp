#include "mcurve/poly/unipoly.hpp"

#include <sstream>

#include "mcurve/error.hpp"

namespace mcurve {

UniPoly::UniPoly(std::initializer_list<Rational> coeffs) : coeffs_(coeffs) { trim(); }

UniPoly::UniPoly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

UniPoly UniPoly::monomial(int n, const Rational& c) {
  std::vector<Rational> v(static_cast<std::size_t>(n) + 1);
  v[n] = c;
  return UniPoly(std::move(v));
}

void UniPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Rational UniPoly::coeff(int i) const {
  if (i < 0 || i > degree()) return 0;
  return coeffs_[i];
}

Rational UniPoly::evaluate(const Rational& s) const {
  Rational acc = 0;
  for (int i = degree(); i >= 0; --i) acc = acc * s + coeffs_[i];
  return acc;
}

UniPoly UniPoly::derivative() const {
  if (degree() < 1) return {};
  std::vector<Rational> d(coeffs_.size() - 1);
  for (std::size_t i = 1; i < coeffs_.size(); ++i) d[i - 1] = coeffs_[i] * static_cast<long>(i);
  return UniPoly(std::move(d));
}

UniPoly UniPoly::monic() const {
  if (is_zero()) return *this;
  Rational inv = 1 / leading();
  return inv * *this;
}

UniPoly UniPoly::primitive() const {
  if (is_zero()) return *this;
  Integer den_lcm = 1;
  for (const auto& c : coeffs_) mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den_mpz_t());
  Integer g = 0;
  std::vector<Integer> scaled;
  for (const auto& c : coeffs_) {
    scaled.push_back(c.get_num() * (den_lcm / c.get_den()));
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), scaled.back().get_mpz_t());
  }
  if (leading() < 0) g = -g;
  std::vector<Rational> out;
  for (const auto& s : scaled) out.emplace_back(Integer(s / g));
  return UniPoly(std::move(out));
}

std::string UniPoly::to_string(char var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    const Rational& c = coeffs_[i];
    if (c == 0) continue;
    Rational mag = abs(c);
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (i == 0 || mag != 1) {
      os << mag.get_str();
      if (i > 0) os << "*";
    }
    if (i > 0) os << var;
    if (i > 1) os << "^" << i;
  }
  return os.str();
}

UniPoly UniPoly::operator-() const {
  UniPoly out = *this;
  for (auto& c : out.coeffs_) c = -c;
  return out;
}

UniPoly operator+(const UniPoly& a, const UniPoly& b) {
  std::vector<Rational> v(std::max(a.coeffs().size(), b.coeffs().size()));
  for (std::size_t i = 0; i < a.coeffs().size(); ++i) v[i] += a.coeffs()[i];
  for (std::size_t i = 0; i < b.coeffs().size(); ++i) v[i] += b.coeffs()[i];
  return UniPoly(std::move(v));
}

UniPoly operator-(const UniPoly& a, const UniPoly& b) { return a + (-b); }

UniPoly operator*(const UniPoly& a, const UniPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> v(a.coeffs().size() + b.coeffs().size() - 1);
  for (std::size_t i = 0; i < a.coeffs().size(); ++i) {
    if (a.coeffs()[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs().size(); ++j) v[i + j] += a.coeffs()[i] * b.coeffs()[j];
  }
  return UniPoly(std::move(v));
}

UniPoly operator*(const Rational& c, const UniPoly& a) {
  std::vector<Rational> v = a.coeffs();
  for (auto& x : v) x *= c;
  return UniPoly(std::move(v));
}

std::pair<UniPoly, UniPoly> divmod(const UniPoly& a, const UniPoly& b) {
  if (b.is_zero()) throw Error(ErrorKind::InvalidArgument, "division by zero polynomial");
  if (a.degree() < b.degree()) return {UniPoly{}, a};
  std::vector<Rational> rem = a.coeffs();
  std::vector<Rational> quo(static_cast<std::size_t>(a.degree() - b.degree()) + 1);
  const Rational inv = 1 / b.leading();
  for (int i = a.degree(); i >= b.degree(); --i) {
    if (rem[i] == 0) continue;
    Rational q = rem[i] * inv;
    quo[i - b.degree()] = q;
    for (int j = 0; j <= b.degree(); ++j) rem[i - b.degree() + j] -= q * b.coeffs()[j];
  }
  return {UniPoly(std::move(quo)), UniPoly(std::move(rem))};
}

UniPoly operator%(const UniPoly& a, const UniPoly& b) { return divmod(a, b).second; }

UniPoly exact_div(const UniPoly& a, const UniPoly& b) {
  auto [q, r] = divmod(a, b);
  if (!r.is_zero()) throw Error(ErrorKind::InternalInconsistency, "inexact polynomial division");
  return q;
}

UniPoly gcd_uni(const UniPoly& a, const UniPoly& b) {
  if (a.is_zero() && b.is_zero()) throw Error(ErrorKind::InvalidArgument, "gcd of two zero polynomials");
  UniPoly x = a.monic(), y = b.monic();
  while (!y.is_zero()) {
    UniPoly r = (x % y).monic();
    x = std::move(y);
    y = std::move(r);
  }
  return x.monic();
}

ExtendedGcd extended_gcd(const UniPoly& a, const UniPoly& b) {
  if (a.is_zero() && b.is_zero()) throw Error(ErrorKind::InvalidArgument, "gcd of two zero polynomials");
  UniPoly r0 = a, r1 = b;
  UniPoly s0 = UniPoly::constant(1), s1;
  UniPoly t0, t1 = UniPoly::constant(1);
  while (!r1.is_zero()) {
    auto [q, r] = divmod(r0, r1);
    r0 = std::move(r1);
    r1 = std::move(r);
    UniPoly s = s0 - q * s1;
    s0 = std::move(s1);
    s1 = std::move(s);
    UniPoly t = t0 - q * t1;
    t0 = std::move(t1);
    t1 = std::move(t);
  }
  Rational inv = 1 / r0.leading();
  return {inv * r0, inv * s0, inv * t0};
}

std::vector<std::pair<UniPoly, int>> squarefree_decomposition(const UniPoly& a) {
  std::vector<std::pair<UniPoly, int>> out;
  if (a.degree() < 1) return out;
  UniPoly f = a.monic();
  UniPoly fp = f.derivative();
  UniPoly g = gcd_uni(f, fp);
  UniPoly w = exact_div(f, g).monic();
  UniPoly y = exact_div(fp, g);
  int i = 1;
  while (w.degree() >= 1) {
    UniPoly z = y - w.derivative();
    UniPoly h = z.is_zero() ? w : gcd_uni(w, z);
    if (h.degree() >= 1) out.emplace_back(h, i);
    UniPoly w_next = exact_div(w, h).monic();
    y = z.is_zero() ? UniPoly{} : exact_div(z, h);
    w = std::move(w_next);
    ++i;
  }
  return out;
}

}  // namespace mcurve
