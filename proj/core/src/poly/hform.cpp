#include "mcurve/poly/hform.hpp"

#include <sstream>

#include "mcurve/error.hpp"

namespace mcurve {

std::vector<Exponent> monomial_basis(int degree) {
  std::vector<Exponent> out;
  if (degree < 0) return out;
  out.reserve(basis_size(degree));
  for (int a = degree; a >= 0; --a) {
    for (int b = degree - a; b >= 0; --b) out.push_back({a, b, degree - a - b});
  }
  return out;
}

HForm::HForm(int degree) : degree_(degree) {
  if (degree < 0) throw Error(ErrorKind::InvalidArgument, "negative form degree");
}

HForm HForm::constant(const Rational& c) {
  HForm f(0);
  f.add_term({0, 0, 0}, c);
  return f;
}

HForm HForm::variable(Var v) {
  HForm f(1);
  Exponent e;
  if (v == Var::X) e.x = 1;
  if (v == Var::Y) e.y = 1;
  if (v == Var::Z) e.z = 1;
  f.add_term(e, 1);
  return f;
}

HForm HForm::monomial(Exponent e, const Rational& c) {
  HForm f(e.degree());
  f.add_term(e, c);
  return f;
}

HForm HForm::linear(const Rational& a, const Rational& b, const Rational& c) {
  HForm f(1);
  f.add_term({1, 0, 0}, a);
  f.add_term({0, 1, 0}, b);
  f.add_term({0, 0, 1}, c);
  return f;
}

HForm HForm::conic(const Rational& a, const Rational& b, const Rational& c,
                   const Rational& d, const Rational& e, const Rational& f) {
  HForm q(2);
  q.add_term({2, 0, 0}, a);
  q.add_term({0, 2, 0}, b);
  q.add_term({0, 0, 2}, c);
  q.add_term({1, 1, 0}, d);
  q.add_term({1, 0, 1}, e);
  q.add_term({0, 1, 1}, f);
  return q;
}

Rational HForm::coefficient(const Exponent& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Rational(0) : it->second;
}

void HForm::add_term(const Exponent& e, const Rational& c) {
  if (e.x < 0 || e.y < 0 || e.z < 0 || e.degree() != degree_) {
    throw Error(ErrorKind::InvalidArgument, "exponent does not match form degree");
  }
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

int HForm::degree_in(Var v) const {
  int best = -1;
  for (const auto& [e, c] : terms_) best = std::max(best, e[v]);
  return best;
}

namespace {

Rational ipow(const Rational& base, int n) {
  Rational r = 1;
  for (int i = 0; i < n; ++i) r *= base;
  return r;
}

}  // namespace

Rational HForm::evaluate(const std::array<Rational, 3>& p) const {
  Rational sum = 0;
  for (const auto& [e, c] : terms_) sum += c * ipow(p[0], e.x) * ipow(p[1], e.y) * ipow(p[2], e.z);
  return sum;
}

HForm HForm::primitive() const {
  if (is_zero()) return *this;
  Integer den_lcm = 1;
  for (const auto& [e, c] : terms_) mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den_mpz_t());
  Integer num_gcd = 0;
  for (const auto& [e, c] : terms_) {
    Integer scaled = c.get_num() * (den_lcm / c.get_den());
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), scaled.get_mpz_t());
  }
  HForm out(degree_);
  for (const auto& [e, c] : terms_) {
    Integer scaled = c.get_num() * (den_lcm / c.get_den());
    out.terms_.emplace(e, Rational(Integer(scaled / num_gcd)));
  }
  return out;
}

HForm HForm::normalized() const {
  HForm out = primitive();
  if (!out.is_zero() && out.terms_.begin()->second < 0) return -out;
  return out;
}

std::vector<Rational> HForm::dense() const {
  std::vector<Rational> v(basis_size(degree_));
  for (const auto& [e, c] : terms_) v[basis_index(e)] = c;
  return v;
}

std::string HForm::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    Rational mag = abs(c);
    bool neg = c < 0;
    if (first) {
      if (neg) os << "-";
    } else {
      os << (neg ? " - " : " + ");
    }
    first = false;
    bool unit_monomial = e.degree() == 0;
    bool need_coeff = unit_monomial || mag != 1;
    if (need_coeff) os << mag.get_str();
    bool need_star = need_coeff;
    auto put = [&](char name, int p) {
      if (p == 0) return;
      if (need_star) os << "*";
      os << name;
      if (p > 1) os << "^" << p;
      need_star = true;
    };
    put('x', e.x);
    put('y', e.y);
    put('z', e.z);
  }
  return os.str();
}

HForm HForm::operator-() const {
  HForm out = *this;
  for (auto& [e, c] : out.terms_) c = -c;
  return out;
}

HForm& HForm::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, v] : terms_) v *= c;
  return *this;
}

HForm operator+(const HForm& a, const HForm& b) {
  if (a.is_zero() && a.degree() != b.degree()) return b;
  if (b.is_zero() && a.degree() != b.degree()) return a;
  if (a.degree() != b.degree()) throw Error(ErrorKind::InvalidArgument, "adding forms of different degree");
  HForm out = a;
  for (const auto& [e, c] : b.terms()) out.add_term(e, c);
  return out;
}

HForm operator-(const HForm& a, const HForm& b) { return a + (-b); }

HForm operator*(const HForm& a, const HForm& b) {
  HForm out(a.degree() + b.degree());
  for (const auto& [ea, ca] : a.terms()) {
    for (const auto& [eb, cb] : b.terms()) out.add_term(ea + eb, ca * cb);
  }
  return out;
}

HForm operator*(const Rational& c, const HForm& f) {
  HForm out = f;
  out *= c;
  return out;
}

HForm power(const HForm& f, int n) {
  HForm out = HForm::constant(1);
  for (int i = 0; i < n; ++i) out = out * f;
  return out;
}

HForm partial(const HForm& f, Var v) {
  if (f.degree() == 0) return HForm(0);
  HForm out(f.degree() - 1);
  for (const auto& [e, c] : f.terms()) {
    int p = e[v];
    if (p == 0) continue;
    Exponent d = e;
    if (v == Var::X) d.x -= 1;
    if (v == Var::Y) d.y -= 1;
    if (v == Var::Z) d.z -= 1;
    out.add_term(d, c * p);
  }
  return out;
}

HForm substitute_linear(const HForm& f, const LinearMap& m) {
  std::array<HForm, 3> image;
  for (int i = 0; i < 3; ++i) image[i] = HForm::linear(m[i][0], m[i][1], m[i][2]);
  // Powers of the three images are reused across terms.
  std::array<std::vector<HForm>, 3> powers;
  for (int i = 0; i < 3; ++i) {
    powers[i].push_back(HForm::constant(1));
    for (int p = 1; p <= f.degree(); ++p) powers[i].push_back(powers[i].back() * image[i]);
  }
  HForm out(f.degree());
  for (const auto& [e, c] : f.terms()) {
    out = out + c * (powers[0][e.x] * powers[1][e.y] * powers[2][e.z]);
  }
  return out;
}

HForm euler_combination(const HForm& f) {
  HForm out(f.degree());
  out = out + HForm::variable(Var::X) * partial(f, Var::X);
  out = out + HForm::variable(Var::Y) * partial(f, Var::Y);
  out = out + HForm::variable(Var::Z) * partial(f, Var::Z);
  return out;
}

bool proportional(const HForm& a, const HForm& b) {
  if (a.degree() != b.degree() || a.is_zero() || b.is_zero()) return false;
  if (a.term_count() != b.term_count()) return false;
  const Rational ratio = b.terms().begin()->second / a.terms().begin()->second;
  auto ia = a.terms().begin();
  auto ib = b.terms().begin();
  for (; ia != a.terms().end(); ++ia, ++ib) {
    if (!(ia->first == ib->first) || ib->second != ratio * ia->second) return false;
  }
  return true;
}

}  // namespace mcurve
