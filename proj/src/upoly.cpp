#include "flatband/upoly.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace flatband {

UPoly::UPoly(std::vector<Rational> coefficients) : coeffs_(std::move(coefficients)) { trim(); }

UPoly UPoly::constant(const Rational& c) { return UPoly({c}); }

UPoly UPoly::linear(const Rational& root) { return UPoly({-root, Rational(1)}); }

void UPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Rational UPoly::coefficient(int k) const {
  if (k < 0 || k > degree()) return 0;
  return coeffs_[k];
}

Rational UPoly::evaluate(const Rational& x) const {
  Rational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

UPoly UPoly::derivative() const {
  std::vector<Rational> c;
  for (std::size_t k = 1; k < coeffs_.size(); ++k) c.push_back(coeffs_[k] * static_cast<long>(k));
  return UPoly(std::move(c));
}

UPoly UPoly::monic() const {
  if (is_zero()) return *this;
  return *this * Rational(1 / leading());
}

UPoly& UPoly::operator+=(const UPoly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] += o.coeffs_[k];
  trim();
  return *this;
}

UPoly& UPoly::operator-=(const UPoly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] -= o.coeffs_[k];
  trim();
  return *this;
}

UPoly operator*(const UPoly& a, const UPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> c(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return UPoly(std::move(c));
}

UPoly operator*(UPoly a, const Rational& c) {
  for (auto& x : a.coeffs_) x *= c;
  a.trim();
  return a;
}

UPoly operator-(UPoly a) {
  for (auto& x : a.coeffs_) x = -x;
  return a;
}

std::string UPoly::to_string(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    if (coeffs_[k] == 0) continue;
    Rational c = coeffs_[k];
    if (!first) {
      os << (c < 0 ? " - " : " + ");
      c = abs(c);
    }
    os << flatband::to_string(c);
    if (k > 0) os << '*' << var << '^' << k;
    first = false;
  }
  return os.str();
}

std::pair<UPoly, UPoly> divmod(const UPoly& a, const UPoly& b) {
  if (b.is_zero()) throw std::domain_error("polynomial division by zero");
  std::vector<Rational> r = a.coefficients();
  const int db = b.degree();
  if (a.degree() < db) return {UPoly(), a};
  std::vector<Rational> q(a.degree() - db + 1);
  const Rational inv = 1 / b.leading();
  for (int k = a.degree(); k >= db; --k) {
    if (r[k] == 0) continue;
    Rational c = r[k] * inv;
    q[k - db] = c;
    for (int j = 0; j <= db; ++j) r[k - db + j] -= c * b.coefficients()[j];
  }
  return {UPoly(std::move(q)), UPoly(std::move(r))};
}

std::vector<Integer> primitive_part(const UPoly& p) {
  if (p.is_zero()) throw std::domain_error("primitive part of the zero polynomial");
  Integer l = 1;
  for (const auto& c : p.coefficients()) l = lcm(l, Integer(c.get_den()));
  std::vector<Integer> out;
  Integer g = 0;
  for (const auto& c : p.coefficients()) {
    Rational scaled = c * l;
    out.push_back(scaled.get_num());
    g = gcd(g, out.back());
  }
  if (out.back() < 0) g = -g;
  for (auto& x : out) x /= g;
  return out;
}

namespace {

UPoly from_integers(const std::vector<Integer>& c) {
  std::vector<Rational> r;
  r.reserve(c.size());
  for (const auto& x : c) r.emplace_back(x);
  return UPoly(std::move(r));
}

// Pseudo-remainder of a by b over Z: lc(b)^(deg a - deg b + 1) * a mod b.
std::vector<Integer> pseudo_remainder(std::vector<Integer> a, const std::vector<Integer>& b) {
  const std::size_t db = b.size() - 1;
  const Integer& lb = b.back();
  while (a.size() >= b.size()) {
    const Integer la = a.back();
    const std::size_t shift = a.size() - b.size();
    for (auto& x : a) x *= lb;
    for (std::size_t j = 0; j <= db; ++j) a[shift + j] -= la * b[j];
    while (!a.empty() && a.back() == 0) a.pop_back();
  }
  return a;
}

std::vector<Integer> make_primitive(std::vector<Integer> a) {
  Integer g = 0;
  for (const auto& x : a) g = gcd(g, x);
  if (a.back() < 0) g = -g;
  for (auto& x : a) x /= g;
  return a;
}

}  // namespace

UPoly gcd(const UPoly& a, const UPoly& b) {
  if (a.is_zero()) return b.monic();
  if (b.is_zero()) return a.monic();
  std::vector<Integer> x = primitive_part(a);
  std::vector<Integer> y = primitive_part(b);
  if (x.size() < y.size()) std::swap(x, y);
  while (!y.empty()) {
    std::vector<Integer> r = pseudo_remainder(x, y);
    x = std::move(y);
    y = r.empty() ? std::move(r) : make_primitive(std::move(r));
  }
  return from_integers(x).monic();
}

std::vector<std::pair<UPoly, int>> square_free_decomposition(const UPoly& p) {
  std::vector<std::pair<UPoly, int>> out;
  if (p.degree() < 1) return out;
  UPoly f = p.monic();
  UPoly a = gcd(f, f.derivative());
  UPoly b = divmod(f, a).first;
  UPoly c = divmod(f.derivative(), a).first;
  UPoly d = c - b.derivative();
  for (int k = 1; b.degree() >= 1; ++k) {
    UPoly g = gcd(b, d);
    if (g.degree() >= 1) out.emplace_back(g, k);
    b = divmod(b, g).first;
    c = divmod(d, g).first;
    d = c - b.derivative();
  }
  return out;
}

namespace {

std::vector<UPoly> sturm_sequence(const UPoly& p) {
  std::vector<UPoly> seq{p, p.derivative()};
  while (!seq.back().is_zero()) {
    UPoly r = divmod(seq[seq.size() - 2], seq.back()).second;
    if (r.is_zero()) break;
    seq.push_back(-r);
  }
  return seq;
}

int sign_changes(const std::vector<UPoly>& seq, const Rational& x) {
  int changes = 0;
  int last = 0;
  for (const auto& q : seq) {
    int s = sgn(q.evaluate(x));
    if (s == 0) continue;
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  return changes;
}

Rational cauchy_bound(const UPoly& p) {
  Rational m = 0;
  for (int k = 0; k < p.degree(); ++k) m = std::max<Rational>(m, abs(p.coefficients()[k] / p.leading()));
  return m + 1;
}

}  // namespace

int count_real_roots(const UPoly& p, const Rational& a, const Rational& b) {
  if (p.degree() < 1) return 0;
  // Sturm counts distinct roots when applied to the square-free part.
  UPoly sf = divmod(p, gcd(p, p.derivative())).first;
  auto seq = sturm_sequence(sf);
  return sign_changes(seq, a) - sign_changes(seq, b);
}

Rational simplest_rational_between(const Rational& lo, const Rational& hi) {
  if (lo > hi) return simplest_rational_between(hi, lo);
  if (lo <= 0 && hi >= 0) return 0;
  if (hi < 0) return -simplest_rational_between(-hi, -lo);
  Integer fl;
  mpz_fdiv_q(fl.get_mpz_t(), lo.get_num_mpz_t(), lo.get_den_mpz_t());
  if (Rational(fl) == lo) return lo;
  if (Rational(fl + 1) <= hi) return Rational(fl + 1);
  // lo, hi in (fl, fl + 1): recurse on reciprocals of the fractional parts
  Rational r = simplest_rational_between(1 / (hi - Rational(fl)), 1 / (lo - Rational(fl)));
  Rational out = Rational(fl) + 1 / r;
  out.canonicalize();
  return out;
}

std::vector<RationalRoot> rational_roots(const UPoly& p) {
  std::vector<RationalRoot> roots;
  if (p.degree() < 1) return roots;

  UPoly sf = divmod(p, gcd(p, p.derivative())).first;
  std::vector<Rational> found;
  if (sf.evaluate(0) == 0) {
    found.push_back(0);
    sf = divmod(sf, UPoly::linear(0)).first;
  }
  if (sf.degree() >= 1) {
    const std::vector<Integer> prim = primitive_part(sf);
    const Integer lead = abs(prim.back());
    // two rationals with denominators <= lead differ by at least 1/lead^2
    const Rational target(1, 2);
    const Rational max_width = target / Rational(lead * lead);
    const auto seq = sturm_sequence(sf);
    const Rational bound = cauchy_bound(sf);

    struct Interval {
      Rational a, b;
      int va, vb;
    };
    std::vector<Interval> work{{-bound, bound, sign_changes(seq, -bound), sign_changes(seq, bound)}};
    while (!work.empty()) {
      Interval iv = work.back();
      work.pop_back();
      const int count = iv.va - iv.vb;
      if (count == 0) continue;
      if (count == 1 && iv.b - iv.a < max_width) {
        Rational c = simplest_rational_between(iv.a, iv.b);
        if (sf.evaluate(c) == 0) found.push_back(c);
        continue;
      }
      Rational mid = (iv.a + iv.b) / 2;
      if (count == 1 && sf.evaluate(iv.b) == 0) {
        found.push_back(iv.b);
        continue;
      }
      const int vm = sign_changes(seq, mid);
      work.push_back({iv.a, mid, iv.va, vm});
      work.push_back({mid, iv.b, vm, iv.vb});
    }
  }
  std::sort(found.begin(), found.end());
  found.erase(std::unique(found.begin(), found.end()), found.end());

  for (const auto& r : found) {
    int mult = 0;
    UPoly rest = p;
    for (;;) {
      auto [q, rem] = divmod(rest, UPoly::linear(r));
      if (!rem.is_zero()) break;
      rest = std::move(q);
      ++mult;
    }
    roots.push_back({r, mult});
  }
  return roots;
}

}  // namespace flatband
