#include "flatband/laurent.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <sstream>

namespace flatband {

bool TermOrder::operator()(const Exponent& x, const Exponent& y) const {
  if (x.back() != y.back()) return x.back() < y.back();
  return std::lexicographical_compare(x.begin(), x.end() - 1, y.begin(), y.end() - 1);
}

std::int64_t WeightVector::dot(std::span<const std::int64_t> p) const {
  if (p.size() != values.size()) throw AlgebraError("weight vector length does not match exponent length");
  std::int64_t s = 0;
  for (std::size_t k = 0; k < p.size(); ++k) s += values[k] * p[k];
  return s;
}

bool WeightVector::is_zero() const {
  return std::all_of(values.begin(), values.end(), [](auto x) { return x == 0; });
}

LaurentPoly LaurentPoly::constant(int dimension, const Rational& c) {
  LaurentPoly p(dimension);
  p.add_term(Exponent(dimension + 1, 0), c);
  return p;
}

LaurentPoly LaurentPoly::monomial(int dimension, std::span<const std::int64_t> z_exponents,
                                  std::int64_t lambda_exponent, const Rational& c) {
  if (static_cast<int>(z_exponents.size()) != dimension) throw AlgebraError("monomial has wrong number of z-exponents");
  if (lambda_exponent < 0) throw AlgebraError("negative λ-exponent");
  Exponent e(z_exponents.begin(), z_exponents.end());
  e.push_back(lambda_exponent);
  LaurentPoly p(dimension);
  p.add_term(std::move(e), c);
  return p;
}

LaurentPoly LaurentPoly::lambda(int dimension) {
  return monomial(dimension, Exponent(dimension, 0), 1, 1);
}

Rational LaurentPoly::coefficient(const Exponent& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Rational(0) : it->second;
}

void LaurentPoly::add_term(Exponent e, const Rational& c) {
  if (static_cast<int>(e.size()) != dim_ + 1) throw AlgebraError("exponent has wrong length");
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(std::move(e), c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

std::int64_t LaurentPoly::lambda_degree() const {
  std::int64_t deg = -1;
  for (const auto& [e, c] : terms_) deg = std::max(deg, e.back());
  return deg;
}

bool LaurentPoly::is_z_free() const {
  return std::all_of(terms_.begin(), terms_.end(),
                     [](const auto& t) { return std::all_of(t.first.begin(), t.first.end() - 1, [](auto x) { return x == 0; }); });
}

void LaurentPoly::check_same_dimension(const LaurentPoly& o) const {
  if (dim_ != o.dim_) {
    throw AlgebraError("dimension mismatch: " + std::to_string(dim_) + " vs " + std::to_string(o.dim_));
  }
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  check_same_dimension(o);
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
  check_same_dimension(o);
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

LaurentPoly& LaurentPoly::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, x] : terms_) x *= c;
  return *this;
}

LaurentPoly operator-(LaurentPoly a) {
  for (auto& [e, c] : a.terms_) c = -c;
  return a;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  a.check_same_dimension(b);
  LaurentPoly out(a.dim_);
  Exponent e(a.dim_ + 1);
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      for (std::size_t k = 0; k < e.size(); ++k) e[k] = ea[k] + eb[k];
      auto [it, inserted] = out.terms_.try_emplace(e, ca * cb);
      if (!inserted) it->second += ca * cb;
    }
  }
  std::erase_if(out.terms_, [](const auto& t) { return t.second == 0; });
  return out;
}

std::string LaurentPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    Rational shown = c;
    if (!first) {
      os << (c < 0 ? " - " : " + ");
      shown = abs(c);
    }
    os << flatband::to_string(shown);
    for (int k = 0; k < dim_; ++k) {
      if (e[k] != 0) os << "*z" << (k + 1) << '^' << e[k];
    }
    if (e.back() != 0) os << "*lambda^" << e.back();
    first = false;
  }
  return os.str();
}

Support support(const LaurentPoly& f) {
  Support s;
  for (const auto& [e, c] : f.terms()) s.insert(e);
  return s;
}

LaurentPoly terms_at_level(const LaurentPoly& f, const WeightVector& w, std::int64_t level) {
  LaurentPoly out(f.dimension());
  for (const auto& [e, c] : f.terms()) {
    if (w.dot(e) == level) out.add_term(e, c);
  }
  return out;
}

LaurentPoly facial_polynomial(const LaurentPoly& f, const WeightVector& w) {
  if (f.is_zero()) throw AlgebraError("facial polynomial of the zero polynomial");
  std::int64_t m = std::numeric_limits<std::int64_t>::max();
  for (const auto& [e, c] : f.terms()) m = std::min(m, w.dot(e));
  return terms_at_level(f, w, m);
}

LaurentPoly coefficient_in_lambda(const LaurentPoly& f, std::int64_t b) {
  LaurentPoly out(f.dimension());
  for (const auto& [e, c] : f.terms()) {
    if (e.back() != b) continue;
    Exponent z = e;
    z.back() = 0;
    out.add_term(std::move(z), c);
  }
  return out;
}

namespace {

Rational power(const Rational& x, std::int64_t k) {
  Rational base = k < 0 ? Rational(1 / x) : x;
  unsigned long e = static_cast<unsigned long>(k < 0 ? -k : k);
  Integer num, den;
  mpz_pow_ui(num.get_mpz_t(), base.get_num_mpz_t(), e);
  mpz_pow_ui(den.get_mpz_t(), base.get_den_mpz_t(), e);
  Rational r(num, den);
  r.canonicalize();
  return r;
}

}  // namespace

LaurentPoly substitute_lambda(const LaurentPoly& f, const Rational& lambda0) {
  LaurentPoly out(f.dimension());
  for (const auto& [e, c] : f.terms()) {
    Exponent z = e;
    z.back() = 0;
    out.add_term(std::move(z), c * power(lambda0, e.back()));
  }
  return out;
}

UPoly evaluate_z(const LaurentPoly& f, std::span<const Rational> z0) {
  if (static_cast<int>(z0.size()) != f.dimension()) throw AlgebraError("evaluation point has wrong dimension");
  for (const auto& x : z0) {
    if (x == 0) throw AlgebraError("evaluation point must have nonzero coordinates");
  }
  std::vector<Rational> c(std::max<std::int64_t>(f.lambda_degree() + 1, 0));
  for (const auto& [e, coef] : f.terms()) {
    Rational t = coef;
    for (int k = 0; k < f.dimension(); ++k) t *= power(z0[k], e[k]);
    c[e.back()] += t;
  }
  return UPoly(std::move(c));
}

UPoly to_univariate(const LaurentPoly& f) {
  if (!f.is_z_free()) throw AlgebraError("polynomial depends on z");
  std::vector<Rational> c(std::max<std::int64_t>(f.lambda_degree() + 1, 0));
  for (const auto& [e, coef] : f.terms()) c[e.back()] = coef;
  return UPoly(std::move(c));
}

LaurentPoly divide_by_linear(const LaurentPoly& f, const Rational& lambda0) {
  if (!substitute_lambda(f, lambda0).is_zero()) {
    throw AlgebraError("not a root: λ0 = " + to_string(lambda0));
  }
  // Synthetic division over the z-coefficient ring, top λ-degree down:
  // q_{b-1} = c_b + λ0 q_b.
  const std::int64_t deg = f.lambda_degree();
  LaurentPoly out(f.dimension());
  LaurentPoly carry(f.dimension());
  for (std::int64_t b = deg; b >= 1; --b) {
    carry = coefficient_in_lambda(f, b) + carry * lambda0;
    for (const auto& [e, c] : carry.terms()) {
      Exponent x = e;
      x.back() = b - 1;
      out.add_term(std::move(x), c);
    }
  }
  return out;
}

LaurentPoly exact_divide(const LaurentPoly& f, const LaurentPoly& g) {
  if (f.dimension() != g.dimension()) throw AlgebraError("dimension mismatch in division");
  if (g.is_zero()) throw AlgebraError("division by zero polynomial");
  LaurentPoly q(f.dimension());
  if (f.is_zero()) return q;

  // Each coordinate range of the quotient is range(f) - range(g), which
  // bounds the candidates and guarantees termination.
  const std::size_t len = static_cast<std::size_t>(f.dimension()) + 1;
  auto ranges = [len](const LaurentPoly& p) {
    std::vector<std::pair<std::int64_t, std::int64_t>> r(len, {std::numeric_limits<std::int64_t>::max(),
                                                               std::numeric_limits<std::int64_t>::min()});
    for (const auto& [e, c] : p.terms()) {
      for (std::size_t k = 0; k < len; ++k) {
        r[k].first = std::min(r[k].first, e[k]);
        r[k].second = std::max(r[k].second, e[k]);
      }
    }
    return r;
  };
  const auto rf = ranges(f);
  const auto rg = ranges(g);

  const auto& [g_lead, g_coef] = *g.terms().rbegin();
  LaurentPoly r = f;
  while (!r.is_zero()) {
    const auto& [r_lead, r_coef] = *r.terms().rbegin();
    Exponent t(len);
    for (std::size_t k = 0; k < len; ++k) {
      t[k] = r_lead[k] - g_lead[k];
      if (t[k] < rf[k].first - rg[k].first || t[k] > rf[k].second - rg[k].second) {
        throw AlgebraError("polynomial is not divisible");
      }
    }
    const Rational c = r_coef / g_coef;
    LaurentPoly step(f.dimension());
    step.add_term(t, c);
    q.add_term(t, c);
    r -= step * g;
  }
  return q;
}

LaurentMatrix::LaurentMatrix(int size, int dimension)
    : n_(size), dim_(dimension), entries_(static_cast<std::size_t>(size) * size, LaurentPoly(dimension)) {
  if (size < 1) throw AlgebraError("matrix size must be positive");
}

LaurentMatrix LaurentMatrix::minus_lambda_identity() const {
  LaurentMatrix out = *this;
  for (int i = 0; i < n_; ++i) out.at(i, i) -= LaurentPoly::lambda(dim_);
  return out;
}

LaurentPoly determinant_leibniz(const LaurentMatrix& m) {
  const int n = m.size();
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  LaurentPoly det(m.dimension());
  do {
    int inversions = 0;
    for (int i = 0; i < n; ++i) {
      for (int j = i + 1; j < n; ++j) inversions += perm[i] > perm[j];
    }
    LaurentPoly term = LaurentPoly::constant(m.dimension(), inversions % 2 ? -1 : 1);
    for (int i = 0; i < n && !term.is_zero(); ++i) term = term * m.at(i, perm[i]);
    det += term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return det;
}

LaurentPoly determinant_bareiss(const LaurentMatrix& m) {
  const int n = m.size();
  LaurentMatrix a = m;
  LaurentPoly prev = LaurentPoly::constant(m.dimension(), 1);
  bool negate = false;
  for (int k = 0; k < n - 1; ++k) {
    if (a.at(k, k).is_zero()) {
      int swap_row = -1;
      for (int i = k + 1; i < n; ++i) {
        if (!a.at(i, k).is_zero()) {
          swap_row = i;
          break;
        }
      }
      if (swap_row < 0) return LaurentPoly(m.dimension());
      for (int j = 0; j < n; ++j) std::swap(a.at(k, j), a.at(swap_row, j));
      negate = !negate;
    }
    for (int i = k + 1; i < n; ++i) {
      for (int j = k + 1; j < n; ++j) {
        a.at(i, j) = exact_divide(a.at(k, k) * a.at(i, j) - a.at(i, k) * a.at(k, j), prev);
      }
      a.at(i, k) = LaurentPoly(m.dimension());
    }
    prev = a.at(k, k);
  }
  LaurentPoly det = a.at(n - 1, n - 1);
  return negate ? -det : det;
}

LaurentPoly determinant(const LaurentMatrix& m) {
  return m.size() <= 6 ? determinant_leibniz(m) : determinant_bareiss(m);
}

}  // namespace flatband
