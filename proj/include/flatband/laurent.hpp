#ifndef FLATBAND_LAURENT_HPP
#define FLATBAND_LAURENT_HPP

#include <cstdint>
#include <map>
#include <set>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "flatband/rational.hpp"
#include "flatband/upoly.hpp"

namespace flatband {

/// Exponent vector (a_1, ..., a_d, b): z-exponents followed by the
/// λ-exponent, matching points of the Newton polytope in Z^d x Z.
using Exponent = std::vector<std::int64_t>;

/// Deterministic term order: λ-exponent first, then the z-exponents,
/// lexicographically. It is a group order on Z^(d+1), which exact division
/// relies on.
struct TermOrder {
  bool operator()(const Exponent& x, const Exponent& y) const;
};

using Support = std::set<Exponent, TermOrder>;

class AlgebraError : public std::domain_error {
public:
  using std::domain_error::domain_error;
};

/// Linear functional on Z^(d+1); the last entry weights λ.
struct WeightVector {
  std::vector<std::int64_t> values;

  std::int64_t dot(std::span<const std::int64_t> p) const;
  bool is_zero() const;
  friend auto operator<=>(const WeightVector&, const WeightVector&) = default;
};

/// Sparse Laurent polynomial in z_1..z_d and polynomial in λ, with exact
/// rational coefficients. Zero coefficients are never stored.
class LaurentPoly {
public:
  using Terms = std::map<Exponent, Rational, TermOrder>;

  explicit LaurentPoly(int dimension = 0) : dim_(dimension) {}

  static LaurentPoly constant(int dimension, const Rational& c);
  /// c * z^a * λ^b
  static LaurentPoly monomial(int dimension, std::span<const std::int64_t> z_exponents, std::int64_t lambda_exponent,
                              const Rational& c);
  static LaurentPoly lambda(int dimension);

  int dimension() const { return dim_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t num_terms() const { return terms_.size(); }

  Rational coefficient(const Exponent& e) const;
  /// Adds c to the coefficient of e, dropping it if it cancels.
  void add_term(Exponent e, const Rational& c);

  /// Highest λ power present; -1 for zero.
  std::int64_t lambda_degree() const;
  bool is_z_free() const;

  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  LaurentPoly& operator*=(const Rational& c);
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator-(LaurentPoly a);
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  friend LaurentPoly operator*(LaurentPoly a, const Rational& c) { return a *= c; }
  friend LaurentPoly operator*(const Rational& c, LaurentPoly a) { return a *= c; }

  friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;

  /// Terms in ascending term order with explicit exponents, e.g.
  /// "-1*lambda^3 + 4*lambda^1 + 1*z1^-1*lambda^1". "0" for zero.
  std::string to_string() const;

private:
  void check_same_dimension(const LaurentPoly& o) const;

  int dim_;
  Terms terms_;
};

/// The exponent set of `f`; empty for zero.
Support support(const LaurentPoly& f);

/// Sum of the terms of `f` minimizing w·(a, b). Rejects the zero polynomial.
LaurentPoly facial_polynomial(const LaurentPoly& f, const WeightVector& w);

/// Terms of `f` with w·(a, b) equal to `level`, used when the face is fixed
/// by a support other than f's own.
LaurentPoly terms_at_level(const LaurentPoly& f, const WeightVector& w, std::int64_t level);

/// The z-Laurent coefficient of λ^b.
LaurentPoly coefficient_in_lambda(const LaurentPoly& f, std::int64_t b);

/// f(z, λ0).
LaurentPoly substitute_lambda(const LaurentPoly& f, const Rational& lambda0);

/// f(z0, λ) as a univariate polynomial; z0 must have nonzero entries.
UPoly evaluate_z(const LaurentPoly& f, std::span<const Rational> z0);

/// A z-free polynomial as a univariate polynomial in λ.
UPoly to_univariate(const LaurentPoly& f);

/// g with (λ - λ0) * g = f. Throws AlgebraError "not a root" if f(z, λ0) != 0.
LaurentPoly divide_by_linear(const LaurentPoly& f, const Rational& lambda0);

/// q with q * g = f exactly, by leading-term division in the term order.
/// Throws AlgebraError when g does not divide f.
LaurentPoly exact_divide(const LaurentPoly& f, const LaurentPoly& g);

/// Square matrix of Laurent polynomials sharing one dimension.
class LaurentMatrix {
public:
  LaurentMatrix(int size, int dimension);

  int size() const { return n_; }
  int dimension() const { return dim_; }
  LaurentPoly& at(int i, int j) { return entries_.at(static_cast<std::size_t>(i) * n_ + j); }
  const LaurentPoly& at(int i, int j) const { return entries_.at(static_cast<std::size_t>(i) * n_ + j); }

  /// M - λ I
  LaurentMatrix minus_lambda_identity() const;

  friend bool operator==(const LaurentMatrix&, const LaurentMatrix&) = default;

private:
  int n_;
  int dim_;
  std::vector<LaurentPoly> entries_;
};

/// Sum over permutations of signed entry products.
LaurentPoly determinant_leibniz(const LaurentMatrix& m);

/// Fraction-free (Bareiss) elimination with exact Laurent division.
LaurentPoly determinant_bareiss(const LaurentMatrix& m);

/// Leibniz for n <= 6, Bareiss above.
LaurentPoly determinant(const LaurentMatrix& m);

}  // namespace flatband

#endif
