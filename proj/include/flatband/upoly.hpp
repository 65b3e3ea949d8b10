#ifndef FLATBAND_UPOLY_HPP
#define FLATBAND_UPOLY_HPP

#include <string>
#include <utility>
#include <vector>

#include "flatband/rational.hpp"

namespace flatband {

/// Dense univariate polynomial over Q in λ, coefficients stored from the
/// constant term up. The zero polynomial has no coefficients.
class UPoly {
public:
  UPoly() = default;
  explicit UPoly(std::vector<Rational> coefficients);

  static UPoly constant(const Rational& c);
  /// λ - root
  static UPoly linear(const Rational& root);

  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  const std::vector<Rational>& coefficients() const { return coeffs_; }
  Rational coefficient(int k) const;
  const Rational& leading() const { return coeffs_.back(); }

  Rational evaluate(const Rational& x) const;
  UPoly derivative() const;
  UPoly monic() const;

  UPoly& operator+=(const UPoly& o);
  UPoly& operator-=(const UPoly& o);
  friend UPoly operator+(UPoly a, const UPoly& b) { return a += b; }
  friend UPoly operator-(UPoly a, const UPoly& b) { return a -= b; }
  friend UPoly operator*(const UPoly& a, const UPoly& b);
  friend UPoly operator*(UPoly a, const Rational& c);
  friend UPoly operator-(UPoly a);

  friend bool operator==(const UPoly&, const UPoly&) = default;

  /// "c0 + c1*lambda^1 + ..." in ascending order; "0" for zero.
  std::string to_string(const std::string& var = "lambda") const;

private:
  void trim();
  std::vector<Rational> coeffs_;
};

/// Quotient and remainder; throws std::domain_error for a zero divisor.
std::pair<UPoly, UPoly> divmod(const UPoly& a, const UPoly& b);

/// Integer coefficient vector with gcd 1 and positive leading coefficient,
/// proportional to `p` (which must be nonzero).
std::vector<Integer> primitive_part(const UPoly& p);

/// Monic gcd computed on primitive parts with pseudo-remainders; gcd(0, 0)
/// is 0.
UPoly gcd(const UPoly& a, const UPoly& b);

/// Yun's decomposition: p = c * Π f_k^k with each f_k monic and square-free.
/// Returned as (f_k, k) for the nonconstant f_k.
std::vector<std::pair<UPoly, int>> square_free_decomposition(const UPoly& p);

struct RationalRoot {
  Rational value;
  int multiplicity = 0;
  friend bool operator==(const RationalRoot&, const RationalRoot&) = default;
};

/// All rational roots with multiplicity, ascending. Real roots are isolated
/// with Sturm sequences and each isolating interval is narrowed until it can
/// hold at most one rational whose denominator divides the leading
/// coefficient; the simplest rational in it is then checked exactly.
std::vector<RationalRoot> rational_roots(const UPoly& p);

/// Number of distinct real roots in (a, b].
int count_real_roots(const UPoly& p, const Rational& a, const Rational& b);

/// Rational with the smallest denominator in [lo, hi].
Rational simplest_rational_between(const Rational& lo, const Rational& hi);

}  // namespace flatband

#endif
