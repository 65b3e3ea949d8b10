#ifndef FLATBAND_RATIONAL_HPP
#define FLATBAND_RATIONAL_HPP

#include <cstdint>
#include <random>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace flatband {

using Integer = mpz_class;
using Rational = mpq_class;

/// Parses "p/q" or "p" (optional leading sign). Throws std::invalid_argument
/// on malformed text or a zero denominator. The result is canonical.
Rational parse_rational(std::string_view text);

/// Canonical "p/q" text, or "p" when the denominator is 1.
std::string to_string(const Rational& q);

/// Nearest double; used only by the numeric cross-check.
double to_double(const Rational& q);

/// Random rationals with numerator in [-numerator_bound, numerator_bound]
/// and denominator in [1, denominator_bound].
class RationalSampler {
public:
  static constexpr std::int64_t kNumeratorBound = 10000;
  static constexpr std::int64_t kDenominatorBound = 100;

  explicit RationalSampler(std::uint64_t seed) : rng_(seed) {}
  RationalSampler(std::uint64_t seed, std::uint64_t stream);

  Rational any();
  Rational nonzero();

  std::mt19937_64& engine() { return rng_; }

private:
  std::mt19937_64 rng_;
};

/// Seed for trial `index` of a run seeded with `seed`; independent of
/// how many values earlier trials consumed.
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index);

}  // namespace flatband

#endif
