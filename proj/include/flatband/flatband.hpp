#ifndef FLATBAND_FLATBAND_HPP
#define FLATBAND_FLATBAND_HPP

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "flatband/graph.hpp"
#include "flatband/laurent.hpp"
#include "flatband/polytope.hpp"
#include "flatband/upoly.hpp"

namespace flatband {

class PreconditionError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

struct FlatBand {
  Rational energy;
  int multiplicity = 0;
  /// (λ - energy) divides D exactly, checked by synthetic division.
  bool verified = false;
};

/// A square-free factor of the flat-band polynomial without rational roots.
/// Every complex root is a flat band. Irreducible over Q when its degree is
/// at most 3.
struct IrrationalFactor {
  UPoly factor;
  int multiplicity = 0;
};

struct FlatBandReport {
  /// Monic g(λ): (λ - λ0) divides D exactly when g(λ0) = 0.
  UPoly flatband_poly;
  std::vector<FlatBand> rational_bands;
  std::vector<IrrationalFactor> irrational_factors;

  bool has_flat_band() const { return flatband_poly.degree() >= 1; }
  int count() const { return std::max(flatband_poly.degree(), 0); }
};

/// Writes D = Σ_a z^a p_a(λ) and takes g = gcd_a p_a over Q. Rejects input
/// whose top λ-coefficient is not ±1.
FlatBandReport flat_bands(const LaurentPoly& dispersion);

enum class GenericVerdict { kNoFlatBand, kFlatBand, kInconsistent };

const char* to_string(GenericVerdict v);

struct GenericDecision {
  GenericVerdict verdict = GenericVerdict::kNoFlatBand;
  /// Trial t uses random_labeling with RationalSampler(seed, t).
  std::vector<Labeling> labelings;
  std::vector<FlatBandReport> reports;
};

/// Unanimity over `trials` random labelings: all with flat bands, all
/// without, or inconsistent (a non-generic draw; rerun with another seed).
GenericDecision generic_flat_band_decision(const PeriodicGraph& g, int trials = kDefaultTrials,
                                           std::uint64_t seed = 0);

struct InheritanceResult {
  /// gcd of the flat-band polynomials of D and D|_{W∖{i}}.
  UPoly shared_poly;
  std::vector<Rational> shared_roots;
};

/// Flat bands shared by D and the dispersion with orbit i deleted.
InheritanceResult inheritance_check(const PeriodicGraph& g, const Labeling& lab, Orbit i);

struct VerticalSegmentWitness {
  WeightVector w;
  LaurentPoly facial;
  Offset z_exponent;
  UPoly lambda_factor;  // facial = z^a * lambda_factor(λ)
};

/// A proper face of N(D) with facial polynomial z^a p(λ), a != 0, such that
/// every flat band of D is a root of p. Requires a flat band, no support-0
/// fundamental domain and d <= 2.
std::optional<VerticalSegmentWitness> vertical_segment_face_witness(const PeriodicGraph& g, const Labeling& lab);

}  // namespace flatband

#endif
