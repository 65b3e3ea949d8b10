#ifndef FLATBAND_POLYTOPE_HPP
#define FLATBAND_POLYTOPE_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

#include "flatband/floquet.hpp"
#include "flatband/graph.hpp"
#include "flatband/laurent.hpp"

namespace flatband {

class UnsupportedDimension : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// A face of a Newton polytope cut out by a weight vector with zero
/// λ-weight: all points minimizing w·p, at level m.
struct FaceDescriptor {
  WeightVector w;
  std::int64_t m = 0;
  std::vector<Exponent> members;
  /// Two members share their z-part but differ in λ.
  bool vertical = false;
  /// The face is not the whole polytope.
  bool proper = true;
};

struct NewtonPolytopeData {
  int dimension = 0;  // d + 1
  std::vector<Exponent> support_points;
  std::vector<Exponent> hull_vertices;
  /// Faces with normal (w', 0), from the hull of the z-projection. Only
  /// filled for d <= 2; `faces_computed` records whether they were.
  std::vector<FaceDescriptor> face_descriptors;
  bool faces_computed = false;
};

NewtonPolytopeData newton_polytope(const Support& s, int d);

/// Union of dispersion supports over `trials` random labelings; trial t
/// draws from RationalSampler(seed, t).
struct GenericSupportEstimate {
  int trials = 0;
  std::uint64_t seed = 0;
  Support points;
};

inline constexpr int kDefaultTrials = 5;

GenericSupportEstimate generic_support(const PeriodicGraph& g, int trials = kDefaultTrials, std::uint64_t seed = 0);

/// Exact generic support from symbolic_dispersion(); limited to n <= 4.
Support symbolic_generic_support(const PeriodicGraph& g);

/// Every point has zero z-part.
bool is_vertical_segment(const Support& s);

/// All faces of hull(s) with normal (w', 0) whose projection is a proper
/// face of the projected hull (interval ends for d = 1; polygon vertices and
/// edges for d = 2), ordered counter-clockwise from the lexicographically
/// smallest projected vertex.
std::vector<FaceDescriptor> projected_faces(const Support& s, int d);

/// The proper vertical faces among projected_faces(). Throws
/// UnsupportedDimension for d > 2 and std::invalid_argument for a vertical
/// segment.
std::vector<FaceDescriptor> vertical_faces(const Support& s, int d);

/// Face of `generic` cut out by w, or std::invalid_argument if w does not
/// identify a proper vertical face.
FaceDescriptor proper_vertical_face(const Support& generic, const WeightVector& w);

/// An orbit i such that the facial polynomial D_w does not depend on v_i.
/// D is affine in each v_i, so two draws of v_i with the other labels fixed
/// decide it exactly. Empty means no such orbit was found.
std::optional<Orbit> facial_independence_witness(const PeriodicGraph& g, const Support& generic,
                                                 const WeightVector& w, RationalSampler& sampler);

/// Π_i (L(z) - λI)_{i, σ(i)} for a permutation given as images.
LaurentPoly permutation_product(const FloquetMatrix& f, std::span<const int> sigma);

/// support(σD) ⊆ generic.
bool sigma_support_check(const FloquetMatrix& f, std::span<const int> sigma, const Support& generic);

}  // namespace flatband

#endif
