#ifndef FLATBAND_GRAPH_HPP
#define FLATBAND_GRAPH_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "flatband/rational.hpp"

namespace flatband {

/// Integer translation vector in Z^d.
using Offset = std::vector<std::int64_t>;

/// Orbit indices are 0-based here; file formats and reports are 1-based.
using Orbit = int;

class GraphError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// The Z^d-orbit of the edges {(i + b, j + offset + b) : b in Z^d}.
/// Stored canonically: i < j, or i == j with a lexicographically positive
/// offset.
struct EdgeClass {
  Orbit i = 0;
  Orbit j = 0;
  Offset offset;

  bool is_self_orbit() const { return i == j; }

  friend auto operator<=>(const EdgeClass&, const EdgeClass&) = default;
  friend bool operator==(const EdgeClass&, const EdgeClass&) = default;
};

std::string to_string(const EdgeClass& e);  // 1-based, e.g. "(1,2,(0,-1))"
std::string offset_to_string(std::span<const std::int64_t> a);

bool is_zero(std::span<const std::int64_t> a);
Offset negated(std::span<const std::int64_t> a);

/// Canonical representative of {(i, j, a), (j, i, -a)}. Rejects the
/// zero-offset self-loop.
EdgeClass canonicalize_edge(Orbit i, Orbit j, std::span<const std::int64_t> a);

/// Fundamental-domain description of a Z^d-periodic graph.
class PeriodicGraph {
public:
  /// Canonicalizes every edge. Duplicate classes (after canonicalization),
  /// out-of-range orbits and offsets of the wrong length are rejected.
  PeriodicGraph(int dimension, int num_orbits, std::vector<EdgeClass> edges);

  int dimension() const { return dimension_; }
  int num_orbits() const { return num_orbits_; }

  /// Sorted canonical edge classes.
  const std::vector<EdgeClass>& edge_classes() const { return edges_; }

  /// Position of a class in edge_classes(), after canonicalizing it.
  std::optional<std::size_t> find_class(Orbit i, Orbit j, std::span<const std::int64_t> a) const;

  friend bool operator==(const PeriodicGraph&, const PeriodicGraph&) = default;

private:
  int dimension_;
  int num_orbits_;
  std::vector<EdgeClass> edges_;
};

/// Potentials v_1..v_n and one weight per canonical edge class, aligned
/// with PeriodicGraph::edge_classes().
struct Labeling {
  std::vector<Rational> potentials;
  std::vector<Rational> weights;

  /// Throws GraphError if sizes do not match `g`, or if a weight is zero
  /// and `allow_zero_weights` is false (a zero weight deletes the edge).
  void validate(const PeriodicGraph& g, bool allow_zero_weights = false) const;

  bool has_zero_weight() const;
};

/// Potentials and weights drawn from `sampler`; weights are nonzero.
Labeling random_labeling(const PeriodicGraph& g, RationalSampler& sampler);

/// Quotient multigraph and its simplification.
struct QuotientGraph {
  int num_vertices = 0;
  std::vector<EdgeClass> multi_edges;
  /// Pairs (i, j), i < j, joined by at least one class; self-orbit classes
  /// are dropped.
  std::set<std::pair<Orbit, Orbit>> simple_edges;
};

QuotientGraph quotient_graph(const PeriodicGraph& g);

/// True when the simplified quotient graph is connected and every edge is
/// a bridge, i.e. it is a tree.
bool quotient_is_tree(const PeriodicGraph& g);

/// Offsets a such that some class joins an orbit of U to an orbit of U + a.
/// Each class inside U contributes a and -a. Rejects empty U.
std::set<Offset> support_of_subset(const PeriodicGraph& g, std::span<const Orbit> subset);

/// True when the support of `subset` is empty or {0}.
bool has_support_zero(const PeriodicGraph& g, std::span<const Orbit> subset);

/// Connected components of the quotient multigraph, each sorted, ordered
/// by smallest member.
std::vector<std::vector<Orbit>> components(const PeriodicGraph& g);

struct InducedGraph {
  PeriodicGraph graph;
  /// New orbit index -> orbit in the parent graph.
  std::vector<Orbit> parent_orbit;
  /// New class index -> class index in the parent graph.
  std::vector<std::size_t> parent_class;
};

/// Γ_U: keeps the classes with both ends in U and relabels orbits in
/// increasing order. Rejects empty U.
InducedGraph induced_subgraph(const PeriodicGraph& g, std::span<const Orbit> subset);

/// The labeling of Γ_U induced by `lab`.
Labeling induced_labeling(const InducedGraph& sub, const Labeling& lab);

/// Per-orbit translations a_u defining the fundamental domain {u + a_u}.
using ShiftAssignment = std::map<Orbit, Offset>;

/// Rewrites `g` for the fundamental domain {u + a_u}: class (i, j, a)
/// becomes (i, j, a + a_i - a_j). Orbits missing from `shifts` keep a_u = 0.
PeriodicGraph refit(const PeriodicGraph& g, const ShiftAssignment& shifts);

/// Labeling of refit(g, shifts); weights follow their classes.
Labeling refit_labeling(const PeriodicGraph& g, const Labeling& lab, const ShiftAssignment& shifts);

struct Support0Component {
  std::vector<Orbit> orbits;
  ShiftAssignment shifts;
};

/// Zero-monodromy test for one component: a spanning tree fixes the shifts
/// and every remaining class must then close up with offset zero.
std::optional<ShiftAssignment> zero_monodromy_shifts(const PeriodicGraph& g, std::span<const Orbit> component);

/// First quotient component that becomes support 0 after refitting, with
/// its shifts; empty when no such component exists.
std::optional<Support0Component> find_support0_component(const PeriodicGraph& g);

/// True when every quotient component passes the zero-monodromy test, so
/// a fundamental domain of support 0 exists.
bool has_support0_fundamental_domain(const PeriodicGraph& g);

/// Shifts for a full support-0 fundamental domain, if one exists.
std::optional<ShiftAssignment> support0_fundamental_domain(const PeriodicGraph& g);

}  // namespace flatband

#endif
