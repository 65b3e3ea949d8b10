#ifndef FLATBAND_RANDOM_GRAPH_HPP
#define FLATBAND_RANDOM_GRAPH_HPP

#include <random>
#include <vector>

#include "flatband/graph.hpp"

namespace flatband {

struct RandomGraphOptions {
  std::vector<int> dims{1, 2};
  int max_orbits = 4;
  int max_edges = 6;
};

/// Random periodic graph with offsets in {-1, 0, 1}^d. Three draws in four
/// start from a spanning tree of the quotient so the graph is connected;
/// the rest are unconstrained and may be disconnected. Each graph also draws
/// how often an offset is zero, so support-0 components occur regularly.
PeriodicGraph random_periodic_graph(const RandomGraphOptions& opts, std::mt19937_64& rng);

struct TreeQuotientGraph {
  PeriodicGraph graph;
  /// All orbits but one; every class inside it has offset 0.
  std::vector<Orbit> support0_subset;
};

/// Random graph whose simplified quotient graph is a tree on n orbits,
/// 2 <= n <= max_orbits. Classes touching the excluded orbit get random
/// offsets and may be parallel.
TreeQuotientGraph random_tree_quotient_graph(int dimension, int max_orbits, std::mt19937_64& rng);

}  // namespace flatband

#endif
