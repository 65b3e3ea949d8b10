#include "flatband/random_graph.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace flatband {

namespace {

int uniform(std::mt19937_64& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

Offset random_offset(std::mt19937_64& rng, int d, double zero_probability) {
  if (std::bernoulli_distribution(zero_probability)(rng)) return Offset(d, 0);
  for (;;) {
    Offset a(d);
    for (auto& x : a) x = uniform(rng, -1, 1);
    if (!is_zero(a)) return a;
  }
}

}  // namespace

PeriodicGraph random_periodic_graph(const RandomGraphOptions& opts, std::mt19937_64& rng) {
  if (opts.dims.empty() || opts.max_orbits < 1 || opts.max_edges < 0) {
    throw std::invalid_argument("invalid random graph bounds");
  }
  static constexpr double kZeroBias[] = {0.0, 0.5, 0.8, 1.0};
  const int d = opts.dims[uniform(rng, 0, static_cast<int>(opts.dims.size()) - 1)];
  const int n = uniform(rng, 1, opts.max_orbits);
  const double p0 = kZeroBias[uniform(rng, 0, 3)];
  int target = uniform(rng, 0, opts.max_edges);

  std::set<EdgeClass> classes;
  auto try_add = [&](Orbit i, Orbit j, const Offset& a) {
    if (i == j && is_zero(a)) return;
    classes.insert(canonicalize_edge(i, j, a));
  };

  if (n > 1 && n - 1 <= opts.max_edges && std::bernoulli_distribution(0.75)(rng)) {
    for (Orbit v = 1; v < n; ++v) try_add(uniform(rng, 0, v - 1), v, random_offset(rng, d, p0));
    target = std::max(target, n - 1);
  }
  for (int attempt = 0; attempt < 64 && static_cast<int>(classes.size()) < target; ++attempt) {
    try_add(uniform(rng, 0, n - 1), uniform(rng, 0, n - 1), random_offset(rng, d, p0));
  }
  return PeriodicGraph(d, n, std::vector<EdgeClass>(classes.begin(), classes.end()));
}

TreeQuotientGraph random_tree_quotient_graph(int dimension, int max_orbits, std::mt19937_64& rng) {
  if (max_orbits < 2) throw std::invalid_argument("tree quotient graphs need at least two orbits");
  const int n = uniform(rng, 2, max_orbits);
  const Orbit removed = uniform(rng, 0, n - 1);
  std::set<EdgeClass> classes;
  for (Orbit v = 1; v < n; ++v) {
    const Orbit u = uniform(rng, 0, v - 1);
    const bool touches = u == removed || v == removed;
    const int copies = touches ? uniform(rng, 1, 2) : 1;
    for (int c = 0; c < copies; ++c) {
      const Offset a = touches ? random_offset(rng, dimension, 0.3) : Offset(dimension, 0);
      classes.insert(canonicalize_edge(u, v, a));
    }
  }
  std::vector<Orbit> subset;
  for (Orbit v = 0; v < n; ++v) {
    if (v != removed) subset.push_back(v);
  }
  return {PeriodicGraph(dimension, n, std::vector<EdgeClass>(classes.begin(), classes.end())), std::move(subset)};
}

}  // namespace flatband
