#include "flatband/graph.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <sstream>

namespace flatband {

namespace {

bool lex_positive(std::span<const std::int64_t> a) {
  for (auto x : a) {
    if (x != 0) return x > 0;
  }
  return false;
}

Offset add(std::span<const std::int64_t> a, std::span<const std::int64_t> b) {
  Offset r(a.begin(), a.end());
  for (std::size_t k = 0; k < r.size(); ++k) r[k] += b[k];
  return r;
}

Offset sub(std::span<const std::int64_t> a, std::span<const std::int64_t> b) {
  Offset r(a.begin(), a.end());
  for (std::size_t k = 0; k < r.size(); ++k) r[k] -= b[k];
  return r;
}

std::vector<Orbit> checked_subset(const PeriodicGraph& g, std::span<const Orbit> subset) {
  if (subset.empty()) throw GraphError("orbit subset must be nonempty");
  std::vector<Orbit> u(subset.begin(), subset.end());
  std::sort(u.begin(), u.end());
  if (std::adjacent_find(u.begin(), u.end()) != u.end()) throw GraphError("orbit subset has repeated orbits");
  for (auto x : u) {
    if (x < 0 || x >= g.num_orbits()) {
      throw GraphError("orbit " + std::to_string(x + 1) + " out of range 1.." + std::to_string(g.num_orbits()));
    }
  }
  return u;
}

}  // namespace

std::string offset_to_string(std::span<const std::int64_t> a) {
  std::ostringstream os;
  os << '(';
  for (std::size_t k = 0; k < a.size(); ++k) {
    if (k) os << ',';
    os << a[k];
  }
  os << ')';
  return os.str();
}

std::string to_string(const EdgeClass& e) {
  return "(" + std::to_string(e.i + 1) + "," + std::to_string(e.j + 1) + "," + offset_to_string(e.offset) + ")";
}

bool is_zero(std::span<const std::int64_t> a) {
  return std::all_of(a.begin(), a.end(), [](auto x) { return x == 0; });
}

Offset negated(std::span<const std::int64_t> a) {
  Offset r(a.begin(), a.end());
  for (auto& x : r) x = -x;
  return r;
}

EdgeClass canonicalize_edge(Orbit i, Orbit j, std::span<const std::int64_t> a) {
  if (i == j && is_zero(a)) {
    throw GraphError("zero-offset self-loop at orbit " + std::to_string(i + 1));
  }
  if (i < j || (i == j && lex_positive(a))) return {i, j, Offset(a.begin(), a.end())};
  return {j, i, negated(a)};
}

PeriodicGraph::PeriodicGraph(int dimension, int num_orbits, std::vector<EdgeClass> edges)
    : dimension_(dimension), num_orbits_(num_orbits) {
  if (dimension < 1) throw GraphError("dimension must be at least 1");
  if (num_orbits < 1) throw GraphError("graph needs at least one orbit");
  edges_.reserve(edges.size());
  for (const auto& e : edges) {
    if (e.i < 0 || e.i >= num_orbits || e.j < 0 || e.j >= num_orbits) {
      throw GraphError("edge " + to_string(e) + " references an orbit outside 1.." + std::to_string(num_orbits));
    }
    if (static_cast<int>(e.offset.size()) != dimension) {
      throw GraphError("edge " + to_string(e) + " has offset of length " + std::to_string(e.offset.size()) +
                       ", expected " + std::to_string(dimension));
    }
    edges_.push_back(canonicalize_edge(e.i, e.j, e.offset));
  }
  std::sort(edges_.begin(), edges_.end());
  auto dup = std::adjacent_find(edges_.begin(), edges_.end());
  if (dup != edges_.end()) throw GraphError("duplicate edge class " + to_string(*dup));
}

std::optional<std::size_t> PeriodicGraph::find_class(Orbit i, Orbit j, std::span<const std::int64_t> a) const {
  const EdgeClass key = canonicalize_edge(i, j, a);
  auto it = std::lower_bound(edges_.begin(), edges_.end(), key);
  if (it == edges_.end() || *it != key) return std::nullopt;
  return static_cast<std::size_t>(it - edges_.begin());
}

void Labeling::validate(const PeriodicGraph& g, bool allow_zero_weights) const {
  if (static_cast<int>(potentials.size()) != g.num_orbits()) {
    throw GraphError("labeling has " + std::to_string(potentials.size()) + " potentials for " +
                     std::to_string(g.num_orbits()) + " orbits");
  }
  if (weights.size() != g.edge_classes().size()) {
    throw GraphError("labeling has " + std::to_string(weights.size()) + " weights for " +
                     std::to_string(g.edge_classes().size()) + " edge classes");
  }
  if (!allow_zero_weights) {
    for (std::size_t k = 0; k < weights.size(); ++k) {
      if (weights[k] == 0) throw GraphError("zero weight on edge class " + to_string(g.edge_classes()[k]));
    }
  }
}

bool Labeling::has_zero_weight() const {
  return std::any_of(weights.begin(), weights.end(), [](const Rational& w) { return w == 0; });
}

Labeling random_labeling(const PeriodicGraph& g, RationalSampler& sampler) {
  Labeling lab;
  lab.potentials.reserve(g.num_orbits());
  for (int i = 0; i < g.num_orbits(); ++i) lab.potentials.push_back(sampler.any());
  lab.weights.reserve(g.edge_classes().size());
  for (std::size_t k = 0; k < g.edge_classes().size(); ++k) lab.weights.push_back(sampler.nonzero());
  return lab;
}

QuotientGraph quotient_graph(const PeriodicGraph& g) {
  QuotientGraph q;
  q.num_vertices = g.num_orbits();
  q.multi_edges = g.edge_classes();
  for (const auto& e : g.edge_classes()) {
    if (!e.is_self_orbit()) q.simple_edges.emplace(e.i, e.j);
  }
  return q;
}

bool quotient_is_tree(const PeriodicGraph& g) {
  const QuotientGraph q = quotient_graph(g);
  if (static_cast<int>(q.simple_edges.size()) != q.num_vertices - 1) return false;
  // n - 1 edges and connected means acyclic, so every edge is a bridge.
  std::vector<int> parent(q.num_vertices);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  int merged = 0;
  for (auto [i, j] : q.simple_edges) {
    int a = find(i), b = find(j);
    if (a != b) {
      parent[a] = b;
      ++merged;
    }
  }
  return merged == q.num_vertices - 1;
}

std::set<Offset> support_of_subset(const PeriodicGraph& g, std::span<const Orbit> subset) {
  const std::vector<Orbit> u = checked_subset(g, subset);
  std::set<Offset> out;
  for (const auto& e : g.edge_classes()) {
    if (std::binary_search(u.begin(), u.end(), e.i) && std::binary_search(u.begin(), u.end(), e.j)) {
      out.insert(e.offset);
      out.insert(negated(e.offset));
    }
  }
  return out;
}

bool has_support_zero(const PeriodicGraph& g, std::span<const Orbit> subset) {
  const auto s = support_of_subset(g, subset);
  return std::all_of(s.begin(), s.end(), [](const Offset& a) { return is_zero(a); });
}

std::vector<std::vector<Orbit>> components(const PeriodicGraph& g) {
  const int n = g.num_orbits();
  std::vector<std::vector<Orbit>> adj(n);
  for (const auto& e : g.edge_classes()) {
    if (e.is_self_orbit()) continue;
    adj[e.i].push_back(e.j);
    adj[e.j].push_back(e.i);
  }
  std::vector<bool> seen(n, false);
  std::vector<std::vector<Orbit>> out;
  for (Orbit s = 0; s < n; ++s) {
    if (seen[s]) continue;
    std::vector<Orbit> block;
    std::vector<Orbit> stack{s};
    seen[s] = true;
    while (!stack.empty()) {
      Orbit x = stack.back();
      stack.pop_back();
      block.push_back(x);
      for (Orbit y : adj[x]) {
        if (!seen[y]) {
          seen[y] = true;
          stack.push_back(y);
        }
      }
    }
    std::sort(block.begin(), block.end());
    out.push_back(std::move(block));
  }
  return out;
}

InducedGraph induced_subgraph(const PeriodicGraph& g, std::span<const Orbit> subset) {
  const std::vector<Orbit> u = checked_subset(g, subset);
  std::vector<int> local(g.num_orbits(), -1);
  for (std::size_t k = 0; k < u.size(); ++k) local[u[k]] = static_cast<int>(k);

  std::vector<EdgeClass> edges;
  std::vector<std::size_t> parent_class;
  for (std::size_t k = 0; k < g.edge_classes().size(); ++k) {
    const auto& e = g.edge_classes()[k];
    if (local[e.i] < 0 || local[e.j] < 0) continue;
    // relabeling preserves i <= j, so classes stay canonical and sorted
    edges.push_back({local[e.i], local[e.j], e.offset});
    parent_class.push_back(k);
  }
  return {PeriodicGraph(g.dimension(), static_cast<int>(u.size()), std::move(edges)), u, std::move(parent_class)};
}

Labeling induced_labeling(const InducedGraph& sub, const Labeling& lab) {
  Labeling out;
  for (Orbit p : sub.parent_orbit) out.potentials.push_back(lab.potentials.at(p));
  for (std::size_t k : sub.parent_class) out.weights.push_back(lab.weights.at(k));
  return out;
}

namespace {

Offset shift_of(const ShiftAssignment& shifts, Orbit u, int d) {
  auto it = shifts.find(u);
  return it == shifts.end() ? Offset(d, 0) : it->second;
}

EdgeClass refit_class(const EdgeClass& e, const ShiftAssignment& shifts, int d) {
  Offset a = sub(add(e.offset, shift_of(shifts, e.i, d)), shift_of(shifts, e.j, d));
  return canonicalize_edge(e.i, e.j, a);
}

}  // namespace

PeriodicGraph refit(const PeriodicGraph& g, const ShiftAssignment& shifts) {
  std::vector<EdgeClass> edges;
  for (const auto& e : g.edge_classes()) edges.push_back(refit_class(e, shifts, g.dimension()));
  return PeriodicGraph(g.dimension(), g.num_orbits(), std::move(edges));
}

Labeling refit_labeling(const PeriodicGraph& g, const Labeling& lab, const ShiftAssignment& shifts) {
  const PeriodicGraph h = refit(g, shifts);
  Labeling out;
  out.potentials = lab.potentials;
  out.weights.resize(h.edge_classes().size());
  for (std::size_t k = 0; k < g.edge_classes().size(); ++k) {
    const EdgeClass e = refit_class(g.edge_classes()[k], shifts, g.dimension());
    out.weights[*h.find_class(e.i, e.j, e.offset)] = lab.weights.at(k);
  }
  return out;
}

std::optional<ShiftAssignment> zero_monodromy_shifts(const PeriodicGraph& g, std::span<const Orbit> component) {
  const std::vector<Orbit> u = checked_subset(g, component);
  const int d = g.dimension();
  auto inside = [&](Orbit x) { return std::binary_search(u.begin(), u.end(), x); };

  // Outgoing (neighbor, offset) pairs; class (i, j, a) reaches j + a from i.
  std::map<Orbit, std::vector<std::pair<Orbit, Offset>>> adj;
  for (const auto& e : g.edge_classes()) {
    if (!inside(e.i) || !inside(e.j)) continue;
    if (e.is_self_orbit()) return std::nullopt;  // offset is nonzero by canonical form
    adj[e.i].emplace_back(e.j, e.offset);
    adj[e.j].emplace_back(e.i, negated(e.offset));
  }

  ShiftAssignment shifts;
  for (Orbit root : u) {
    if (shifts.contains(root)) continue;
    shifts[root] = Offset(d, 0);
    std::queue<Orbit> q;
    q.push(root);
    while (!q.empty()) {
      Orbit x = q.front();
      q.pop();
      for (const auto& [y, a] : adj[x]) {
        Offset want = add(shifts[x], a);
        auto it = shifts.find(y);
        if (it == shifts.end()) {
          shifts.emplace(y, std::move(want));
          q.push(y);
        } else if (it->second != want) {
          return std::nullopt;
        }
      }
    }
  }
  return shifts;
}

std::optional<Support0Component> find_support0_component(const PeriodicGraph& g) {
  for (auto& block : components(g)) {
    if (auto shifts = zero_monodromy_shifts(g, block)) return Support0Component{std::move(block), std::move(*shifts)};
  }
  return std::nullopt;
}

std::optional<ShiftAssignment> support0_fundamental_domain(const PeriodicGraph& g) {
  ShiftAssignment all;
  for (const auto& block : components(g)) {
    auto shifts = zero_monodromy_shifts(g, block);
    if (!shifts) return std::nullopt;
    all.merge(*shifts);
  }
  return all;
}

bool has_support0_fundamental_domain(const PeriodicGraph& g) { return support0_fundamental_domain(g).has_value(); }

}  // namespace flatband
