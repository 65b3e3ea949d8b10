#include "flatband/polytope.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <numeric>

#include "flatband/hull.hpp"

namespace flatband {

namespace {

Exponent z_part(const Exponent& p) { return Exponent(p.begin(), p.end() - 1); }

std::int64_t primitive_gcd(std::span<const std::int64_t> v) {
  std::int64_t g = 0;
  for (auto x : v) g = std::gcd(g, x);
  return g == 0 ? 1 : g;
}

WeightVector lifted(std::vector<std::int64_t> w) {
  const std::int64_t g = primitive_gcd(w);
  for (auto& x : w) x /= g;
  w.push_back(0);
  return WeightVector{std::move(w)};
}

FaceDescriptor face_of(const Support& s, WeightVector w) {
  FaceDescriptor f;
  f.m = std::numeric_limits<std::int64_t>::max();
  for (const auto& p : s) f.m = std::min(f.m, w.dot(p));
  std::map<Exponent, int> lambda_count;
  for (const auto& p : s) {
    if (w.dot(p) != f.m) continue;
    f.members.push_back(p);
    ++lambda_count[z_part(p)];
  }
  f.vertical = std::any_of(lambda_count.begin(), lambda_count.end(), [](const auto& kv) { return kv.second >= 2; });
  f.proper = f.members.size() < s.size();
  f.w = std::move(w);
  return f;
}

}  // namespace

NewtonPolytopeData newton_polytope(const Support& s, int d) {
  NewtonPolytopeData out;
  out.dimension = d + 1;
  out.support_points.assign(s.begin(), s.end());
  std::vector<Point> pts(s.begin(), s.end());
  for (const auto& v : hull_vertices(pts)) out.hull_vertices.push_back(v);
  std::sort(out.hull_vertices.begin(), out.hull_vertices.end(), TermOrder{});
  if (d <= 2 && !s.empty()) {
    out.face_descriptors = projected_faces(s, d);
    out.faces_computed = true;
  }
  return out;
}

GenericSupportEstimate generic_support(const PeriodicGraph& g, int trials, std::uint64_t seed) {
  if (trials < 1) throw std::invalid_argument("generic support needs at least one trial");
  GenericSupportEstimate est{trials, seed, {}};
  for (int t = 0; t < trials; ++t) {
    RationalSampler sampler(seed, static_cast<std::uint64_t>(t));
    FloquetMatrix f(g, random_labeling(g, sampler));
    est.points.merge(support(f.dispersion()));
  }
  return est;
}

Support symbolic_generic_support(const PeriodicGraph& g) {
  if (g.num_orbits() > 4) throw std::invalid_argument("symbolic generic support is limited to n <= 4");
  return project_symbolic_support(symbolic_dispersion(g), g.dimension());
}

bool is_vertical_segment(const Support& s) {
  return std::all_of(s.begin(), s.end(), [](const Exponent& p) {
    return std::all_of(p.begin(), p.end() - 1, [](auto x) { return x == 0; });
  });
}

std::vector<FaceDescriptor> projected_faces(const Support& s, int d) {
  if (d > 2) throw UnsupportedDimension("face enumeration supports d <= 2, got d = " + std::to_string(d));
  std::vector<FaceDescriptor> out;
  if (s.empty()) return out;

  if (d == 1) {
    std::int64_t lo = std::numeric_limits<std::int64_t>::max();
    std::int64_t hi = std::numeric_limits<std::int64_t>::min();
    for (const auto& p : s) {
      lo = std::min(lo, p[0]);
      hi = std::max(hi, p[0]);
    }
    if (lo == hi) return out;
    out.push_back(face_of(s, lifted({1})));
    out.push_back(face_of(s, lifted({-1})));
    return out;
  }

  std::vector<Point2> projected;
  for (const auto& p : s) projected.push_back({p[0], p[1]});
  const std::vector<Point2> hull = convex_hull_2d(std::move(projected));
  if (hull.size() == 1) return out;
  if (hull.size() == 2) {
    const Point2& a = hull[0];
    const Point2& b = hull[1];
    out.push_back(face_of(s, lifted({b[0] - a[0], b[1] - a[1]})));
    out.push_back(face_of(s, lifted({a[0] - b[0], a[1] - b[1]})));
    return out;
  }
  // Inward normal of the counter-clockwise edge a -> b.
  auto inward = [](const Point2& a, const Point2& b) { return Point2{-(b[1] - a[1]), b[0] - a[0]}; };
  const std::size_t h = hull.size();
  for (std::size_t k = 0; k < h; ++k) {
    const Point2& prev = hull[(k + h - 1) % h];
    const Point2& cur = hull[k];
    const Point2& next = hull[(k + 1) % h];
    const Point2 n_in = inward(prev, cur);
    const Point2 n_out = inward(cur, next);
    out.push_back(face_of(s, lifted({n_in[0] + n_out[0], n_in[1] + n_out[1]})));
    out.push_back(face_of(s, lifted({n_out[0], n_out[1]})));
  }
  return out;
}

std::vector<FaceDescriptor> vertical_faces(const Support& s, int d) {
  if (d > 2) throw UnsupportedDimension("face enumeration supports d <= 2, got d = " + std::to_string(d));
  if (s.empty() || is_vertical_segment(s)) throw std::invalid_argument("support is a vertical segment");
  std::vector<FaceDescriptor> out;
  for (auto& f : projected_faces(s, d)) {
    if (f.vertical && f.proper) out.push_back(std::move(f));
  }
  return out;
}

FaceDescriptor proper_vertical_face(const Support& generic, const WeightVector& w) {
  if (generic.empty()) throw std::invalid_argument("empty support");
  if (w.values.size() != generic.begin()->size() || w.values.back() != 0 || w.is_zero()) {
    throw std::invalid_argument("weight vector must be nonzero with λ-weight 0");
  }
  FaceDescriptor f = face_of(generic, w);
  if (!f.vertical || !f.proper) throw std::invalid_argument("weight vector does not identify a proper vertical face");
  return f;
}

std::optional<Orbit> facial_independence_witness(const PeriodicGraph& g, const Support& generic,
                                                 const WeightVector& w, RationalSampler& sampler) {
  const FaceDescriptor face = proper_vertical_face(generic, w);
  const Labeling base = random_labeling(g, sampler);
  for (Orbit i = 0; i < g.num_orbits(); ++i) {
    Labeling first = base;
    Labeling second = base;
    first.potentials[i] = sampler.any();
    do {
      second.potentials[i] = sampler.any();
    } while (second.potentials[i] == first.potentials[i]);
    const LaurentPoly a = terms_at_level(FloquetMatrix(g, first).dispersion(), w, face.m);
    const LaurentPoly b = terms_at_level(FloquetMatrix(g, second).dispersion(), w, face.m);
    if (a == b) return i;
  }
  return std::nullopt;
}

LaurentPoly permutation_product(const FloquetMatrix& f, std::span<const int> sigma) {
  const int n = f.matrix().size();
  if (static_cast<int>(sigma.size()) != n) throw std::invalid_argument("permutation has wrong length");
  std::vector<int> sorted(sigma.begin(), sigma.end());
  std::sort(sorted.begin(), sorted.end());
  for (int i = 0; i < n; ++i) {
    if (sorted[i] != i) throw std::invalid_argument("not a permutation of 0..n-1");
  }
  const LaurentMatrix shifted = f.matrix().minus_lambda_identity();
  LaurentPoly prod = LaurentPoly::constant(shifted.dimension(), 1);
  for (int i = 0; i < n; ++i) prod = prod * shifted.at(i, sigma[i]);
  return prod;
}

bool sigma_support_check(const FloquetMatrix& f, std::span<const int> sigma, const Support& generic) {
  const Support s = support(permutation_product(f, sigma));
  return std::includes(generic.begin(), generic.end(), s.begin(), s.end(), TermOrder{});
}

}  // namespace flatband
