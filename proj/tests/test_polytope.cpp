#include "doctest.h"

#include <algorithm>
#include <numeric>
#include <random>

#include "fixtures.hpp"
#include "flatband/hull.hpp"
#include "flatband/polytope.hpp"
#include "flatband/random_graph.hpp"

using namespace flatband;
using fixtures::lieb;
using fixtures::pt;

namespace {

Support lieb_generic() {
  Support s;
  for (int b = 0; b <= 3; ++b) s.insert({0, 0, b});
  for (int b = 0; b <= 1; ++b) {
    s.insert({1, 0, b});
    s.insert({-1, 0, b});
    s.insert({0, 1, b});
    s.insert({0, -1, b});
  }
  return s;
}

std::vector<Point> random_points(std::mt19937_64& rng, int dim, int count) {
  std::uniform_int_distribution<int> c(-3, 3);
  std::vector<Point> pts(count, Point(dim));
  for (auto& p : pts) {
    for (auto& x : p) x = c(rng);
  }
  return pts;
}

std::vector<Point> sorted(std::vector<Point> v) {
  std::sort(v.begin(), v.end());
  return v;
}

}  // namespace

TEST_CASE("convex hull helpers") {
  const std::vector<Point> square{{0, 0}, {2, 0}, {0, 2}, {2, 2}, {1, 1}};
  CHECK(in_convex_hull(Point{1, 1}, square));
  CHECK_FALSE(in_convex_hull(Point{3, 1}, square));
  CHECK(sorted(hull_vertices(square)) == std::vector<Point>{{0, 0}, {0, 2}, {2, 0}, {2, 2}});
  const auto h2 = convex_hull_2d({{0, 0}, {2, 0}, {0, 2}, {2, 2}, {1, 1}, {1, 0}});
  CHECK(h2 == std::vector<Point2>{{0, 0}, {2, 0}, {2, 2}, {0, 2}});
}

TEST_CASE("generic support of Lieb") {
  CHECK(generic_support(lieb(), 5, 0).points == lieb_generic());
  CHECK(symbolic_generic_support(lieb()) == lieb_generic());
  CHECK(generic_support(fixtures::edgeless(1, 1), 5, 0).points == Support{pt({0, 0}), pt({0, 1})});
}

TEST_CASE("vertical segment recognition") {
  CHECK(is_vertical_segment(Support{pt({0, 0}), pt({0, 3})}));
  CHECK_FALSE(is_vertical_segment(lieb_generic()));
  CHECK(is_vertical_segment(Support{pt({0, 0})}));
  CHECK(is_vertical_segment(generic_support(fixtures::edgeless(3, 2)).points));
}

TEST_CASE("vertical faces of Lieb") {
  const auto faces = vertical_faces(lieb_generic(), 2);
  auto find = [&](std::vector<std::int64_t> w) {
    return std::find_if(faces.begin(), faces.end(), [&](const FaceDescriptor& f) { return f.w.values == w; });
  };
  for (const auto& w : std::vector<std::vector<std::int64_t>>{{1, 0, 0}, {-1, 0, 0}, {0, 1, 0}, {0, -1, 0}}) {
    const auto it = find(w);
    REQUIRE(it != faces.end());
    CHECK(it->m == -1);
    CHECK(it->vertical);
    CHECK(it->proper);
  }
  CHECK(find({1, 0, 0})->members == std::vector<Exponent>{{-1, 0, 0}, {-1, 0, 1}});
  for (const auto& f : faces) {
    CHECK(f.m < 0);
    CHECK(std::find(f.members.begin(), f.members.end(), pt({0, 0, 0})) == f.members.end());
  }
}

TEST_CASE("faces without vertical pairs and unsupported inputs") {
  const Support square{pt({1, 0, 0}), pt({-1, 0, 0}), pt({0, 1, 0}), pt({0, -1, 0})};
  CHECK(vertical_faces(square, 2).empty());

  const Support chain{pt({-1, 0}), pt({0, 0}), pt({0, 1}), pt({1, 0})};
  CHECK(vertical_faces(chain, 1).empty());

  CHECK_THROWS_AS(vertical_faces(Support{pt({0, 0, 0, 0}), pt({1, 0, 0, 0})}, 3), UnsupportedDimension);
  CHECK_THROWS_AS(vertical_faces(Support{pt({0, 0}), pt({0, 2})}, 1), std::invalid_argument);
}

TEST_CASE("newton polytope data") {
  const NewtonPolytopeData p = newton_polytope(lieb_generic(), 2);
  CHECK(p.dimension == 3);
  CHECK(p.support_points.size() == 12);
  CHECK(p.hull_vertices.size() == 9);
  CHECK(p.faces_computed);
  const NewtonPolytopeData q = newton_polytope(Support{pt({0, 0, 0, 0}), pt({1, 0, 0, 1})}, 3);
  CHECK_FALSE(q.faces_computed);
}

TEST_CASE("facial independence witnesses on Lieb") {
  const Support generic = lieb_generic();
  RationalSampler s(4);
  const auto x = facial_independence_witness(lieb(), generic, WeightVector{{1, 0, 0}}, s);
  REQUIRE(x.has_value());
  CHECK((*x == 0 || *x == 1));
  const auto y = facial_independence_witness(lieb(), generic, WeightVector{{-1, 0, 0}}, s);
  REQUIRE(y.has_value());
  CHECK((*y == 0 || *y == 1));
  const auto z = facial_independence_witness(lieb(), generic, WeightVector{{0, 1, 0}}, s);
  REQUIRE(z.has_value());
  CHECK((*z == 1 || *z == 2));
}

TEST_CASE("sigma support containment on Lieb") {
  const FloquetMatrix f(lieb(), fixtures::lieb_unit());
  const Support generic = lieb_generic();
  const std::vector<int> id{0, 1, 2}, cycle{1, 2, 0};
  CHECK(sigma_support_check(f, id, generic));
  CHECK(sigma_support_check(f, cycle, generic));
}

TEST_CASE("property: Minkowski sum of Newton polytopes") {
  std::mt19937_64 rng(31);
  for (int t = 0; t < 200; ++t) {
    const int dim = 2 + t % 2;
    const auto a = random_points(rng, dim, 4), b = random_points(rng, dim, 4);
    std::vector<Point> sum;
    for (const auto& p : a) {
      for (const auto& q : b) {
        Point r(dim);
        for (int k = 0; k < dim; ++k) r[k] = p[k] + q[k];
        sum.push_back(r);
      }
    }
    std::vector<Point> vsum;
    for (const auto& p : hull_vertices(a)) {
      for (const auto& q : hull_vertices(b)) {
        Point r(dim);
        for (int k = 0; k < dim; ++k) r[k] = p[k] + q[k];
        vsum.push_back(r);
      }
    }
    CHECK(sorted(hull_vertices(sum)) == sorted(hull_vertices(vsum)));
  }
}

TEST_CASE("property: Newton polytope of a product is the Minkowski sum") {
  std::mt19937_64 rng(32);
  std::uniform_int_distribution<int> e(-2, 2), c(-5, 5);
  for (int t = 0; t < 200; ++t) {
    LaurentPoly f(1), g(1);
    for (int k = 0; k < 4; ++k) {
      f.add_term({e(rng), e(rng) + 2}, c(rng));
      g.add_term({e(rng), e(rng) + 2}, c(rng));
    }
    if (f.is_zero() || g.is_zero()) continue;
    const Support a = support(f), b = support(g), ab = support(f * g);
    const std::vector<Point> sf(a.begin(), a.end()), sg(b.begin(), b.end()), sp(ab.begin(), ab.end());
    std::vector<Point> mink;
    for (const auto& p : sf) {
      for (const auto& q : sg) mink.push_back({p[0] + q[0], p[1] + q[1]});
    }
    CHECK(sorted(hull_vertices(sp)) == sorted(hull_vertices(mink)));
  }
}

TEST_CASE("property: sampled support grows with trials and stays in the symbolic support") {
  std::mt19937_64 rng(33);
  for (int t = 0; t < 60; ++t) {
    const PeriodicGraph g = random_periodic_graph({}, rng);
    const Support one = generic_support(g, 1, t).points, five = generic_support(g, 5, t).points;
    CHECK(std::includes(five.begin(), five.end(), one.begin(), one.end(), TermOrder{}));
    CHECK(five == symbolic_generic_support(g));
  }
}

TEST_CASE("property: random permutations stay inside the generic support") {
  std::mt19937_64 rng(34);
  for (int t = 0; t < 100; ++t) {
    const PeriodicGraph g = random_periodic_graph({}, rng);
    RationalSampler s(derive_seed(34, t));
    const FloquetMatrix f(g, random_labeling(g, s));
    std::vector<int> sigma(g.num_orbits());
    std::iota(sigma.begin(), sigma.end(), 0);
    std::shuffle(sigma.begin(), sigma.end(), rng);
    CHECK(sigma_support_check(f, sigma, generic_support(g).points));
  }
}
