#include "doctest.h"

#include <random>

#include "fixtures.hpp"
#include "flatband/random_graph.hpp"
#include "flatband/resultant.hpp"

using namespace flatband;

namespace {

UPoly random_poly(std::mt19937_64& rng, int lo, int hi) {
  std::uniform_int_distribution<int> deg(lo, hi), c(-4, 4);
  for (;;) {
    std::vector<Rational> v(deg(rng) + 1);
    for (auto& x : v) x = c(rng);
    UPoly p(v);
    if (p.degree() >= 1) return p;
  }
}

}  // namespace

TEST_CASE("Sylvester layout") {
  const SylvesterMatrix s(UPoly::linear(3), UPoly::linear(5));
  CHECK(s.size() == 2);
  CHECK(s.at(0, 0) == -3);
  CHECK(s.at(0, 1) == 1);
  CHECK(s.at(1, 0) == -5);
  CHECK(s.at(1, 1) == 1);
  const SylvesterMatrix t(UPoly({1, 2, 3}), UPoly({4, 5}));
  CHECK(t.size() == 3);
}

TEST_CASE("resultant examples") {
  CHECK(resultant(UPoly::linear(3), UPoly::linear(5)) == 2);
  CHECK(resultant(UPoly::linear(4), UPoly::linear(4)) == 0);
  CHECK(resultant(UPoly({-1, 0, 1}), UPoly::linear(1)) == 0);
  CHECK_THROWS_AS(resultant(UPoly({3}), UPoly::linear(1)), std::invalid_argument);
}

TEST_CASE("property: resultant vanishes iff gcd is nontrivial") {
  std::mt19937_64 rng(51);
  int shared = 0;
  for (int t = 0; t < 200; ++t) {
    UPoly f = random_poly(rng, 1, 3), g = random_poly(rng, 1, 3);
    if (t % 2 == 0) {
      const UPoly c = random_poly(rng, 1, 2);
      f = f * c;
      g = g * c;
      ++shared;
    }
    CHECK((resultant(f, g) == 0) == (gcd(f, g).degree() >= 1));
  }
  CHECK(shared == 100);
}

TEST_CASE("property: resultant is multiplicative up to sign") {
  std::mt19937_64 rng(52);
  for (int t = 0; t < 100; ++t) {
    const UPoly f1 = random_poly(rng, 1, 2), f2 = random_poly(rng, 1, 2), g = random_poly(rng, 1, 3);
    const Rational lhs = resultant(f1 * f2, g), rhs = resultant(f1, g) * resultant(f2, g);
    CHECK(abs(lhs) == abs(rhs));
  }
}

TEST_CASE("cut edge certificates") {
  const std::vector<Rational> z0{1};
  // star with center 0, leaves 1..3
  const PeriodicGraph star(1, 4, {{0, 1, {0}}, {0, 2, {0}}, {0, 3, {0}}, {0, 3, {1}}});
  const std::vector<Orbit> u{0, 1, 2};
  RationalSampler s(61);
  const Labeling lab = random_labeling(star, s);
  CHECK(cut_edge_certificate(star, u, lab, z0) != 0);

  // duplicated isolated potentials: leaves 1 and 2 see identical environments
  const Labeling tuned{{0, 1, 1, 2}, {1, 1, 1, 1}};
  CHECK(cut_edge_certificate(star, u, tuned, z0) == 0);

  const PeriodicGraph path(1, 2, {{0, 1, {1}}});
  const std::vector<Orbit> single{0};
  CHECK(cut_edge_certificate(path, single, random_labeling(path, s), z0) != 0);
}

TEST_CASE("cut edge certificate hypotheses") {
  const std::vector<Rational> z0{1};
  const PeriodicGraph path(1, 3, {{0, 1, {0}}, {1, 2, {1}}});
  const Labeling lab = fixtures::uniform_labeling(path, 1, 1);
  CHECK_THROWS_AS(cut_edge_certificate(path, std::vector<Orbit>{0}, lab, z0), CertificateError);
  CHECK_THROWS_AS(cut_edge_certificate(path, std::vector<Orbit>{1, 2}, lab, z0), CertificateError);
  const PeriodicGraph triangle(1, 3, {{0, 1, {0}}, {1, 2, {0}}, {0, 2, {1}}});
  CHECK_THROWS_AS(cut_edge_certificate(triangle, std::vector<Orbit>{0, 1}, fixtures::uniform_labeling(triangle, 1, 1), z0),
                  CertificateError);
  Labeling zero = lab;
  zero.weights[0] = 0;
  CHECK_THROWS_AS(cut_edge_certificate(path, std::vector<Orbit>{0, 1}, zero, z0), CertificateError);
  CHECK_THROWS_AS(cut_edge_certificate(path, std::vector<Orbit>{0, 1}, lab, std::vector<Rational>{0}), CertificateError);
}

TEST_CASE("property: random tree-quotient graphs have nonzero certificates") {
  std::mt19937_64 rng(62);
  for (int t = 0; t < 100; ++t) {
    const int d = 1 + t % 2;
    const TreeQuotientGraph tq = random_tree_quotient_graph(d, 4, rng);
    RationalSampler s(derive_seed(62, t));
    const Labeling lab = random_labeling(tq.graph, s);
    std::vector<Rational> z0(d);
    for (auto& x : z0) x = s.nonzero();
    CHECK(cut_edge_certificate(tq.graph, tq.support0_subset, lab, z0) != 0);
  }
}
