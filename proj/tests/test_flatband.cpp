#include "doctest.h"

#include <random>

#include "fixtures.hpp"
#include "flatband/flatband.hpp"
#include "flatband/random_graph.hpp"

using namespace flatband;
using fixtures::lieb;

TEST_CASE("flat bands of the unit Lieb lattice") {
  const FlatBandReport r = flat_bands(fixtures::lieb_unit_dispersion());
  CHECK(r.flatband_poly == UPoly({0, 1}));
  REQUIRE(r.rational_bands.size() == 1);
  CHECK(r.rational_bands[0].energy == 0);
  CHECK(r.rational_bands[0].multiplicity == 1);
  CHECK(r.rational_bands[0].verified);
  CHECK(r.irrational_factors.empty());
  CHECK(r.count() == 1);
}

TEST_CASE("flat bands of an edgeless graph") {
  const FloquetMatrix f(fixtures::edgeless(2), Labeling{{5, 7}, {}});
  const FlatBandReport r = flat_bands(f.dispersion());
  REQUIRE(r.rational_bands.size() == 2);
  CHECK(r.rational_bands[0].energy == 5);
  CHECK(r.rational_bands[1].energy == 7);
}

TEST_CASE("irrational flat bands are reported as factors") {
  // D = -λ(1 - λ) - 1 = λ² - λ - 1
  const PeriodicGraph chain(1, 2, {{0, 1, {3}}});
  const FlatBandReport r = flat_bands(FloquetMatrix(chain, Labeling{{0, 1}, {1}}).dispersion());
  CHECK(r.count() == 2);
  CHECK(r.rational_bands.empty());
  REQUIRE(r.irrational_factors.size() == 1);
  CHECK(r.irrational_factors[0].factor.monic() == UPoly({-1, -1, 1}));

  // v = 0, e = 1: D = λ² - 1
  const FlatBandReport q = flat_bands(FloquetMatrix(chain, Labeling{{0, 0}, {1}}).dispersion());
  REQUIRE(q.rational_bands.size() == 2);
  CHECK(q.rational_bands[0].energy == -1);
  CHECK(q.rational_bands[1].energy == 1);
}

TEST_CASE("random labels on Lieb give no flat band") {
  RationalSampler s(3);
  const FloquetMatrix f(lieb(), random_labeling(lieb(), s));
  const FlatBandReport r = flat_bands(f.dispersion());
  CHECK(r.flatband_poly == UPoly({1}));
  CHECK_FALSE(r.has_flat_band());
}

TEST_CASE("flat_bands rejects non-dispersion input") {
  CHECK_THROWS_AS(flat_bands(LaurentPoly(1)), PreconditionError);
  CHECK_THROWS_AS(flat_bands(LaurentPoly::lambda(1) * Rational(2)), PreconditionError);
}

TEST_CASE("generic decisions") {
  CHECK(generic_flat_band_decision(lieb(), 5, 0).verdict == GenericVerdict::kNoFlatBand);
  const PeriodicGraph isolated(2, 4, {{0, 1, {0, 0}}, {1, 2, {0, 0}}, {0, 1, {1, 0}}, {2, 1, {0, 1}}});
  CHECK(generic_flat_band_decision(isolated, 5, 0).verdict == GenericVerdict::kFlatBand);
  const PeriodicGraph chain(1, 2, {{0, 1, {3}}});
  const GenericDecision dc = generic_flat_band_decision(chain, 5, 0);
  CHECK(dc.verdict == GenericVerdict::kFlatBand);
  for (const auto& r : dc.reports) CHECK(r.count() == 2);
  CHECK(std::string(to_string(GenericVerdict::kInconsistent)) == "inconsistent");
}

TEST_CASE("inheritance under orbit deletion") {
  const InheritanceResult lieb1 = inheritance_check(lieb(), fixtures::lieb_unit(), 0);
  CHECK(lieb1.shared_roots.empty());
  CHECK(lieb1.shared_poly == UPoly({1}));

  const InheritanceResult iso = inheritance_check(fixtures::edgeless(2), Labeling{{5, 7}, {}}, 1);
  CHECK(iso.shared_roots == std::vector<Rational>{5});

  CHECK_THROWS_AS(inheritance_check(fixtures::edgeless(1), Labeling{{5}, {}}, 0), PreconditionError);
}

TEST_CASE("property: some orbit deletion inherits each flat band") {
  std::mt19937_64 rng(41);
  int checked = 0;
  for (int t = 0; t < 1000 && checked < 60; ++t) {
    const PeriodicGraph g = random_periodic_graph({}, rng);
    if (g.num_orbits() < 2 || has_support0_fundamental_domain(g)) continue;
    RationalSampler s(derive_seed(41, t));
    const Labeling lab = random_labeling(g, s);
    const FlatBandReport r = flat_bands(FloquetMatrix(g, lab).dispersion());
    if (!r.has_flat_band()) continue;
    ++checked;
    for (const auto& band : r.rational_bands) {
      bool inherited = false;
      for (Orbit i = 0; i < g.num_orbits() && !inherited; ++i) {
        const auto res = inheritance_check(g, lab, i);
        inherited = res.shared_poly.evaluate(band.energy) == 0;
      }
      CHECK(inherited);
    }
    for (const auto& f : r.irrational_factors) {
      bool inherited = false;
      for (Orbit i = 0; i < g.num_orbits() && !inherited; ++i) {
        inherited = gcd(inheritance_check(g, lab, i).shared_poly, f.factor).degree() >= 1;
      }
      CHECK(inherited);
    }
  }
  CHECK(checked > 10);
}

TEST_CASE("vertical segment face witness") {
  const auto w = vertical_segment_face_witness(lieb(), fixtures::lieb_unit());
  REQUIRE(w.has_value());
  CHECK(w->lambda_factor.evaluate(0) == 0);
  CHECK(w->lambda_factor.degree() >= 1);
  CHECK_FALSE(is_zero(w->z_exponent));

  RationalSampler s(9);
  CHECK_THROWS_AS(vertical_segment_face_witness(lieb(), random_labeling(lieb(), s)), PreconditionError);
  const PeriodicGraph chain(1, 1, {{0, 0, {1}}});
  CHECK_THROWS_AS(vertical_segment_face_witness(chain, Labeling{{1}, {1}}), PreconditionError);
}

TEST_CASE("witness for the unit Lieb lattice at w = (1,0,0)") {
  const auto w = vertical_segment_face_witness(lieb(), fixtures::lieb_unit());
  REQUIRE(w.has_value());
  // every axis face of the unit Lieb lattice is z^a * λ
  CHECK(w->lambda_factor == UPoly({0, 1}));
  CHECK(w->facial == LaurentPoly::monomial(2, w->z_exponent, 1, 1));
}
