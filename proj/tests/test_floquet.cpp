#include "doctest.h"

#include <array>
#include <random>

#include "fixtures.hpp"
#include "flatband/random_graph.hpp"

using namespace flatband;
using fixtures::lieb;
using fixtures::mono;

TEST_CASE("Lieb Floquet matrix with symbolic-looking labels") {
  // v = (1, 2, 3); weights in class order (1,2,0), (1,2,(1,0)), (2,3,(0,-1)), (2,3,0)
  const PeriodicGraph g = lieb();
  Labeling lab{{1, 2, 3}, {5, 7, 11, 13}};
  const LaurentMatrix m = floquet_matrix(g, lab);
  const int d = 2;
  CHECK(m.at(0, 0) == LaurentPoly::constant(d, 1));
  CHECK(m.at(0, 1) == LaurentPoly::constant(d, 5) + mono(d, {1, 0}, 0, 7));
  CHECK(m.at(1, 0) == LaurentPoly::constant(d, 5) + mono(d, {-1, 0}, 0, 7));
  CHECK(m.at(1, 2) == LaurentPoly::constant(d, 13) + mono(d, {0, -1}, 0, 11));
  CHECK(m.at(2, 1) == LaurentPoly::constant(d, 13) + mono(d, {0, 1}, 0, 11));
  CHECK(m.at(0, 2).is_zero());
  CHECK(m.at(2, 2) == LaurentPoly::constant(d, 3));
}

TEST_CASE("single orbit and edgeless matrices") {
  const PeriodicGraph chain(1, 1, {{0, 0, {1}}});
  const LaurentMatrix m = floquet_matrix(chain, Labeling{{3}, {2}});
  CHECK(m.at(0, 0) == LaurentPoly::constant(1, 3) + mono(1, {1}, 0, 2) + mono(1, {-1}, 0, 2));

  const PeriodicGraph iso = fixtures::edgeless(2);
  const LaurentMatrix e = floquet_matrix(iso, Labeling{{5, 7}, {}});
  CHECK(e.at(0, 0) == LaurentPoly::constant(1, 5));
  CHECK(e.at(1, 1) == LaurentPoly::constant(1, 7));
  CHECK(e.at(0, 1).is_zero());
}

TEST_CASE("missing labels are rejected") {
  CHECK_THROWS_AS(floquet_matrix(lieb(), Labeling{{0, 0, 0}, {1, 1, 1}}), GraphError);
  CHECK_THROWS_AS(FloquetMatrix(lieb(), Labeling{{0, 0, 0}, {1, 0, 1, 1}}), GraphError);
  CHECK_NOTHROW(FloquetMatrix(lieb(), Labeling{{0, 0, 0}, {1, 0, 1, 1}}, true));
}

TEST_CASE("dispersion examples") {
  CHECK(build_floquet(lieb(), fixtures::lieb_unit()).dispersion() == fixtures::lieb_unit_dispersion());

  const LaurentPoly lam = LaurentPoly::lambda(1);
  const FloquetMatrix iso(fixtures::edgeless(2), Labeling{{5, 7}, {}});
  CHECK(iso.dispersion() == (LaurentPoly::constant(1, 5) - lam) * (LaurentPoly::constant(1, 7) - lam));

  const FloquetMatrix chain(PeriodicGraph(1, 1, {{0, 0, {1}}}), Labeling{{3}, {1}});
  CHECK(dispersion(chain) == LaurentPoly::constant(1, 3) + mono(1, {1}, 0, 1) + mono(1, {-1}, 0, 1) - lam);
}

TEST_CASE("induced dispersion") {
  const PeriodicGraph g = lieb();
  const Labeling lab = fixtures::lieb_unit();
  const std::vector<Orbit> u{1, 2};
  const LaurentPoly lam = LaurentPoly::lambda(2);
  const LaurentPoly off = LaurentPoly::constant(2, 1) + mono(2, {0, -1}, 0, 1);
  const LaurentPoly off_t = LaurentPoly::constant(2, 1) + mono(2, {0, 1}, 0, 1);
  CHECK(induced_dispersion(g, lab, u) == lam * lam - off * off_t);

  const std::vector<Orbit> all{0, 1, 2};
  CHECK(induced_dispersion(g, lab, all) == fixtures::lieb_unit_dispersion());

  const PeriodicGraph zero(2, 3, {{0, 1, {0, 0}}, {1, 2, {1, 0}}});
  const std::vector<Orbit> pair{0, 1};
  CHECK(induced_dispersion(zero, fixtures::uniform_labeling(zero, 2, 3), pair).is_z_free());
}

TEST_CASE("symbolic dispersion of Lieb") {
  const LaurentPoly sym = symbolic_dispersion(lieb());
  // variables (z1, z2, v1, v2, v3, e1..e4, λ)
  CHECK(sym.dimension() == 2 + 3 + 4);
  const Support projected = project_symbolic_support(sym, 2);
  Support expect;
  for (int b = 0; b <= 3; ++b) expect.insert({0, 0, b});
  for (int b = 0; b <= 1; ++b) {
    expect.insert({1, 0, b});
    expect.insert({-1, 0, b});
    expect.insert({0, 1, b});
    expect.insert({0, -1, b});
  }
  CHECK(projected == expect);
}

TEST_CASE("property: dispersion is invariant under refitting and has leading term (-1)^n") {
  std::mt19937_64 rng(21);
  std::uniform_int_distribution<int> a(-2, 2);
  for (int t = 0; t < 100; ++t) {
    const PeriodicGraph g = random_periodic_graph({}, rng);
    RationalSampler s(derive_seed(21, t));
    const Labeling lab = random_labeling(g, s);
    const FloquetMatrix f(g, lab);
    const int n = g.num_orbits();
    CHECK(coefficient_in_lambda(f.dispersion(), n) == LaurentPoly::constant(g.dimension(), n % 2 ? -1 : 1));

    ShiftAssignment shifts;
    for (int i = 0; i < n; ++i) {
      Offset sh(g.dimension());
      for (auto& x : sh) x = a(rng);
      shifts[i] = sh;
    }
    const PeriodicGraph h = refit(g, shifts);
    const FloquetMatrix fh(h, refit_labeling(g, lab, shifts));
    CHECK(fh.dispersion() == f.dispersion());
  }
}

TEST_CASE("property: D(z^-1) equals D(z) for real labels") {
  std::mt19937_64 rng(22);
  for (int t = 0; t < 100; ++t) {
    const PeriodicGraph g = random_periodic_graph({}, rng);
    RationalSampler s(derive_seed(22, t));
    const LaurentPoly dd = FloquetMatrix(g, random_labeling(g, s)).dispersion();
    LaurentPoly inv(g.dimension());
    for (const auto& [e, c] : dd.terms()) {
      Exponent f = e;
      for (int k = 0; k < g.dimension(); ++k) f[k] = -f[k];
      inv.add_term(f, c);
    }
    CHECK(inv == dd);
  }
}

TEST_CASE("property: dispersion is multilinear in each potential") {
  std::mt19937_64 rng(23);
  for (int t = 0; t < 60; ++t) {
    const PeriodicGraph g = random_periodic_graph({}, rng);
    RationalSampler s(derive_seed(23, t));
    Labeling lab = random_labeling(g, s);
    const int i = t % g.num_orbits();
    std::array<LaurentPoly, 3> values;
    const std::array<Rational, 3> vs{0, 1, 2};
    for (int k = 0; k < 3; ++k) {
      lab.potentials[i] = vs[k];
      values[k] = FloquetMatrix(g, lab).dispersion();
    }
    // affine in v_i: D(2) - 2 D(1) + D(0) = 0
    CHECK(values[2] - values[1] * Rational(2) + values[0] == LaurentPoly(g.dimension()));
  }
}
