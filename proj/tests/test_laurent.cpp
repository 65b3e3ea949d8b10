#include "doctest.h"

#include <random>

#include "fixtures.hpp"

using namespace flatband;
using fixtures::mono;
using fixtures::pt;

namespace {

LaurentPoly random_poly(std::mt19937_64& rng, int d, int terms, int spread, int max_b) {
  std::uniform_int_distribution<int> a(-spread, spread), b(0, max_b), c(-6, 6);
  LaurentPoly f(d);
  for (int t = 0; t < terms; ++t) {
    Exponent e(d + 1);
    for (int k = 0; k < d; ++k) e[k] = a(rng);
    e[d] = b(rng);
    f.add_term(e, c(rng));
  }
  return f;
}

LaurentMatrix random_matrix(std::mt19937_64& rng, int n, int d) {
  LaurentMatrix m(n, d);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) m.at(i, j) = random_poly(rng, d, 2, 1, 1);
  }
  return m;
}

}  // namespace

TEST_CASE("arithmetic examples") {
  const int d = 1;
  const LaurentPoly z = mono(d, {1}, 0, 1), zi = mono(d, {-1}, 0, 1), one = LaurentPoly::constant(d, 1);
  CHECK((one + z) * (one + zi) == zi + LaurentPoly::constant(d, 2) + z);
  CHECK((z + zi) + (-(z + zi)) == LaurentPoly(d));
  const LaurentPoly lam = LaurentPoly::lambda(d);
  CHECK((lam - LaurentPoly::constant(d, 2)) * (lam + LaurentPoly::constant(d, 2)) ==
        lam * lam - LaurentPoly::constant(d, 4));
  CHECK((z * zi) == one);
}

TEST_CASE("dimension mismatch is an error") {
  CHECK_THROWS_AS(LaurentPoly(1) + LaurentPoly(2), AlgebraError);
}

TEST_CASE("support") {
  const int d = 1;
  const LaurentPoly f = mono(d, {-1}, 0, 1) + mono(d, {0}, 0, 2) + mono(d, {1}, 0, 1);
  CHECK(support(f) == Support{pt({-1, 0}), pt({0, 0}), pt({1, 0})});
  CHECK(support(LaurentPoly(2)).empty());
  const LaurentPoly g = mono(0, {}, 3, 1) + mono(0, {}, 1, -4);
  CHECK(support(g) == Support{pt({3}), pt({1})});
}

TEST_CASE("facial polynomials") {
  const int d = 1;
  const LaurentPoly f = LaurentPoly::constant(d, 2) + mono(d, {1}, 1, 3) + mono(d, {-2}, 0, 1);
  CHECK(facial_polynomial(f, WeightVector{{1, 0}}) == mono(d, {-2}, 0, 1));
  CHECK(facial_polynomial(f, WeightVector{{0, 0}}) == f);
  CHECK(facial_polynomial(f, WeightVector{{-1, 0}}) == mono(d, {1}, 1, 3));
}

TEST_CASE("coefficients in lambda") {
  const LaurentPoly d3 = fixtures::lieb_unit_dispersion();
  const LaurentPoly q = fixtures::hop(2, 0) + fixtures::hop(2, 1);
  CHECK(coefficient_in_lambda(d3, 3) == LaurentPoly::constant(2, -1));
  CHECK(coefficient_in_lambda(d3, 2).is_zero());
  CHECK(coefficient_in_lambda(d3, 1) == q);
  CHECK(d3.lambda_degree() == 3);
}

TEST_CASE("substitute_lambda") {
  CHECK(substitute_lambda(fixtures::lieb_unit_dispersion(), 0).is_zero());
  const LaurentPoly l5 = LaurentPoly::lambda(0) - LaurentPoly::constant(0, 5);
  CHECK(substitute_lambda(l5, 5).is_zero());
  CHECK(substitute_lambda(l5, 4) == LaurentPoly::constant(0, -1));
}

TEST_CASE("divide_by_linear") {
  const LaurentPoly lam = LaurentPoly::lambda(0);
  const LaurentPoly p = lam * lam - LaurentPoly::constant(0, 4);
  CHECK(divide_by_linear(p, 2) == lam + LaurentPoly::constant(0, 2));
  CHECK(divide_by_linear(lam - LaurentPoly::constant(0, 5), 5) == LaurentPoly::constant(0, 1));
  CHECK_THROWS_WITH_AS(divide_by_linear(p, 3), doctest::Contains("not a root"), AlgebraError);

  const LaurentPoly q = fixtures::hop(2, 0) + fixtures::hop(2, 1);
  const LaurentPoly l2 = LaurentPoly::lambda(2);
  CHECK(divide_by_linear(fixtures::lieb_unit_dispersion(), 0) == -(l2 * l2) + q);
}

TEST_CASE("exact_divide") {
  std::mt19937_64 rng(8);
  for (int t = 0; t < 100; ++t) {
    const LaurentPoly a = random_poly(rng, 2, 4, 2, 2), b = random_poly(rng, 2, 3, 2, 2);
    if (b.is_zero()) continue;
    CHECK(exact_divide(a * b, b) == a);
  }
  const LaurentPoly x = mono(1, {1}, 0, 1) + LaurentPoly::constant(1, 1);
  CHECK_THROWS_AS(exact_divide(x, x + x * x), AlgebraError);
  CHECK_THROWS_AS(exact_divide(x, LaurentPoly(1)), AlgebraError);
}

TEST_CASE("evaluate_z and to_univariate") {
  const LaurentPoly d3 = fixtures::lieb_unit_dispersion();
  const std::vector<Rational> z{1, 1};
  CHECK(evaluate_z(d3, z) == UPoly({0, 8, 0, -1}));
  const std::vector<Rational> z2{2, Rational(1, 2)};
  // q(2, 1/2) = (3)(3/2) + (3/2)(3) = 9
  CHECK(evaluate_z(d3, z2) == UPoly({0, 9, 0, -1}));
  CHECK_THROWS_AS(to_univariate(d3), AlgebraError);
  CHECK(to_univariate(LaurentPoly::lambda(2) * LaurentPoly::lambda(2)) == UPoly({0, 0, 1}));
}

TEST_CASE("determinant examples") {
  LaurentMatrix diag(3, 1);
  for (int i = 0; i < 3; ++i) diag.at(i, i) = LaurentPoly::constant(1, i + 2);
  const LaurentMatrix shifted = diag.minus_lambda_identity();
  const LaurentPoly lam = LaurentPoly::lambda(1);
  LaurentPoly expect = LaurentPoly::constant(1, 1);
  for (int i = 0; i < 3; ++i) expect = expect * (LaurentPoly::constant(1, i + 2) - lam);
  CHECK(determinant(shifted) == expect);

  LaurentMatrix one(1, 1);
  one.at(0, 0) = LaurentPoly::constant(1, 3) + mono(1, {1}, 0, 1) + mono(1, {-1}, 0, 1) - lam;
  CHECK(determinant(one) == one.at(0, 0));
  CHECK_THROWS_AS(LaurentMatrix(0, 1), AlgebraError);
}

TEST_CASE("property: ring axioms") {
  std::mt19937_64 rng(1);
  for (int t = 0; t < 200; ++t) {
    const int d = 1 + t % 2;
    const LaurentPoly a = random_poly(rng, d, 3, 2, 2), b = random_poly(rng, d, 3, 2, 2),
                      c = random_poly(rng, d, 3, 2, 2);
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a - a == LaurentPoly(d));
    CHECK(a * LaurentPoly::constant(d, 1) == a);
  }
}

TEST_CASE("property: Leibniz and Bareiss agree") {
  std::mt19937_64 rng(2);
  for (int t = 0; t < 100; ++t) {
    const int n = 1 + t % 5, d = 1 + (t / 5) % 2;
    const LaurentMatrix m = random_matrix(rng, n, d);
    CHECK(determinant_leibniz(m) == determinant_bareiss(m));
  }
}

TEST_CASE("property: facial polynomials are multiplicative") {
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<int> w(-3, 3);
  for (int t = 0; t < 200; ++t) {
    const LaurentPoly a = random_poly(rng, 2, 4, 2, 2), b = random_poly(rng, 2, 4, 2, 2);
    if (a.is_zero() || b.is_zero()) continue;
    const WeightVector wv{{w(rng), w(rng), w(rng)}};
    CHECK(facial_polynomial(a * b, wv) == facial_polynomial(a, wv) * facial_polynomial(b, wv));
  }
}
