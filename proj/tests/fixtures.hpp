#ifndef FLATBAND_TEST_FIXTURES_HPP
#define FLATBAND_TEST_FIXTURES_HPP

#include <initializer_list>
#include <string>
#include <vector>

#include "flatband/floquet.hpp"
#include "flatband/graph.hpp"
#include "flatband/laurent.hpp"

namespace fixtures {

using namespace flatband;

inline std::string data_path(const std::string& name) { return std::string(FLATBAND_DATA_DIR) + "/" + name; }

// Orbits 0..2 are ids 1..3 in data/lieb.json; classes (1,2,0), (2,3,0), (1,2,(1,0)), (3,2,(0,1)).
inline PeriodicGraph lieb() {
  return PeriodicGraph(2, 3, {{0, 1, {0, 0}}, {1, 2, {0, 0}}, {0, 1, {1, 0}}, {2, 1, {0, 1}}});
}

inline Labeling uniform_labeling(const PeriodicGraph& g, const Rational& v, const Rational& e) {
  return {std::vector<Rational>(g.num_orbits(), v), std::vector<Rational>(g.edge_classes().size(), e)};
}

inline Labeling lieb_unit() { return uniform_labeling(lieb(), 0, 1); }

inline PeriodicGraph edgeless(int n, int d = 1) { return PeriodicGraph(d, n, {}); }

inline LaurentPoly mono(int d, std::initializer_list<std::int64_t> z, std::int64_t b, const Rational& c) {
  const std::vector<std::int64_t> zz(z);
  return LaurentPoly::monomial(d, zz, b, c);
}

// (1+z_k)(1+z_k^-1) in dimension d.
inline LaurentPoly hop(int d, int k) {
  std::vector<std::int64_t> plus(d, 0), minus(d, 0);
  plus[k] = 1;
  minus[k] = -1;
  return LaurentPoly::monomial(d, plus, 0, 1) + LaurentPoly::monomial(d, minus, 0, 1) + LaurentPoly::constant(d, 2);
}

// -λ³ + λ[(1+z1)(1+z1⁻¹) + (1+z2)(1+z2⁻¹)]
inline LaurentPoly lieb_unit_dispersion() {
  const LaurentPoly lam = LaurentPoly::lambda(2);
  return -(lam * lam * lam) + lam * (hop(2, 0) + hop(2, 1));
}

inline Exponent pt(std::initializer_list<std::int64_t> p) { return Exponent(p); }

}  // namespace fixtures

#endif
