#include "flatband/resultant.hpp"

#include <algorithm>

#include "flatband/floquet.hpp"

namespace flatband {

SylvesterMatrix::SylvesterMatrix(const UPoly& f, const UPoly& g) {
  const int s = f.degree();
  const int t = g.degree();
  if (s < 1 || t < 1) throw std::invalid_argument("resultant needs polynomials of degree at least 1");
  n_ = s + t;
  entries_.assign(static_cast<std::size_t>(n_) * n_, Rational(0));
  for (int r = 0; r < t; ++r) {
    for (int k = 0; k <= s; ++k) entries_[static_cast<std::size_t>(r) * n_ + r + k] = f.coefficients()[k];
  }
  for (int r = 0; r < s; ++r) {
    for (int k = 0; k <= t; ++k) entries_[static_cast<std::size_t>(t + r) * n_ + r + k] = g.coefficients()[k];
  }
}

Rational SylvesterMatrix::determinant() const {
  std::vector<Rational> a = entries_;
  const int n = n_;
  Rational det = 1;
  for (int k = 0; k < n; ++k) {
    int pivot = -1;
    for (int i = k; i < n; ++i) {
      if (a[i * n + k] != 0) {
        pivot = i;
        break;
      }
    }
    if (pivot < 0) return 0;
    if (pivot != k) {
      for (int j = 0; j < n; ++j) std::swap(a[k * n + j], a[pivot * n + j]);
      det = -det;
    }
    const Rational p = a[k * n + k];
    det *= p;
    for (int i = k + 1; i < n; ++i) {
      if (a[i * n + k] == 0) continue;
      const Rational f = a[i * n + k] / p;
      for (int j = k; j < n; ++j) a[i * n + j] -= f * a[k * n + j];
    }
  }
  return det;
}

Rational resultant(const UPoly& f, const UPoly& g) { return SylvesterMatrix(f, g).determinant(); }

Rational cut_edge_certificate(const PeriodicGraph& g, std::span<const Orbit> subset, const Labeling& lab,
                              std::span<const Rational> z0) {
  const int n = g.num_orbits();
  if (n < 2) throw CertificateError("cut-edge certificate needs at least two orbits");
  if (static_cast<int>(subset.size()) != n - 1) {
    throw CertificateError("subset has " + std::to_string(subset.size()) + " orbits, expected " + std::to_string(n - 1));
  }
  if (!has_support_zero(g, subset)) throw CertificateError("subset does not have support 0");
  if (!quotient_is_tree(g)) throw CertificateError("simplified quotient graph has a non-bridge edge or is disconnected");
  for (std::size_t k = 0; k < lab.weights.size(); ++k) {
    if (lab.weights[k] == 0) throw CertificateError("zero weight on edge class " + to_string(g.edge_classes()[k]));
  }
  if (std::any_of(z0.begin(), z0.end(), [](const Rational& x) { return x == 0; })) {
    throw CertificateError("evaluation point has a zero coordinate");
  }

  const FloquetMatrix full(g, lab);
  const UPoly whole = evaluate_z(full.dispersion(), z0);
  const UPoly reduced = to_univariate(induced_dispersion(g, lab, subset));
  return resultant(whole, reduced);
}

}  // namespace flatband
