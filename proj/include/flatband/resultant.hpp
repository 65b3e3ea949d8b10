#ifndef FLATBAND_RESULTANT_HPP
#define FLATBAND_RESULTANT_HPP

#include <span>
#include <stdexcept>
#include <vector>

#include "flatband/graph.hpp"
#include "flatband/upoly.hpp"

namespace flatband {

/// (s + t) x (s + t) Sylvester matrix of f (degree s) and g (degree t):
/// t rows of f's coefficients a_0..a_s, then s rows of g's b_0..b_t, each
/// row shifted one column right of the previous one.
class SylvesterMatrix {
public:
  SylvesterMatrix(const UPoly& f, const UPoly& g);

  int size() const { return n_; }
  const Rational& at(int i, int j) const { return entries_[static_cast<std::size_t>(i) * n_ + j]; }
  Rational determinant() const;

private:
  int n_;
  std::vector<Rational> entries_;
};

/// det of the Sylvester matrix in the layout above. Ascending coefficients
/// make this (-1)^(n(n-1)/2 + s(s-1)/2 + t(t-1)/2) times the usual
/// descending-layout resultant, n = s + t. Rejects constant inputs.
Rational resultant(const UPoly& f, const UPoly& g);

class CertificateError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// Res(D(z0, λ), D|_U(λ)) for a graph whose simplified quotient graph is a
/// tree, with U = W minus one orbit of support 0. Each violated hypothesis
/// raises CertificateError naming it.
Rational cut_edge_certificate(const PeriodicGraph& g, std::span<const Orbit> subset, const Labeling& lab,
                              std::span<const Rational> z0);

}  // namespace flatband

#endif
