#ifndef FLATBAND_BANDS_HPP
#define FLATBAND_BANDS_HPP

#include <complex>
#include <ostream>
#include <span>
#include <vector>

#include "flatband/floquet.hpp"

namespace flatband {

using Complex = std::complex<double>;

/// Dense row-major complex square matrix.
struct ComplexMatrix {
  int n = 0;
  std::vector<Complex> a;

  explicit ComplexMatrix(int size = 0) : n(size), a(static_cast<std::size_t>(size) * size) {}
  Complex& operator()(int i, int j) { return a[static_cast<std::size_t>(i) * n + j]; }
  const Complex& operator()(int i, int j) const { return a[static_cast<std::size_t>(i) * n + j]; }
};

/// L(z) at z_k = exp(i θ_k).
ComplexMatrix evaluate_on_torus(const LaurentMatrix& m, std::span<const double> theta);

/// max |M - M^H| entrywise.
double hermiticity_defect(const ComplexMatrix& m);

/// Frobenius norm.
double frobenius_norm(const ComplexMatrix& m);

struct EigenSystem {
  std::vector<double> values;                 // ascending
  std::vector<std::vector<Complex>> vectors;  // vectors[j] pairs with values[j]
};

/// Cyclic Jacobi for a Hermitian matrix: each rotation first makes the
/// pivot real with a diagonal phase, then applies a real plane rotation.
/// The input is symmetrized as (M + M^H)/2.
EigenSystem hermitian_eigensystem(ComplexMatrix m);

struct BandSample {
  int dimension = 0;
  int resolution = 0;
  /// θ-coordinates per grid point, θ = 2πk/r on each axis.
  std::vector<std::vector<double>> grid;
  /// Sorted eigenvalues per grid point.
  std::vector<std::vector<double>> bands;
  /// max_z λ_j - min_z λ_j per band.
  std::vector<double> flatness;
  /// Largest hermiticity_defect before symmetrization.
  double max_hermiticity_defect = 0;
};

/// Band functions on the uniform r^d grid of the torus. Rejects r < 2.
BandSample sample_bands(const FloquetMatrix& f, int resolution = 16);

/// 0-based indices of bands with flatness below tol.
std::vector<int> numeric_flat_flags(const BandSample& b, double tol);

/// CSV with header theta_1..theta_d,lambda_1..lambda_n, one row per grid
/// point.
void write_band_csv(std::ostream& os, const BandSample& b);

}  // namespace flatband

#endif
