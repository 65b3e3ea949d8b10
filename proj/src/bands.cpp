#include "flatband/bands.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <limits>
#include <numbers>
#include <numeric>
#include <stdexcept>

namespace flatband {

ComplexMatrix evaluate_on_torus(const LaurentMatrix& m, std::span<const double> theta) {
  if (static_cast<int>(theta.size()) != m.dimension()) throw std::invalid_argument("torus point has wrong dimension");
  ComplexMatrix out(m.size());
  for (int i = 0; i < m.size(); ++i) {
    for (int j = 0; j < m.size(); ++j) {
      Complex acc = 0;
      for (const auto& [e, c] : m.at(i, j).terms()) {
        if (e.back() != 0) throw std::invalid_argument("matrix entry depends on λ");
        double phase = 0;
        for (int k = 0; k < m.dimension(); ++k) phase += static_cast<double>(e[k]) * theta[k];
        acc += to_double(c) * std::polar(1.0, phase);
      }
      out(i, j) = acc;
    }
  }
  return out;
}

double hermiticity_defect(const ComplexMatrix& m) {
  double worst = 0;
  for (int i = 0; i < m.n; ++i) {
    for (int j = 0; j < m.n; ++j) worst = std::max(worst, std::abs(m(i, j) - std::conj(m(j, i))));
  }
  return worst;
}

double frobenius_norm(const ComplexMatrix& m) {
  double s = 0;
  for (const auto& x : m.a) s += std::norm(x);
  return std::sqrt(s);
}

EigenSystem hermitian_eigensystem(ComplexMatrix m) {
  const int n = m.n;
  for (int i = 0; i < n; ++i) {
    m(i, i) = m(i, i).real();
    for (int j = i + 1; j < n; ++j) {
      Complex avg = 0.5 * (m(i, j) + std::conj(m(j, i)));
      m(i, j) = avg;
      m(j, i) = std::conj(avg);
    }
  }
  ComplexMatrix v(n);
  for (int i = 0; i < n; ++i) v(i, i) = 1;

  const double scale = std::max(frobenius_norm(m), std::numeric_limits<double>::min());
  for (int sweep = 0; sweep < 100; ++sweep) {
    double off = 0;
    for (int p = 0; p < n; ++p) {
      for (int q = p + 1; q < n; ++q) off += std::norm(m(p, q));
    }
    if (std::sqrt(off) <= 1e-15 * scale) break;

    for (int p = 0; p < n; ++p) {
      for (int q = p + 1; q < n; ++q) {
        const double mag = std::abs(m(p, q));
        if (mag == 0) continue;
        // Phase step: conjugate by diag(1, .., e^{-iφ} at q, ..) so m(p, q) becomes real.
        const Complex phase = std::conj(m(p, q)) / mag;
        for (int k = 0; k < n; ++k) {
          m(k, q) *= phase;
          v(k, q) *= phase;
        }
        for (int k = 0; k < n; ++k) m(q, k) *= std::conj(phase);

        const double app = m(p, p).real();
        const double aqq = m(q, q).real();
        const double theta = (aqq - app) / (2 * mag);
        const double t = (theta >= 0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1));
        const double c = 1 / std::sqrt(t * t + 1);
        const double s = t * c;
        for (int k = 0; k < n; ++k) {
          const Complex kp = m(k, p), kq = m(k, q);
          m(k, p) = c * kp - s * kq;
          m(k, q) = s * kp + c * kq;
          const Complex vp = v(k, p), vq = v(k, q);
          v(k, p) = c * vp - s * vq;
          v(k, q) = s * vp + c * vq;
        }
        for (int k = 0; k < n; ++k) {
          const Complex pk = m(p, k), qk = m(q, k);
          m(p, k) = c * pk - s * qk;
          m(q, k) = s * pk + c * qk;
        }
        m(p, q) = 0;
        m(q, p) = 0;
      }
    }
  }

  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int x, int y) { return m(x, x).real() < m(y, y).real(); });
  EigenSystem out;
  for (int j : order) {
    out.values.push_back(m(j, j).real());
    std::vector<Complex> col(n);
    for (int k = 0; k < n; ++k) col[k] = v(k, j);
    out.vectors.push_back(std::move(col));
  }
  return out;
}

BandSample sample_bands(const FloquetMatrix& f, int resolution) {
  if (resolution < 2) throw std::invalid_argument("grid resolution must be at least 2");
  const int d = f.graph().dimension();
  const int n = f.graph().num_orbits();
  BandSample out;
  out.dimension = d;
  out.resolution = resolution;

  std::size_t points = 1;
  for (int k = 0; k < d; ++k) points *= static_cast<std::size_t>(resolution);
  std::vector<double> lo(n, std::numeric_limits<double>::infinity());
  std::vector<double> hi(n, -std::numeric_limits<double>::infinity());
  std::vector<int> idx(d, 0);
  for (std::size_t p = 0; p < points; ++p) {
    std::vector<double> theta(d);
    for (int k = 0; k < d; ++k) theta[k] = 2 * std::numbers::pi * idx[k] / resolution;
    const ComplexMatrix l = evaluate_on_torus(f.matrix(), theta);
    out.max_hermiticity_defect = std::max(out.max_hermiticity_defect, hermiticity_defect(l));
    EigenSystem es = hermitian_eigensystem(l);
    for (int j = 0; j < n; ++j) {
      lo[j] = std::min(lo[j], es.values[j]);
      hi[j] = std::max(hi[j], es.values[j]);
    }
    out.grid.push_back(std::move(theta));
    out.bands.push_back(std::move(es.values));
    // last axis varies fastest
    for (int k = d - 1; k >= 0; --k) {
      if (++idx[k] < resolution) break;
      idx[k] = 0;
    }
  }
  for (int j = 0; j < n; ++j) out.flatness.push_back(hi[j] - lo[j]);
  return out;
}

std::vector<int> numeric_flat_flags(const BandSample& b, double tol) {
  if (!(tol > 0)) throw std::invalid_argument("tolerance must be positive");
  std::vector<int> out;
  for (std::size_t j = 0; j < b.flatness.size(); ++j) {
    if (b.flatness[j] < tol) out.push_back(static_cast<int>(j));
  }
  return out;
}

void write_band_csv(std::ostream& os, const BandSample& b) {
  const std::size_t n = b.flatness.size();
  for (int k = 0; k < b.dimension; ++k) os << (k ? "," : "") << "theta_" << (k + 1);
  for (std::size_t j = 0; j < n; ++j) os << ",lambda_" << (j + 1);
  os << '\n';
  const auto old = os.precision(17);
  for (std::size_t p = 0; p < b.grid.size(); ++p) {
    for (int k = 0; k < b.dimension; ++k) os << (k ? "," : "") << b.grid[p][k];
    for (double x : b.bands[p]) os << ',' << x;
    os << '\n';
  }
  os.precision(old);
}

}  // namespace flatband
