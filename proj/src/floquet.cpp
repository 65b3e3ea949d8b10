#include "flatband/floquet.hpp"

#include <stdexcept>

namespace flatband {

LaurentMatrix floquet_matrix(const PeriodicGraph& g, const Labeling& lab) {
  lab.validate(g, true);
  const int n = g.num_orbits();
  const int d = g.dimension();
  LaurentMatrix m(n, d);
  for (int i = 0; i < n; ++i) m.at(i, i) += LaurentPoly::constant(d, lab.potentials.at(i));
  for (std::size_t k = 0; k < g.edge_classes().size(); ++k) {
    const EdgeClass& e = g.edge_classes()[k];
    const Rational& w = lab.weights.at(k);
    m.at(e.i, e.j) += LaurentPoly::monomial(d, e.offset, 0, w);
    m.at(e.j, e.i) += LaurentPoly::monomial(d, negated(e.offset), 0, w);
  }
  return m;
}

namespace {

LaurentPoly checked_dispersion(const LaurentMatrix& m) {
  LaurentPoly det = determinant(m.minus_lambda_identity());
  const int n = m.size();
  if (det.lambda_degree() != n || coefficient_in_lambda(det, n) != LaurentPoly::constant(m.dimension(), n % 2 ? -1 : 1)) {
    throw std::logic_error("dispersion polynomial lost its (-1)^n λ^n term");
  }
  return det;
}

}  // namespace

FloquetMatrix::FloquetMatrix(PeriodicGraph graph, Labeling labeling, bool allow_zero_weights)
    : graph_(std::move(graph)),
      labeling_(std::move(labeling)),
      matrix_((labeling_.validate(graph_, allow_zero_weights), floquet_matrix(graph_, labeling_))),
      dispersion_(checked_dispersion(matrix_)) {}

FloquetMatrix build_floquet(const PeriodicGraph& g, const Labeling& lab) { return FloquetMatrix(g, lab); }

LaurentPoly dispersion(const FloquetMatrix& f) { return f.dispersion(); }

LaurentPoly induced_dispersion(const PeriodicGraph& g, const Labeling& lab, std::span<const Orbit> subset) {
  const InducedGraph sub = induced_subgraph(g, subset);
  const Labeling sub_lab = induced_labeling(sub, lab);
  sub_lab.validate(sub.graph, true);
  return checked_dispersion(floquet_matrix(sub.graph, sub_lab));
}

LaurentPoly symbolic_dispersion(const PeriodicGraph& g) {
  const int d = g.dimension();
  const int n = g.num_orbits();
  const int m = static_cast<int>(g.edge_classes().size());
  const int dim = d + n + m;
  auto variable = [dim](int index, std::span<const std::int64_t> z) {
    Exponent e(dim + 1, 0);
    std::copy(z.begin(), z.end(), e.begin());
    e[index] += 1;
    LaurentPoly p(dim);
    p.add_term(std::move(e), 1);
    return p;
  };
  const Offset origin(d, 0);
  LaurentMatrix mat(n, dim);
  for (int i = 0; i < n; ++i) mat.at(i, i) += variable(d + i, origin);
  for (int k = 0; k < m; ++k) {
    const EdgeClass& e = g.edge_classes()[k];
    mat.at(e.i, e.j) += variable(d + n + k, e.offset);
    mat.at(e.j, e.i) += variable(d + n + k, negated(e.offset));
  }
  return checked_dispersion(mat);
}

Support project_symbolic_support(const LaurentPoly& symbolic, int dimension) {
  Support out;
  for (const auto& [e, c] : symbolic.terms()) {
    Exponent p(e.begin(), e.begin() + dimension);
    p.push_back(e.back());
    out.insert(std::move(p));
  }
  return out;
}

}  // namespace flatband
