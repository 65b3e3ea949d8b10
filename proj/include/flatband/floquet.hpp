#ifndef FLATBAND_FLOQUET_HPP
#define FLATBAND_FLOQUET_HPP

#include <span>

#include "flatband/graph.hpp"
#include "flatband/laurent.hpp"

namespace flatband {

/// L(z) for a labeled periodic graph, with its dispersion polynomial
/// det(L(z) - λI) computed once at construction.
class FloquetMatrix {
public:
  FloquetMatrix(PeriodicGraph graph, Labeling labeling, bool allow_zero_weights = false);

  const LaurentMatrix& matrix() const { return matrix_; }
  const PeriodicGraph& graph() const { return graph_; }
  const Labeling& labeling() const { return labeling_; }
  const LaurentPoly& dispersion() const { return dispersion_; }

private:
  PeriodicGraph graph_;
  Labeling labeling_;
  LaurentMatrix matrix_;
  LaurentPoly dispersion_;
};

/// Entry (i, i) is v_i plus e(z^a + z^-a) per self-orbit class; entry
/// (i, j) collects e z^a over classes (i, j, a) in either orientation.
LaurentMatrix floquet_matrix(const PeriodicGraph& g, const Labeling& lab);

FloquetMatrix build_floquet(const PeriodicGraph& g, const Labeling& lab);

/// det(L(z) - λI); the λ^n coefficient is checked to be (-1)^n.
LaurentPoly dispersion(const FloquetMatrix& f);

/// Dispersion polynomial of the induced operator on Γ_U.
LaurentPoly induced_dispersion(const PeriodicGraph& g, const Labeling& lab, std::span<const Orbit> subset);

/// D with every potential and weight kept as an indeterminate. The result
/// lives in dimension d + n + m with variables ordered
/// (z_1..z_d, v_1..v_n, e_1..e_m) before λ, e_k following edge_classes().
/// Exponential in n; meant for small graphs.
LaurentPoly symbolic_dispersion(const PeriodicGraph& g);

/// Drops the label variables of a symbolic_dispersion() result, keeping
/// (z, λ) exponents.
Support project_symbolic_support(const LaurentPoly& symbolic, int dimension);

}  // namespace flatband

#endif
