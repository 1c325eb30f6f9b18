#pragma once

#include "mgreen/connectivity.hpp"
#include "mgreen/graph.hpp"
#include "mgreen/linalg.hpp"

namespace mgreen {

/// An adequate graph together with the data every computation reads:
/// L, L⁺, the connectivity matrix and τ(Γ). Built once, then read-only.
class PreparedGraph {
 public:
  /// Throws NotAdequate if the vertex set has loops or parallel edges.
  explicit PreparedGraph(MetrizedGraph graph);

  const MetrizedGraph& graph() const { return graph_; }
  const RationalMatrix& laplacian() const { return laplacian_; }
  const RationalMatrix& pseudo_inverse() const { return pseudo_inverse_; }
  const ConnectivityMatrix& connectivity() const { return connectivity_; }
  const Rational& tau() const { return tau_; }

  Rational r(VertexIndex p, VertexIndex q) const { return resistance_at_vertices(pseudo_inverse_, p, q); }
  Rational j(VertexIndex s, VertexIndex p, VertexIndex q) const {
    return voltage_at_vertices(pseudo_inverse_, s, p, q);
  }

  /// (L - r(p, q)) / L^2 for edge e: minus the x^2 coefficient of r(p, x) on e.
  Rational curvature(EdgeIndex e) const;

  /// Throws unless d has one entry per vertex.
  void check_divisor(const Divisor& d) const;

 private:
  MetrizedGraph graph_;
  RationalMatrix laplacian_;
  RationalMatrix pseudo_inverse_;
  ConnectivityMatrix connectivity_;
  Rational tau_;
};

}  // namespace mgreen
