#pragma once

#include <span>
#include <vector>

#include "mgreen/graph.hpp"
#include "mgreen/prepared_graph.hpp"

namespace mgreen {

/// A graph in which requested points have been promoted to vertices.
struct SubdividedGraph {
  Refinement refinement;
  /// Vertex index (in the refined graph) of each requested point, in order.
  std::vector<VertexIndex> point_vertices;

  const MetrizedGraph& graph() const { return refinement.graph(); }
};

/// Splits edges at the interior points among `points`; points at offsets 0
/// or L map to the existing vertices. Coincident points share a vertex.
SubdividedGraph subdivide_at_points(const MetrizedGraph& g, std::span<const GraphPoint> points);

/// r(x, y) recomputed from the pseudoinverse of the subdivided graph.
Rational oracle_resistance(const MetrizedGraph& g, const GraphPoint& x, const GraphPoint& y);

/// g_{μ_D}(x, y) from the vertex expression on the subdivided graph, with
/// τ and c_{μ_D} also recomputed there.
Rational oracle_green(const MetrizedGraph& g, const Divisor& d, const GraphPoint& x, const GraphPoint& y);

}  // namespace mgreen
