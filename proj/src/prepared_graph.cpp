#include "mgreen/prepared_graph.hpp"

#include "mgreen/error.hpp"
#include "mgreen/potential.hpp"

namespace mgreen {

PreparedGraph::PreparedGraph(MetrizedGraph graph)
    : graph_(std::move(graph)),
      laplacian_(mgreen::laplacian(graph_)),
      pseudo_inverse_(mgreen::pseudo_inverse(laplacian_)),
      connectivity_(connectivity_matrix(graph_)),
      tau_(tau_constant(graph_, laplacian_, pseudo_inverse_)) {}

Rational PreparedGraph::curvature(EdgeIndex e) const {
  const Edge& edge = graph_.edge(e);
  return (edge.length - r(edge.tail, edge.head)) / (edge.length * edge.length);
}

void PreparedGraph::check_divisor(const Divisor& d) const {
  if (d.size() != graph_.vertex_count()) {
    throw Error(ErrorKind::IndexOutOfRange, "divisor has " + std::to_string(d.size()) + " entries but the graph has " +
                                                std::to_string(graph_.vertex_count()) + " vertices");
  }
}

}  // namespace mgreen
