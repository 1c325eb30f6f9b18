#include "mgreen/oracle.hpp"

#include "mgreen/error.hpp"
#include "mgreen/linalg.hpp"
#include "mgreen/potential.hpp"

namespace mgreen {

SubdividedGraph subdivide_at_points(const MetrizedGraph& g, std::span<const GraphPoint> points) {
  std::vector<std::vector<Rational>> cuts(g.edge_count());
  for (const GraphPoint& x : points) {
    g.check_point(x);
    if (!g.point_is_vertex(x)) cuts[x.edge].push_back(x.offset);
  }
  SubdividedGraph out{refine(g, cuts), {}};
  if (validate_adequate(g) && !validate_adequate(out.graph())) {
    throw Error(ErrorKind::Internal, "subdividing an adequate graph produced loops or parallel edges");
  }
  for (const GraphPoint& x : points) {
    VertexIndex v = 0;
    const GraphPoint mapped = out.refinement.map_point(x);
    if (!out.graph().point_is_vertex(mapped, &v)) {
      throw Error(ErrorKind::Internal, "subdivided point is not a vertex");
    }
    out.point_vertices.push_back(v);
  }
  return out;
}

Rational oracle_resistance(const MetrizedGraph& g, const GraphPoint& x, const GraphPoint& y) {
  const std::vector<GraphPoint> points{x, y};
  const SubdividedGraph sub = subdivide_at_points(g, points);
  const RationalMatrix lplus = pseudo_inverse(laplacian(sub.graph()));
  return resistance_at_vertices(lplus, sub.point_vertices[0], sub.point_vertices[1]);
}

Rational oracle_green(const MetrizedGraph& g, const Divisor& d, const GraphPoint& x, const GraphPoint& y) {
  require_admissible_degree(d);
  const std::vector<GraphPoint> points{x, y};
  const SubdividedGraph sub = subdivide_at_points(g, points);
  const Divisor dd = sub.refinement.map_divisor(d);
  const MetrizedGraph& h = sub.graph();
  const RationalMatrix lap = laplacian(h);
  const RationalMatrix lplus = pseudo_inverse(lap);
  const Rational tau = tau_constant(h, lap, lplus);
  const VertexIndex u = sub.point_vertices[0];
  const VertexIndex v = sub.point_vertices[1];
  const std::int64_t deg = dd.degree();

  Rational voltage_sum = 0;
  Rational pair_sum = 0;
  for (VertexIndex s = 0; s < h.vertex_count(); ++s) {
    if (dd[s] == 0) continue;
    voltage_sum += dd[s] * voltage_at_vertices(lplus, s, u, v);
    for (VertexIndex t = 0; t < h.vertex_count(); ++t) {
      if (dd[t] != 0) pair_sum += Rational(dd[s] * dd[t]) * resistance_at_vertices(lplus, s, t);
    }
  }
  const Rational shift(deg + 2);
  const Rational c = (8 * tau * Rational(deg + 1) + pair_sum) / (2 * shift * shift);
  return (voltage_sum + 4 * tau - resistance_at_vertices(lplus, u, v)) / shift - c;
}

}  // namespace mgreen
