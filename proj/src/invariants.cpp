#include "mgreen/invariants.hpp"

#include "mgreen/error.hpp"

namespace mgreen {

std::vector<GraphPoint> vertex_representations(const MetrizedGraph& g, VertexIndex v) {
  std::vector<GraphPoint> out;
  for (EdgeIndex e : g.incident_edges(v)) {
    const Edge& edge = g.edge(e);
    if (edge.tail == v) out.push_back({e, Rational(0)});
    if (edge.head == v) out.push_back({e, edge.length});
  }
  return out;
}

Rational epsilon_via_green(const PreparedGraph& pg, const Divisor& d) {
  return epsilon_via_green(pg, d, value_matrix(pg, d));
}

Rational epsilon_via_green(const PreparedGraph& pg, const Divisor& d, const ValueMatrix& z,
                           const std::optional<GraphPoint>& base) {
  pg.check_divisor(d);
  require_admissible_degree(d);
  const MetrizedGraph& g = pg.graph();
  const GraphPoint p = base.value_or(GraphPoint{0, Rational(0)});
  g.check_point(p);

  Rational green_sum = 0;
  Rational resistance_sum = 0;
  for (VertexIndex k = 0; k < g.vertex_count(); ++k) {
    if (d[k] == 0) continue;
    // First edge having p_k as an endpoint, as tail before head.
    std::optional<GraphPoint> pk;
    for (EdgeIndex l = 0; l < g.edge_count() && !pk; ++l) {
      const Edge& e = g.edge(l);
      if (e.tail == k) pk = GraphPoint{l, Rational(0)};
      else if (e.head == k) pk = GraphPoint{l, e.length};
    }
    if (!pk) throw Error(ErrorKind::Internal, "vertex " + std::to_string(k) + " lies on no edge");
    green_sum += d[k] * z.evaluate(p, *pk);
    resistance_sum += d[k] * resistance_point(pg, p, *pk);
  }
  return Rational(d.degree() + 2) * green_sum + resistance_sum;
}

Rational epsilon_via_resistance(const PreparedGraph& pg, const Divisor& d) {
  pg.check_divisor(d);
  require_admissible_degree(d);
  const std::size_t n = pg.graph().vertex_count();
  Rational pair_sum = 0;
  for (VertexIndex k = 0; k < n; ++k) {
    if (d[k] == 0) continue;
    for (VertexIndex l = 0; l < n; ++l) {
      if (d[l] != 0) pair_sum += Rational(d[k] * d[l]) * pg.r(k, l);
    }
  }
  return (4 * pg.tau() * Rational(d.degree()) + pair_sum) / Rational(d.degree() + 2);
}

Rational green_at_vertices(const PreparedGraph& pg, const Divisor& d, VertexIndex p, VertexIndex q) {
  pg.check_divisor(d);
  require_admissible_degree(d);
  Rational voltage_sum = 0;
  for (VertexIndex s = 0; s < pg.graph().vertex_count(); ++s) {
    if (d[s] != 0) voltage_sum += d[s] * pg.j(s, p, q);
  }
  return (voltage_sum + 4 * pg.tau() - pg.r(p, q)) / Rational(d.degree() + 2) - c_mu_D(pg, d);
}

namespace {

std::string describe(const MetrizedGraph& g, const GraphPoint& x) {
  return "(e" + std::to_string(x.edge) + "," + to_string(x.offset) + ")=" + g.label(
      x.offset == 0 ? g.edge(x.edge).tail : g.edge(x.edge).head);
}

}  // namespace

CheckReport check_representation_independence(const PreparedGraph& pg, const Divisor& d) {
  return check_representation_independence(pg, value_matrix(pg, d));
}

CheckReport check_representation_independence(const PreparedGraph& pg, const ValueMatrix& z) {
  const MetrizedGraph& g = pg.graph();
  CheckReport report{"representation-independence", 0, {}};
  for (VertexIndex p = 0; p < g.vertex_count(); ++p) {
    if (g.valence(p) < 2) continue;
    const auto p_reps = vertex_representations(g, p);
    for (VertexIndex q = 0; q < g.vertex_count(); ++q) {
      const auto q_reps = vertex_representations(g, q);
      const Rational reference = z.evaluate(p_reps.front(), q_reps.front());
      for (const GraphPoint& x : p_reps) {
        for (const GraphPoint& y : q_reps) {
          ++report.comparisons;
          const Rational got = z.evaluate(x, y);
          if (got != reference) {
            report.mismatches.push_back(
                {"z[" + std::to_string(x.edge) + "][" + std::to_string(y.edge) + "] at " + describe(g, x) + ", " +
                     describe(g, y),
                 reference, got});
          }
        }
      }
    }
  }
  return report;
}

CheckReport check_vertex_formula(const PreparedGraph& pg, const Divisor& d) {
  return check_vertex_formula(pg, value_matrix(pg, d));
}

CheckReport check_vertex_formula(const PreparedGraph& pg, const ValueMatrix& z) {
  const MetrizedGraph& g = pg.graph();
  const Divisor& d = z.divisor();
  CheckReport report{"vertex-formula", 0, {}};
  for (VertexIndex p = 0; p < g.vertex_count(); ++p) {
    const GraphPoint x = g.vertex_point(p);
    for (VertexIndex q = 0; q < g.vertex_count(); ++q) {
      const GraphPoint y = g.vertex_point(q);
      ++report.comparisons;
      const Rational expected = green_at_vertices(pg, d, p, q);
      const Rational got = z.evaluate(x, y);
      if (expected != got) {
        report.mismatches.push_back({"g(" + g.label(p) + "," + g.label(q) + ")", expected, got});
      }
    }
  }
  return report;
}

}  // namespace mgreen
