#include "mgreen/potential.hpp"

#include "mgreen/error.hpp"

namespace mgreen {

EdgeFunction operator+(const EdgeFunction& f, const EdgeFunction& h) {
  if (f.edge != h.edge) throw Error(ErrorKind::IndexOutOfRange, "edge functions live on different edges");
  return EdgeFunction{f.edge, f.a2 + h.a2, f.a1 + h.a1, f.a0 + h.a0};
}

void require_admissible_degree(const Divisor& d) {
  if (d.degree() == -2) {
    throw Error(ErrorKind::BadDegree, "deg(D) = -2 has no admissible measure");
  }
}

Rational tau_constant(const MetrizedGraph& g, const RationalMatrix& lap, const RationalMatrix& lplus) {
  const std::size_t n = g.vertex_count();
  Rational edge_sum = 0;
  for (const Edge& e : g.edges()) {
    const Rational& l = lap(e.tail, e.head);
    const Rational inner = 1 / l + resistance_at_vertices(lplus, e.tail, e.head);
    edge_sum += l * inner * inner;
  }
  Rational cross_sum = 0;
  for (std::size_t q = 0; q < n; ++q)
    for (std::size_t s = 0; s < n; ++s) cross_sum += lap(q, s) * lplus(q, q) * lplus(s, s);
  Rational trace = 0;
  for (std::size_t k = 0; k < n; ++k) trace += lplus(k, k);
  return -edge_sum / 12 + cross_sum / 4 + trace / n;
}

Rational tau_constant(const MetrizedGraph& g) { return PreparedGraph(g).tau(); }

namespace {

// r(x, y) for x, y on the same edge e.
Rational resistance_same_edge(const PreparedGraph& pg, EdgeIndex e, const Rational& x, const Rational& y) {
  const Rational diff = x - y;
  if (pg.connectivity().is_bridge(e)) return abs(diff);
  return abs(diff) - diff * diff * pg.curvature(e);
}

// r(x, y) with e_i a bridge and e_j not.
Rational resistance_one_bridge(const PreparedGraph& pg, EdgeIndex i, const Rational& x, EdgeIndex j,
                               const Rational& y) {
  const Edge& ei = pg.graph().edge(i);
  const Edge& ej = pg.graph().edge(j);
  const Rational& lj = ej.length;
  const Rational quadratic = -y * y * pg.curvature(j);
  const Rational rj = pg.r(ej.tail, ej.head);
  if (pg.connectivity()(i, j).side == Side::P) {
    const Rational t1 = y * (lj - rj + pg.r(ei.tail, ej.head) - pg.r(ei.tail, ej.tail)) / lj + x + pg.r(ei.tail, ej.tail);
    return quadratic + t1;
  }
  const Rational t2 =
      y * (lj - rj + pg.r(ei.head, ej.head) - pg.r(ei.head, ej.tail)) / lj - x + ei.length + pg.r(ei.head, ej.tail);
  return quadratic + t2;
}

}  // namespace

Rational resistance_point(const PreparedGraph& pg, const GraphPoint& x, const GraphPoint& y) {
  const MetrizedGraph& g = pg.graph();
  g.check_point(x);
  g.check_point(y);
  VertexIndex u = 0;
  VertexIndex v = 0;
  if (g.point_is_vertex(x, &u) && g.point_is_vertex(y, &v)) return pg.r(u, v);
  if (x.edge == y.edge) return resistance_same_edge(pg, x.edge, x.offset, y.offset);

  const EdgeIndex i = x.edge;
  const EdgeIndex j = y.edge;
  const ConnectivityMatrix& c = pg.connectivity();
  const bool bi = c.is_bridge(i);
  const bool bj = c.is_bridge(j);
  if (bi && !bj) return resistance_one_bridge(pg, i, x.offset, j, y.offset);
  if (bj && !bi) return resistance_one_bridge(pg, j, y.offset, i, x.offset);

  const Edge& ei = g.edge(i);
  const Edge& ej = g.edge(j);
  const Rational& li = ei.length;
  const Rational& lj = ej.length;
  const Rational& xo = x.offset;
  const Rational& yo = y.offset;
  if (bi && bj) {
    switch (c(i, j).neighbours) {
      case Neighbours::PP: return xo + yo + pg.r(ei.tail, ej.tail);
      case Neighbours::PQ: return xo - yo + lj + pg.r(ei.tail, ej.head);
      case Neighbours::QP: return -xo + yo + li + pg.r(ei.head, ej.tail);
      case Neighbours::QQ: return -xo - yo + li + lj + pg.r(ei.head, ej.head);
    }
  }
  const VertexIndex pi = ei.tail, qi = ei.head, pj = ej.tail, qj = ej.head;
  return -xo * xo * pg.curvature(i) - yo * yo * pg.curvature(j) +
         2 * xo * yo / (li * lj) * (pg.j(pj, pi, qj) - pg.j(pj, qi, qj)) +
         xo / li * (li - 2 * pg.j(pi, qi, pj)) + yo / lj * (lj - 2 * pg.j(pj, pi, qj)) + pg.r(pi, pj);
}

EdgeFunction r_D_on_edge(const PreparedGraph& pg, const Divisor& d, EdgeIndex i) {
  pg.check_divisor(d);
  const MetrizedGraph& g = pg.graph();
  const Edge& e = g.edge(i);
  const Rational& len = e.length;
  const ConnectivityMatrix& c = pg.connectivity();
  EdgeFunction f{i, 0, 0, 0};

  if (!c.is_bridge(i)) {
    const Rational rpq = pg.r(e.tail, e.head);
    const Rational curv = pg.curvature(i);
    for (VertexIndex k = 0; k < g.vertex_count(); ++k) {
      const std::int64_t a = d[k];
      if (a == 0) continue;
      f.a2 -= a * curv;
      f.a1 += a * (len - rpq + pg.r(k, e.head) - pg.r(k, e.tail)) / len;
      f.a0 += a * pg.r(k, e.tail);
    }
    return f;
  }

  for (VertexIndex k = 0; k < g.vertex_count(); ++k) {
    const std::int64_t a = d[k];
    if (a == 0) continue;
    if (k == e.tail) {
      f.a1 += a;
    } else if (k == e.head) {
      f.a1 -= a;
      f.a0 += a * len;
    } else {
      // Any other edge at p_k lies on the same side of the bridge as p_k.
      bool routed = false;
      for (EdgeIndex j : g.incident_edges(k)) {
        if (j == i) continue;
        if (c(i, j).side == Side::P) {
          f.a1 += a;
          f.a0 += a * pg.r(k, e.tail);
        } else {
          f.a1 -= a;
          f.a0 += a * (len + pg.r(k, e.head));
        }
        routed = true;
        break;
      }
      if (!routed) throw Error(ErrorKind::Internal, "vertex " + std::to_string(k) + " has no incident edge");
    }
  }
  return f;
}

Rational c_mu_D(const PreparedGraph& pg, const Divisor& d) {
  pg.check_divisor(d);
  require_admissible_degree(d);
  const std::int64_t deg = d.degree();
  const std::size_t n = pg.graph().vertex_count();
  Rational pair_sum = 0;
  for (VertexIndex s = 0; s < n; ++s) {
    if (d[s] == 0) continue;
    for (VertexIndex t = 0; t < n; ++t) {
      if (d[t] == 0) continue;
      pair_sum += Rational(d[s] * d[t]) * pg.r(s, t);
    }
  }
  const Rational shift(deg + 2);
  return (8 * pg.tau() * Rational(deg + 1) + pair_sum) / (2 * shift * shift);
}

TauFunctionPair tau_function_pair(const PreparedGraph& pg, const Divisor& d, EdgeIndex i, EdgeIndex j) {
  require_admissible_degree(d);
  const EdgeFunction ri = r_D_on_edge(pg, d, i);
  const EdgeFunction rj = r_D_on_edge(pg, d, j);
  const Rational scale = Rational(1) / Rational(d.degree() + 2);
  TauFunctionPair t;
  t.first = i;
  t.second = j;
  t.c0 = scale * (4 * pg.tau() + (ri.a0 + rj.a0) / 2) - c_mu_D(pg, d);
  t.cx = scale * ri.a1 / 2;
  t.cxx = scale * ri.a2 / 2;
  t.cy = scale * rj.a1 / 2;
  t.cyy = scale * rj.a2 / 2;
  return t;
}

}  // namespace mgreen
