#include "mgreen/green.hpp"

#include <array>
#include <utility>

#include "mgreen/error.hpp"

namespace mgreen {

Rational EdgePairFunction::operator()(const Rational& x, const Rational& y) const {
  return c0 + cx * x + cy * y + cxx * x * x + cyy * y * y + cxy * x * y + cabs * abs(Rational(x - y));
}

EdgePairFunction EdgePairFunction::swapped() const {
  return EdgePairFunction{second, first, c0, cy, cx, cyy, cxx, cxy, cabs};
}

std::string EdgePairFunction::to_string() const {
  const std::array<std::pair<const Rational*, const char*>, 7> terms{{
      {&c0, ""},
      {&cx, "*x"},
      {&cy, "*y"},
      {&cxx, "*x^2"},
      {&cyy, "*y^2"},
      {&cxy, "*x*y"},
      {&cabs, "*|x-y|"},
  }};
  std::string out;
  for (const auto& [coef, monomial] : terms) {
    if (*coef == 0) continue;
    if (out.empty()) {
      out = mgreen::to_string(*coef);
    } else {
      out += *coef < 0 ? " - " : " + ";
      out += mgreen::to_string(abs(*coef));
    }
    out += monomial;
  }
  return out.empty() ? "0" : out;
}

Rational ValueMatrix::evaluate(const GraphPoint& x, const GraphPoint& y) const {
  if (x.edge >= size_ || y.edge >= size_) throw Error(ErrorKind::IndexOutOfRange, "edge index out of range");
  return (*this)(x.edge, y.edge)(x.offset, y.offset);
}

bool ValueMatrix::is_symmetric() const {
  for (EdgeIndex i = 0; i < size_; ++i)
    for (EdgeIndex j = 0; j < size_; ++j)
      if (!((*this)(i, j).swapped() == (*this)(j, i))) return false;
  return true;
}

namespace {

// Adds -1/2 T where T = y*slope + sign*x + constant; the roles of x and y
// are exchanged when the bridge is the second edge.
void subtract_half_bridge_term(EdgePairFunction& z, bool bridge_is_first, const Rational& slope, int sign,
                               const Rational& constant) {
  Rational& along_other = bridge_is_first ? z.cy : z.cx;
  Rational& along_bridge = bridge_is_first ? z.cx : z.cy;
  along_other -= slope / 2;
  along_bridge -= Rational(sign, 2);
  z.c0 -= constant / 2;
}

EdgePairFunction entry_from_tau(const PreparedGraph& pg, const TauFunctionPair& tau, EdgeIndex i, EdgeIndex j) {
  EdgePairFunction z;
  z.first = i;
  z.second = j;
  z.c0 = tau.c0;
  z.cx = tau.cx;
  z.cy = tau.cy;
  z.cxx = tau.cxx;
  z.cyy = tau.cyy;

  const ConnectivityMatrix& c = pg.connectivity();
  const Edge& ei = pg.graph().edge(i);
  const Edge& ej = pg.graph().edge(j);
  const VertexIndex pi = ei.tail, qi = ei.head, pj = ej.tail, qj = ej.head;
  const Rational& li = ei.length;
  const Rational& lj = ej.length;
  const bool bi = c.is_bridge(i);
  const bool bj = c.is_bridge(j);

  if (i == j) {
    z.cabs = Rational(-1, 2);
    if (!bi) {
      const Rational k = pg.curvature(i);
      z.cxx += k / 2;
      z.cyy += k / 2;
      z.cxy -= k;
    }
    return z;
  }

  if (!bi && !bj) {
    z.cxx += pg.curvature(i) / 2;
    z.cyy += pg.curvature(j) / 2;
    z.cxy -= (pg.j(pj, pi, qj) - pg.j(pj, qi, qj)) / (li * lj);
    z.cx -= (li - 2 * pg.j(pi, qi, pj)) / (2 * li);
    z.cy -= (lj - 2 * pg.j(pj, pi, qj)) / (2 * lj);
    z.c0 -= pg.r(pi, pj) / 2;
    return z;
  }

  if (bi && !bj) {
    z.cyy += pg.curvature(j) / 2;
    const Rational rj = pg.r(pj, qj);
    if (c(i, j).side == Side::P) {
      subtract_half_bridge_term(z, true, (lj - rj + pg.r(pi, qj) - pg.r(pi, pj)) / lj, 1, pg.r(pi, pj));
    } else {
      subtract_half_bridge_term(z, true, (lj - rj + pg.r(qi, qj) - pg.r(qi, pj)) / lj, -1, li + pg.r(qi, pj));
    }
    return z;
  }

  if (bj && !bi) {
    z.cxx += pg.curvature(i) / 2;
    const Rational ri = pg.r(pi, qi);
    if (c(i, j).side == Side::P) {
      subtract_half_bridge_term(z, false, (li - ri + pg.r(pj, qi) - pg.r(pj, pi)) / li, 1, pg.r(pj, pi));
    } else {
      subtract_half_bridge_term(z, false, (li - ri + pg.r(qj, qi) - pg.r(qj, pi)) / li, -1, lj + pg.r(qj, pi));
    }
    return z;
  }

  const Rational half(1, 2);
  switch (c(i, j).neighbours) {
    case Neighbours::PP:
      z.cx -= half;
      z.cy -= half;
      z.c0 -= pg.r(pi, pj) / 2;
      break;
    case Neighbours::PQ:
      z.cx -= half;
      z.cy += half;
      z.c0 -= (lj + pg.r(pi, qj)) / 2;
      break;
    case Neighbours::QP:
      z.cx += half;
      z.cy -= half;
      z.c0 -= (li + pg.r(qi, pj)) / 2;
      break;
    case Neighbours::QQ:
      z.cx += half;
      z.cy += half;
      z.c0 -= (li + lj + pg.r(qi, qj)) / 2;
      break;
  }
  return z;
}

}  // namespace

EdgePairFunction value_matrix_entry(const PreparedGraph& pg, const Divisor& d, EdgeIndex i, EdgeIndex j) {
  pg.graph().check_edge(i);
  pg.graph().check_edge(j);
  return entry_from_tau(pg, tau_function_pair(pg, d, i, j), i, j);
}

ValueMatrix value_matrix(const PreparedGraph& pg, const Divisor& d) {
  pg.check_divisor(d);
  require_admissible_degree(d);
  const std::size_t m = pg.graph().edge_count();
  std::vector<EdgeFunction> r_d;
  r_d.reserve(m);
  for (EdgeIndex e = 0; e < m; ++e) r_d.push_back(r_D_on_edge(pg, d, e));
  const Rational c = c_mu_D(pg, d);
  const Rational scale = Rational(1) / Rational(d.degree() + 2);

  std::vector<EdgePairFunction> entries;
  entries.reserve(m * m);
  for (EdgeIndex i = 0; i < m; ++i) {
    for (EdgeIndex j = 0; j < m; ++j) {
      TauFunctionPair tau{i, j,
                          scale * (4 * pg.tau() + (r_d[i].a0 + r_d[j].a0) / 2) - c,
                          scale * r_d[i].a1 / 2,
                          scale * r_d[i].a2 / 2,
                          scale * r_d[j].a1 / 2,
                          scale * r_d[j].a2 / 2};
      entries.push_back(entry_from_tau(pg, tau, i, j));
    }
  }
  ValueMatrix z(d, m, std::move(entries));
  if (!z.is_symmetric()) throw Error(ErrorKind::Internal, "value matrix failed z_ij(x,y) = z_ji(y,x)");
  return z;
}

Rational evaluate_g(const PreparedGraph& pg, const Divisor& d, const GraphPoint& x, const GraphPoint& y) {
  pg.graph().check_point(x);
  pg.graph().check_point(y);
  return value_matrix_entry(pg, d, x.edge, y.edge)(x.offset, y.offset);
}

}  // namespace mgreen
