#pragma once

#include "mgreen/graph.hpp"
#include "mgreen/linalg.hpp"
#include "mgreen/prepared_graph.hpp"
#include "mgreen/rational.hpp"

namespace mgreen {

/// a2 x^2 + a1 x + a0 on [0, L_edge].
struct EdgeFunction {
  EdgeIndex edge = 0;
  Rational a2;
  Rational a1;
  Rational a0;

  Rational operator()(const Rational& x) const { return (a2 * x + a1) * x + a0; }

  friend EdgeFunction operator+(const EdgeFunction& f, const EdgeFunction& h);
  friend bool operator==(const EdgeFunction&, const EdgeFunction&) = default;
};

/// τ_D on e_i × e_j: c0 + cx x + cxx x^2 + cy y + cyy y^2.
struct TauFunctionPair {
  EdgeIndex first = 0;
  EdgeIndex second = 0;
  Rational c0;
  Rational cx;
  Rational cxx;
  Rational cy;
  Rational cyy;

  Rational operator()(const Rational& x, const Rational& y) const {
    return c0 + (cxx * x + cx) * x + (cyy * y + cy) * y;
  }

  friend bool operator==(const TauFunctionPair&, const TauFunctionPair&) = default;
};

/// τ(Γ) from L and L⁺.
Rational tau_constant(const MetrizedGraph& g, const RationalMatrix& lap, const RationalMatrix& lplus);

/// Convenience: prepares the graph and returns τ(Γ).
Rational tau_constant(const MetrizedGraph& g);

/// Effective resistance between arbitrary points.
Rational resistance_point(const PreparedGraph& pg, const GraphPoint& x, const GraphPoint& y);

/// r(D, ·) = Σ a_s r(s, ·) restricted to edge i.
EdgeFunction r_D_on_edge(const PreparedGraph& pg, const Divisor& d, EdgeIndex i);

/// c_{μ_D}. Throws BadDegree when deg(D) = -2.
Rational c_mu_D(const PreparedGraph& pg, const Divisor& d);

/// τ_D on e_i × e_j. Throws BadDegree when deg(D) = -2.
TauFunctionPair tau_function_pair(const PreparedGraph& pg, const Divisor& d, EdgeIndex i, EdgeIndex j);

/// Throws BadDegree when deg(D) = -2.
void require_admissible_degree(const Divisor& d);

}  // namespace mgreen
