#pragma once

#include <optional>
#include <string>
#include <vector>

#include "mgreen/green.hpp"

namespace mgreen {

/// ε_D via g_{μ_D}: (deg D + 2) Σ a_k g(p, p_k) + Σ a_k r(p, p_k), with
/// p = p_{e_0} unless a base point is given.
Rational epsilon_via_green(const PreparedGraph& pg, const Divisor& d);
Rational epsilon_via_green(const PreparedGraph& pg, const Divisor& d, const ValueMatrix& z,
                           const std::optional<GraphPoint>& base = std::nullopt);

/// ε_D = (4 τ deg D + Σ a_k a_l r(p_k, p_l)) / (deg D + 2).
Rational epsilon_via_resistance(const PreparedGraph& pg, const Divisor& d);

struct CheckMismatch {
  std::string location;
  Rational expected;
  Rational got;
};

struct CheckReport {
  std::string name;
  std::size_t comparisons = 0;
  std::vector<CheckMismatch> mismatches;

  bool passed() const { return mismatches.empty(); }
};

/// Every vertex pair (p, q) with v(p) >= 2 evaluated through every incident
/// edge of p and every representation of q must give one value.
CheckReport check_representation_independence(const PreparedGraph& pg, const ValueMatrix& z);
CheckReport check_representation_independence(const PreparedGraph& pg, const Divisor& d);

/// Value matrix at vertex pairs against the direct L⁺ expression
/// (Σ a_s j_s(x,y) + 4τ − r(x,y)) / (deg D + 2) − c_{μ_D}.
CheckReport check_vertex_formula(const PreparedGraph& pg, const ValueMatrix& z);
CheckReport check_vertex_formula(const PreparedGraph& pg, const Divisor& d);

/// g_{μ_D}(p, q) at vertices straight from L⁺.
Rational green_at_vertices(const PreparedGraph& pg, const Divisor& d, VertexIndex p, VertexIndex q);

/// All (edge, offset) representations of vertex v.
std::vector<GraphPoint> vertex_representations(const MetrizedGraph& g, VertexIndex v);

}  // namespace mgreen
