#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "mgreen/rational.hpp"

namespace mgreen {

using VertexIndex = std::size_t;
using EdgeIndex = std::size_t;

/// Which end of a parametrized edge: P is offset 0 (the tail), Q is offset L (the head).
enum class Side : std::uint8_t { P = 0, Q = 1 };

/// An edge [0, length] running from `tail` (offset 0) to `head` (offset length).
struct Edge {
  VertexIndex tail = 0;
  VertexIndex head = 0;
  Rational length;

  VertexIndex endpoint(Side side) const { return side == Side::P ? tail : head; }
  bool has_endpoint(VertexIndex v) const { return tail == v || head == v; }
  bool is_loop() const { return tail == head; }
};

/// A point of the graph in edge coordinates. A vertex has one representation
/// per incident edge end.
struct GraphPoint {
  EdgeIndex edge = 0;
  Rational offset;

  friend bool operator==(const GraphPoint&, const GraphPoint&) = default;
};

/// Connected finite graph with positive rational edge lengths. Immutable;
/// the constructor rejects disconnected input and nonpositive lengths.
class MetrizedGraph {
 public:
  MetrizedGraph(std::vector<std::string> labels, std::vector<Edge> edges);

  /// Labels default to "p0", "p1", ...
  static MetrizedGraph with_vertex_count(std::size_t n, std::vector<Edge> edges);

  std::size_t vertex_count() const { return labels_.size(); }
  std::size_t edge_count() const { return edges_.size(); }

  const Edge& edge(EdgeIndex e) const;
  std::span<const Edge> edges() const { return edges_; }
  const std::string& label(VertexIndex v) const;
  const std::vector<std::string>& labels() const { return labels_; }

  /// Edges with `v` as an endpoint, ascending, loops listed once.
  const std::vector<EdgeIndex>& incident_edges(VertexIndex v) const;

  /// Number of directions emanating from `v`; a loop counts twice.
  std::size_t valence(VertexIndex v) const;

  Rational total_length() const;

  /// Some representation of vertex `v` as a GraphPoint (its lowest incident edge).
  GraphPoint vertex_point(VertexIndex v) const;

  /// The vertex a point coincides with, if its offset is 0 or L.
  bool point_is_vertex(const GraphPoint& x, VertexIndex* vertex = nullptr) const;

  void check_vertex(VertexIndex v) const;
  void check_edge(EdgeIndex e) const;
  void check_point(const GraphPoint& x) const;

 private:
  std::vector<std::string> labels_;
  std::vector<Edge> edges_;
  std::vector<std::vector<EdgeIndex>> incidence_;
};

/// Integer divisor D = sum a_k p_k supported on the vertex set.
struct Divisor {
  std::vector<std::int64_t> coefficients;

  static Divisor zero(std::size_t n) { return Divisor{std::vector<std::int64_t>(n, 0)}; }

  std::int64_t degree() const;
  bool is_zero() const;
  bool is_effective() const;
  std::size_t size() const { return coefficients.size(); }
  std::int64_t operator[](VertexIndex v) const { return coefficients[v]; }

  friend bool operator==(const Divisor&, const Divisor&) = default;
};

/// Which endpoint pair realizes the distance between two bridges:
/// first letter for e_i, second for e_j.
enum class Neighbours : std::uint8_t { PP = 0, PQ = 1, QP = 2, QQ = 3 };

inline Side first_side(Neighbours b) { return (static_cast<int>(b) & 2) ? Side::Q : Side::P; }
inline Side second_side(Neighbours b) { return (static_cast<int>(b) & 1) ? Side::Q : Side::P; }
inline Neighbours make_neighbours(Side first, Side second) {
  return static_cast<Neighbours>((first == Side::Q ? 2 : 0) + (second == Side::Q ? 1 : 0));
}

/// Bridge topology of an ordered edge pair (e_i, e_j).
///
/// Decimal display codes: NotApplicable 0, SelfBridge 1, Side 0/1 (alpha),
/// BridgePair 100*alpha + beta where beta is written in binary digits
/// (0, 1, 10, 11). The code alone is ambiguous (1 means three things), so
/// decoding needs the row/column bridge flags.
struct ConnectivityEntry {
  enum class Kind : std::uint8_t { NotApplicable, SelfBridge, Side, BridgePair };

  Kind kind = Kind::NotApplicable;
  /// For Side: the side of the bridge containing the non-bridge edge.
  /// For BridgePair: the side of e_i containing e_j.
  mgreen::Side side = mgreen::Side::P;
  /// BridgePair only.
  Neighbours neighbours = Neighbours::PP;

  static ConnectivityEntry not_applicable() { return {}; }
  static ConnectivityEntry self_bridge() { return {Kind::SelfBridge, mgreen::Side::P, Neighbours::PP}; }
  static ConnectivityEntry one_bridge(mgreen::Side s) { return {Kind::Side, s, Neighbours::PP}; }
  static ConnectivityEntry bridge_pair(mgreen::Side s, Neighbours b) { return {Kind::BridgePair, s, b}; }

  int code() const;

  /// Inverse of code() given the context that disambiguates it.
  static ConnectivityEntry decode(int code, bool diagonal, bool row_is_bridge, bool column_is_bridge);

  friend bool operator==(const ConnectivityEntry&, const ConnectivityEntry&) = default;
};

/// Result of splitting edges of a graph at interior points. Original
/// vertices keep their indices; new vertices are appended; each original
/// edge is replaced by its pieces, in order, with the same orientation.
class Refinement {
 public:
  const MetrizedGraph& graph() const { return graph_; }
  std::size_t original_vertex_count() const { return original_vertex_count_; }

  GraphPoint map_point(const GraphPoint& x) const;
  VertexIndex map_vertex(VertexIndex v) const { return v; }
  /// Pads with zeros for the new vertices.
  Divisor map_divisor(const Divisor& d) const;
  bool is_identity() const { return identity_; }

 private:
  friend Refinement refine(const MetrizedGraph& g, const std::vector<std::vector<Rational>>& cuts);

  struct Piece {
    EdgeIndex new_edge;
    Rational start;
    Rational length;
  };

  Refinement(MetrizedGraph graph, std::size_t n0, std::vector<std::vector<Piece>> pieces, bool identity)
      : graph_(std::move(graph)), original_vertex_count_(n0), pieces_(std::move(pieces)), identity_(identity) {}

  MetrizedGraph graph_;
  std::size_t original_vertex_count_;
  std::vector<std::vector<Piece>> pieces_;
  bool identity_;
};

/// Splits edge e at each offset in cuts[e] (strictly interior, any order,
/// duplicates ignored).
Refinement refine(const MetrizedGraph& g, const std::vector<std::vector<Rational>>& cuts);

/// True iff no loops and no two edges join the same unordered vertex pair.
bool validate_adequate(const MetrizedGraph& g);

/// Isometric subdivision to an adequate vertex set: every loop is split at
/// its trisection points and, within each class of parallel edges, every
/// edge but the lowest-indexed one is split at its midpoint.
Refinement make_adequate(const MetrizedGraph& g);

/// True iff removing the interior of e disconnects the graph.
bool is_bridge(const MetrizedGraph& g, EdgeIndex e);

/// Component of Γ − bridge holding `vertex`; endpoints belong to their own side.
Side bridge_side(const MetrizedGraph& g, EdgeIndex bridge, VertexIndex vertex);

/// Component of Γ − bridge holding edge `target` (alpha: P ↔ 0, Q ↔ 1).
Side bridge_side_of_edge(const MetrizedGraph& g, EdgeIndex bridge, EdgeIndex target);

/// Geodesic distance between vertices.
Rational shortest_distance(const MetrizedGraph& g, VertexIndex u, VertexIndex v);

/// Single-source geodesic distances to all vertices.
std::vector<Rational> distances_from(const MetrizedGraph& g, VertexIndex source);

struct ClosestNeighbours {
  VertexIndex on_first;
  VertexIndex on_second;
  Neighbours which;
};

/// Endpoint pair of two distinct bridges at minimal distance.
ClosestNeighbours closest_neighbours(const MetrizedGraph& g, EdgeIndex first, EdgeIndex second);

struct CanonicalDivisor {
  Divisor divisor;
  bool polarized;
};

/// K = sum (v(s) - 2 + 2 q(s)) s; polarized iff q >= 0 and K is effective.
CanonicalDivisor canonical_divisor(const MetrizedGraph& g, std::span<const std::int64_t> genus);

/// Same graph with every length multiplied by `factor`.
MetrizedGraph scaled(const MetrizedGraph& g, const Rational& factor);

/// Same graph with edge e traversed in the opposite direction.
MetrizedGraph with_reversed_edge(const MetrizedGraph& g, EdgeIndex e);

}  // namespace mgreen
