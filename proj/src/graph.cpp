#include "mgreen/graph.hpp"

#include <algorithm>
#include <map>
#include <optional>

#include "mgreen/error.hpp"

namespace mgreen {

namespace {

// Vertices reachable from `start` without traversing edge `skip` (pass
// edge_count() to skip nothing).
std::vector<bool> reachable(const MetrizedGraph& g, VertexIndex start, EdgeIndex skip) {
  std::vector<bool> seen(g.vertex_count(), false);
  std::vector<VertexIndex> stack{start};
  seen[start] = true;
  while (!stack.empty()) {
    const VertexIndex v = stack.back();
    stack.pop_back();
    for (EdgeIndex e : g.incident_edges(v)) {
      if (e == skip) continue;
      const Edge& edge = g.edge(e);
      const VertexIndex w = edge.tail == v ? edge.head : edge.tail;
      if (!seen[w]) {
        seen[w] = true;
        stack.push_back(w);
      }
    }
  }
  return seen;
}

void require_bridge(const MetrizedGraph& g, EdgeIndex e) {
  if (!is_bridge(g, e)) {
    throw Error(ErrorKind::NotABridge, "edge " + std::to_string(e) + " is not a bridge");
  }
}

}  // namespace

MetrizedGraph::MetrizedGraph(std::vector<std::string> labels, std::vector<Edge> edges)
    : labels_(std::move(labels)), edges_(std::move(edges)) {
  if (labels_.empty()) throw Error(ErrorKind::IndexOutOfRange, "graph needs at least one vertex");
  if (edges_.empty()) throw Error(ErrorKind::IndexOutOfRange, "graph needs at least one edge");
  incidence_.assign(labels_.size(), {});
  for (EdgeIndex e = 0; e < edges_.size(); ++e) {
    Edge& edge = edges_[e];
    if (edge.tail >= labels_.size() || edge.head >= labels_.size()) {
      throw Error(ErrorKind::IndexOutOfRange, "edge " + std::to_string(e) + " references a missing vertex");
    }
    edge.length.canonicalize();
    if (edge.length <= 0) {
      throw Error(ErrorKind::NonpositiveLength,
                  "edge " + std::to_string(e) + " has length " + to_string(edge.length));
    }
    incidence_[edge.tail].push_back(e);
    if (edge.head != edge.tail) incidence_[edge.head].push_back(e);
  }
  const auto seen = reachable(*this, 0, edges_.size());
  if (std::find(seen.begin(), seen.end(), false) != seen.end()) {
    throw Error(ErrorKind::GraphDisconnected, "graph is not connected");
  }
}

MetrizedGraph MetrizedGraph::with_vertex_count(std::size_t n, std::vector<Edge> edges) {
  std::vector<std::string> labels;
  labels.reserve(n);
  for (std::size_t v = 0; v < n; ++v) labels.push_back("p" + std::to_string(v));
  return MetrizedGraph(std::move(labels), std::move(edges));
}

void MetrizedGraph::check_vertex(VertexIndex v) const {
  if (v >= labels_.size()) {
    throw Error(ErrorKind::IndexOutOfRange,
                "vertex " + std::to_string(v) + " out of range (n = " + std::to_string(labels_.size()) + ")");
  }
}

void MetrizedGraph::check_edge(EdgeIndex e) const {
  if (e >= edges_.size()) {
    throw Error(ErrorKind::IndexOutOfRange,
                "edge " + std::to_string(e) + " out of range (m = " + std::to_string(edges_.size()) + ")");
  }
}

void MetrizedGraph::check_point(const GraphPoint& x) const {
  check_edge(x.edge);
  if (x.offset < 0 || x.offset > edges_[x.edge].length) {
    throw Error(ErrorKind::IndexOutOfRange, "offset " + to_string(x.offset) + " outside edge " +
                                                std::to_string(x.edge) + " of length " +
                                                to_string(edges_[x.edge].length));
  }
}

const Edge& MetrizedGraph::edge(EdgeIndex e) const {
  check_edge(e);
  return edges_[e];
}

const std::string& MetrizedGraph::label(VertexIndex v) const {
  check_vertex(v);
  return labels_[v];
}

const std::vector<EdgeIndex>& MetrizedGraph::incident_edges(VertexIndex v) const {
  check_vertex(v);
  return incidence_[v];
}

std::size_t MetrizedGraph::valence(VertexIndex v) const {
  std::size_t count = 0;
  for (EdgeIndex e : incident_edges(v)) count += edges_[e].is_loop() ? 2 : 1;
  return count;
}

Rational MetrizedGraph::total_length() const {
  Rational total = 0;
  for (const Edge& e : edges_) total += e.length;
  return total;
}

GraphPoint MetrizedGraph::vertex_point(VertexIndex v) const {
  const EdgeIndex e = incident_edges(v).front();
  const Edge& edge = edges_[e];
  return GraphPoint{e, edge.tail == v ? Rational(0) : edge.length};
}

bool MetrizedGraph::point_is_vertex(const GraphPoint& x, VertexIndex* vertex) const {
  check_point(x);
  const Edge& edge = edges_[x.edge];
  if (x.offset == 0) {
    if (vertex) *vertex = edge.tail;
    return true;
  }
  if (x.offset == edge.length) {
    if (vertex) *vertex = edge.head;
    return true;
  }
  return false;
}

std::int64_t Divisor::degree() const {
  std::int64_t total = 0;
  for (auto a : coefficients) total += a;
  return total;
}

bool Divisor::is_zero() const {
  return std::all_of(coefficients.begin(), coefficients.end(), [](auto a) { return a == 0; });
}

bool Divisor::is_effective() const {
  return std::all_of(coefficients.begin(), coefficients.end(), [](auto a) { return a >= 0; });
}

int ConnectivityEntry::code() const {
  switch (kind) {
    case Kind::NotApplicable: return 0;
    case Kind::SelfBridge: return 1;
    case Kind::Side: return side == mgreen::Side::Q ? 1 : 0;
    case Kind::BridgePair: {
      const int beta = (first_side(neighbours) == mgreen::Side::Q ? 10 : 0) +
                       (second_side(neighbours) == mgreen::Side::Q ? 1 : 0);
      return 100 * (side == mgreen::Side::Q ? 1 : 0) + beta;
    }
  }
  return 0;
}

ConnectivityEntry ConnectivityEntry::decode(int code, bool diagonal, bool row_is_bridge, bool column_is_bridge) {
  auto bad = [code]() {
    return Error(ErrorKind::ParseError, "invalid connectivity code " + std::to_string(code) + " in this context");
  };
  if (diagonal) {
    if (code == 0 && !row_is_bridge) return not_applicable();
    if (code == 1 && row_is_bridge) return self_bridge();
    throw bad();
  }
  if (!row_is_bridge && !column_is_bridge) {
    if (code == 0) return not_applicable();
    throw bad();
  }
  if (row_is_bridge != column_is_bridge) {
    if (code == 0 || code == 1) return one_bridge(code == 1 ? mgreen::Side::Q : mgreen::Side::P);
    throw bad();
  }
  const int alpha = code / 100;
  const int beta = code % 100;
  if (code < 0 || alpha > 1 || (beta != 0 && beta != 1 && beta != 10 && beta != 11)) throw bad();
  const Side first = beta >= 10 ? mgreen::Side::Q : mgreen::Side::P;
  const Side second = beta % 10 == 1 ? mgreen::Side::Q : mgreen::Side::P;
  return bridge_pair(alpha == 1 ? mgreen::Side::Q : mgreen::Side::P, make_neighbours(first, second));
}

GraphPoint Refinement::map_point(const GraphPoint& x) const {
  if (x.edge >= pieces_.size()) {
    throw Error(ErrorKind::IndexOutOfRange, "edge " + std::to_string(x.edge) + " out of range");
  }
  for (const Piece& piece : pieces_[x.edge]) {
    if (x.offset >= piece.start && x.offset <= piece.start + piece.length) {
      return GraphPoint{piece.new_edge, x.offset - piece.start};
    }
  }
  throw Error(ErrorKind::IndexOutOfRange, "offset " + to_string(x.offset) + " outside edge " +
                                              std::to_string(x.edge));
}

Divisor Refinement::map_divisor(const Divisor& d) const {
  if (d.size() != original_vertex_count_) {
    throw Error(ErrorKind::IndexOutOfRange, "divisor has " + std::to_string(d.size()) + " entries, expected " +
                                                std::to_string(original_vertex_count_));
  }
  Divisor out = d;
  out.coefficients.resize(graph_.vertex_count(), 0);
  return out;
}

Refinement refine(const MetrizedGraph& g, const std::vector<std::vector<Rational>>& cuts) {
  if (cuts.size() != g.edge_count()) {
    throw Error(ErrorKind::IndexOutOfRange, "cut list must have one entry per edge");
  }
  std::vector<std::string> labels = g.labels();
  std::vector<Edge> edges;
  std::vector<std::vector<Refinement::Piece>> pieces(g.edge_count());
  bool identity = true;
  for (EdgeIndex e = 0; e < g.edge_count(); ++e) {
    const Edge& old = g.edge(e);
    std::vector<Rational> points = cuts[e];
    for (const Rational& t : points) {
      if (t <= 0 || t >= old.length) {
        throw Error(ErrorKind::IndexOutOfRange,
                    "cut " + to_string(t) + " is not interior to edge " + std::to_string(e));
      }
    }
    std::sort(points.begin(), points.end());
    points.erase(std::unique(points.begin(), points.end()), points.end());
    if (!points.empty()) identity = false;

    VertexIndex from = old.tail;
    Rational start = 0;
    for (const Rational& t : points) {
      const VertexIndex fresh = labels.size();
      labels.push_back(old.tail == old.head ? g.label(old.tail) + "~" + std::to_string(e) + "@" + to_string(t)
                                            : "e" + std::to_string(e) + "@" + to_string(t));
      pieces[e].push_back({edges.size(), start, t - start});
      edges.push_back(Edge{from, fresh, t - start});
      from = fresh;
      start = t;
    }
    pieces[e].push_back({edges.size(), start, old.length - start});
    edges.push_back(Edge{from, old.head, old.length - start});
  }
  return Refinement(MetrizedGraph(std::move(labels), std::move(edges)), g.vertex_count(), std::move(pieces),
                    identity);
}

bool validate_adequate(const MetrizedGraph& g) {
  std::map<std::pair<VertexIndex, VertexIndex>, int> seen;
  for (const Edge& e : g.edges()) {
    if (e.is_loop()) return false;
    if (++seen[std::minmax(e.tail, e.head)] > 1) return false;
  }
  return true;
}

Refinement make_adequate(const MetrizedGraph& g) {
  std::vector<std::vector<Rational>> cuts(g.edge_count());
  std::map<std::pair<VertexIndex, VertexIndex>, EdgeIndex> first_in_class;
  for (EdgeIndex e = 0; e < g.edge_count(); ++e) {
    const Edge& edge = g.edge(e);
    if (edge.is_loop()) {
      cuts[e] = {edge.length / 3, 2 * edge.length / 3};
      continue;
    }
    const auto [it, inserted] = first_in_class.emplace(std::minmax(edge.tail, edge.head), e);
    if (!inserted) cuts[e] = {edge.length / 2};
  }
  Refinement result = refine(g, cuts);
  if (!validate_adequate(result.graph())) {
    throw Error(ErrorKind::Internal, "adequacy repair left loops or parallel edges");
  }
  return result;
}

bool is_bridge(const MetrizedGraph& g, EdgeIndex e) {
  const Edge& edge = g.edge(e);
  if (edge.is_loop()) return false;
  return !reachable(g, edge.tail, e)[edge.head];
}

Side bridge_side(const MetrizedGraph& g, EdgeIndex bridge, VertexIndex vertex) {
  g.check_vertex(vertex);
  require_bridge(g, bridge);
  const Edge& edge = g.edge(bridge);
  return reachable(g, edge.tail, bridge)[vertex] ? Side::P : Side::Q;
}

Side bridge_side_of_edge(const MetrizedGraph& g, EdgeIndex bridge, EdgeIndex target) {
  g.check_edge(target);
  if (target == bridge) {
    throw Error(ErrorKind::IndexOutOfRange, "an edge has no side relative to itself");
  }
  return bridge_side(g, bridge, g.edge(target).tail);
}

std::vector<Rational> distances_from(const MetrizedGraph& g, VertexIndex source) {
  g.check_vertex(source);
  const std::size_t n = g.vertex_count();
  std::vector<std::optional<Rational>> dist(n);
  std::vector<bool> done(n, false);
  dist[source] = Rational(0);
  for (std::size_t round = 0; round < n; ++round) {
    std::optional<VertexIndex> best;
    for (VertexIndex v = 0; v < n; ++v) {
      if (!done[v] && dist[v] && (!best || *dist[v] < *dist[*best])) best = v;
    }
    if (!best) break;
    const VertexIndex u = *best;
    done[u] = true;
    for (EdgeIndex e : g.incident_edges(u)) {
      const Edge& edge = g.edge(e);
      const VertexIndex w = edge.tail == u ? edge.head : edge.tail;
      const Rational candidate = *dist[u] + edge.length;
      if (!dist[w] || candidate < *dist[w]) dist[w] = candidate;
    }
  }
  std::vector<Rational> out;
  out.reserve(n);
  for (auto& d : dist) out.push_back(*d);
  return out;
}

Rational shortest_distance(const MetrizedGraph& g, VertexIndex u, VertexIndex v) {
  g.check_vertex(v);
  return distances_from(g, u)[v];
}

ClosestNeighbours closest_neighbours(const MetrizedGraph& g, EdgeIndex first, EdgeIndex second) {
  g.check_edge(first);
  g.check_edge(second);
  if (first == second) {
    throw Error(ErrorKind::IndexOutOfRange, "closest neighbours need two distinct edges");
  }
  require_bridge(g, first);
  require_bridge(g, second);
  const Edge& a = g.edge(first);
  const Edge& b = g.edge(second);
  std::optional<ClosestNeighbours> best;
  Rational best_distance;
  bool tie = false;
  for (Side s : {Side::P, Side::Q}) {
    const auto dist = distances_from(g, a.endpoint(s));
    for (Side t : {Side::P, Side::Q}) {
      const Rational& d = dist[b.endpoint(t)];
      if (!best || d < best_distance) {
        best = ClosestNeighbours{a.endpoint(s), b.endpoint(t), make_neighbours(s, t)};
        best_distance = d;
        tie = false;
      } else if (d == best_distance) {
        tie = true;
      }
    }
  }
  if (tie) {
    throw Error(ErrorKind::Internal, "closest neighbours of edges " + std::to_string(first) + " and " +
                                         std::to_string(second) + " are not unique");
  }
  return *best;
}

CanonicalDivisor canonical_divisor(const MetrizedGraph& g, std::span<const std::int64_t> genus) {
  if (genus.size() != g.vertex_count()) {
    throw Error(ErrorKind::IndexOutOfRange, "genus function needs one value per vertex");
  }
  CanonicalDivisor out{Divisor::zero(g.vertex_count()), true};
  for (VertexIndex v = 0; v < g.vertex_count(); ++v) {
    out.divisor.coefficients[v] = static_cast<std::int64_t>(g.valence(v)) - 2 + 2 * genus[v];
    if (genus[v] < 0) out.polarized = false;
  }
  out.polarized = out.polarized && out.divisor.is_effective();
  return out;
}

MetrizedGraph scaled(const MetrizedGraph& g, const Rational& factor) {
  std::vector<Edge> edges(g.edges().begin(), g.edges().end());
  for (Edge& e : edges) e.length *= factor;
  return MetrizedGraph(g.labels(), std::move(edges));
}

MetrizedGraph with_reversed_edge(const MetrizedGraph& g, EdgeIndex e) {
  g.check_edge(e);
  std::vector<Edge> edges(g.edges().begin(), g.edges().end());
  std::swap(edges[e].tail, edges[e].head);
  return MetrizedGraph(g.labels(), std::move(edges));
}

}  // namespace mgreen
