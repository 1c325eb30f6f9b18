#pragma once

// Graphs used across the test suites. Vertex and edge order follow the
// figures they are drawn from, arrow for arrow.

#include <bit>
#include <string>
#include <vector>

#include "mgreen/graph.hpp"
#include "mgreen/rational.hpp"

namespace mgreen::fixtures {

inline Rational Q(const char* text) { return parse_rational(text); }

inline MetrizedGraph segment(const Rational& length = 1) {
  return MetrizedGraph({"p0", "p1"}, {Edge{0, 1, length}});
}

/// Three arcs of a circle with lengths 1/2, 1, 1/2; vertex list (p1, p0, p2).
inline MetrizedGraph circle() {
  return MetrizedGraph({"p1", "p0", "p2"}, {
                                               Edge{1, 0, Q("1/2")},  // e0: p0 -> p1
                                               Edge{1, 2, Q("1")},    // e1: p0 -> p2
                                               Edge{0, 2, Q("1/2")},  // e2: p1 -> p2
                                           });
}
inline constexpr VertexIndex circle_p1 = 0;
inline constexpr VertexIndex circle_p0 = 1;
inline constexpr VertexIndex circle_p2 = 2;

/// Two circles of lengths l1, l2 touching at p0, each cut into three arcs.
inline MetrizedGraph joint_circles(const Rational& l1, const Rational& l2) {
  const Rational a = l1 / 3;
  const Rational b = l2 / 3;
  return MetrizedGraph::with_vertex_count(5, {
                                                 Edge{0, 1, a},
                                                 Edge{1, 2, a},
                                                 Edge{2, 0, a},
                                                 Edge{0, 3, b},
                                                 Edge{3, 4, b},
                                                 Edge{4, 0, b},
                                             });
}

/// Unit 4-cube: vertex (b0,b1,b2,b3) is p_{b0+2b1+4b2+8b3}; edges i -> j for
/// i < j differing in one bit, lexicographic.
inline MetrizedGraph tesseract() {
  std::vector<Edge> edges;
  for (VertexIndex i = 0; i < 16; ++i)
    for (VertexIndex j = i + 1; j < 16; ++j)
      if (std::popcount(i ^ j) == 1) edges.push_back(Edge{i, j, Rational(1)});
  return MetrizedGraph::with_vertex_count(16, std::move(edges));
}

inline Divisor tesseract_divisor() {
  Divisor d;
  for (std::int64_t k = 0; k < 16; ++k) d.coefficients.push_back(k);
  return d;
}

/// Banana graph with arcs a, b, c between p0 and p1; arcs a and c are halved
/// by p2 and p3.
inline MetrizedGraph banana(const Rational& a, const Rational& b, const Rational& c) {
  return MetrizedGraph::with_vertex_count(4, {
                                                 Edge{0, 1, b},
                                                 Edge{0, 2, a / 2},
                                                 Edge{2, 1, a / 2},
                                                 Edge{0, 3, c / 2},
                                                 Edge{3, 1, c / 2},
                                             });
}

/// Bridge e0, a square e1..e4, bridge e5.
inline MetrizedGraph two_bridges(std::vector<Rational> lengths = {1, 1, 1, 1, 1, 1}) {
  return MetrizedGraph::with_vertex_count(6, {
                                                 Edge{0, 1, lengths[0]},
                                                 Edge{1, 2, lengths[1]},
                                                 Edge{1, 3, lengths[2]},
                                                 Edge{2, 4, lengths[3]},
                                                 Edge{3, 4, lengths[4]},
                                                 Edge{4, 5, lengths[5]},
                                             });
}

inline MetrizedGraph two_bridges_uneven() {
  return two_bridges({Q("1"), Q("2"), Q("3/2"), Q("1/2"), Q("5/2"), Q("3")});
}

/// Circle of arcs a, b through p1, p2 with a segment c hanging off p2. Not adequate.
inline MetrizedGraph circle_line(const Rational& a, const Rational& b, const Rational& c) {
  return MetrizedGraph({"p1", "p2", "p3"}, {Edge{0, 1, a}, Edge{0, 1, b}, Edge{1, 2, c}});
}

/// The adequate version with p0 halving arc a.
inline MetrizedGraph circle_line_adequate(const Rational& a, const Rational& b, const Rational& c) {
  return MetrizedGraph::with_vertex_count(4, {
                                                 Edge{0, 1, a / 2},
                                                 Edge{0, 2, a / 2},
                                                 Edge{1, 2, b},
                                                 Edge{2, 3, c},
                                             });
}

/// Triangle, two bridges in series, a square, and a pendant bridge on the
/// square; orientations deliberately mixed.
inline MetrizedGraph dumbbell() {
  return MetrizedGraph::with_vertex_count(9, {
                                                 Edge{0, 1, Q("1")},    // e0 triangle
                                                 Edge{2, 1, Q("2")},    // e1 triangle
                                                 Edge{0, 2, Q("1/2")},  // e2 triangle
                                                 Edge{3, 2, Q("3/2")},  // e3 bridge
                                                 Edge{3, 4, Q("1")},    // e4 bridge
                                                 Edge{4, 5, Q("1")},    // e5 square
                                                 Edge{6, 5, Q("2")},    // e6 square
                                                 Edge{6, 7, Q("1/3")},  // e7 square
                                                 Edge{4, 7, Q("3")},    // e8 square
                                                 Edge{8, 6, Q("5/2")},  // e9 pendant bridge
                                             });
}

inline Divisor divisor(std::vector<std::int64_t> a) { return Divisor{std::move(a)}; }

}  // namespace mgreen::fixtures
