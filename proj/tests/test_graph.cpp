#include <doctest.h>

#include <algorithm>
#include <set>

#include "fixtures.hpp"
#include "mgreen/error.hpp"
#include "mgreen/graph.hpp"
#include "oracles.hpp"

using namespace mgreen;
using fixtures::Q;

namespace {

std::vector<MetrizedGraph> adequate_corpus() {
  return {fixtures::segment(Q("5/3")),          fixtures::circle(),
          fixtures::joint_circles(3, 6),         fixtures::tesseract(),
          fixtures::banana(1, 2, 3),             fixtures::two_bridges_uneven(),
          fixtures::circle_line_adequate(2, 1, 3), fixtures::dumbbell()};
}

std::multiset<Rational> lengths(const MetrizedGraph& g) {
  std::multiset<Rational> out;
  for (const Edge& e : g.edges()) out.insert(e.length);
  return out;
}

ErrorKind kind_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  return ErrorKind::Internal;
}

}  // namespace

TEST_CASE("construction rejects invalid graphs") {
  CHECK(kind_of([] { MetrizedGraph::with_vertex_count(3, {Edge{0, 1, 1}}); }) == ErrorKind::GraphDisconnected);
  CHECK(kind_of([] { MetrizedGraph::with_vertex_count(2, {Edge{0, 1, 0}}); }) == ErrorKind::NonpositiveLength);
  CHECK(kind_of([] { MetrizedGraph::with_vertex_count(2, {Edge{0, 1, -1}}); }) == ErrorKind::NonpositiveLength);
  CHECK(kind_of([] { MetrizedGraph::with_vertex_count(2, {Edge{0, 2, 1}}); }) == ErrorKind::IndexOutOfRange);
  CHECK(kind_of([] { MetrizedGraph::with_vertex_count(1, {}); }) == ErrorKind::IndexOutOfRange);
}

TEST_CASE("valence and total length") {
  const auto g = fixtures::circle_line_adequate(2, 1, 3);
  CHECK(g.total_length() == 6);
  CHECK(g.valence(0) == 2);
  CHECK(g.valence(2) == 3);
  CHECK(g.valence(3) == 1);
  const auto loop = MetrizedGraph::with_vertex_count(1, {Edge{0, 0, 3}});
  CHECK(loop.valence(0) == 2);
}

TEST_CASE("adequacy") {
  CHECK_FALSE(validate_adequate(fixtures::circle_line(1, 1, 2)));
  CHECK(validate_adequate(fixtures::segment()));
  CHECK(validate_adequate(fixtures::circle_line_adequate(2, 1, 3)));
  CHECK_FALSE(validate_adequate(MetrizedGraph::with_vertex_count(1, {Edge{0, 0, 3}})));
  // reversed parallel edges are still parallel
  CHECK_FALSE(validate_adequate(MetrizedGraph::with_vertex_count(2, {Edge{0, 1, 1}, Edge{1, 0, 2}})));
}

TEST_CASE("make_adequate splits the second arc of a circle with a tail") {
  const Rational a = 2, b = 2, c = 3;
  const auto g = fixtures::circle_line(a, b, c);
  const Refinement rep = make_adequate(g);
  const MetrizedGraph& h = rep.graph();
  CHECK(validate_adequate(h));
  CHECK(h.vertex_count() == 4);
  CHECK(h.edge_count() == 4);
  CHECK(h.total_length() == g.total_length());
  // same multiset of lengths as the hand-drawn adequate version
  CHECK(lengths(h) == lengths(fixtures::circle_line_adequate(a, b, c)));
  // the split arc's second half starts at the new vertex
  CHECK(rep.map_point({1, Rational(3, 2)}) == GraphPoint{2, Rational(1, 2)});
  CHECK(rep.map_point({1, Rational(1, 2)}) == GraphPoint{1, Rational(1, 2)});
  CHECK(rep.map_point({2, Rational(1)}) == GraphPoint{3, Rational(1)});
}

TEST_CASE("make_adequate trisects a loop") {
  const auto g = MetrizedGraph::with_vertex_count(1, {Edge{0, 0, 3}});
  const Refinement rep = make_adequate(g);
  const MetrizedGraph& h = rep.graph();
  CHECK(h.vertex_count() == 3);
  CHECK(lengths(h) == std::multiset<Rational>{1, 1, 1});
  CHECK(h.total_length() == 3);
  for (VertexIndex v = 0; v < 3; ++v) CHECK(h.valence(v) == 2);
  CHECK(validate_adequate(h));
}

TEST_CASE("make_adequate leaves adequate graphs alone") {
  for (const auto& g : adequate_corpus()) {
    const Refinement rep = make_adequate(g);
    CHECK(rep.is_identity());
    CHECK(rep.graph().vertex_count() == g.vertex_count());
    CHECK(std::equal(g.edges().begin(), g.edges().end(), rep.graph().edges().begin(),
                     [](const Edge& a, const Edge& b) {
                       return a.tail == b.tail && a.head == b.head && a.length == b.length;
                     }));
  }
}

TEST_CASE("make_adequate preserves length and distances between surviving vertices") {
  const std::vector<MetrizedGraph> messy{
      fixtures::circle_line(1, 3, 2),
      MetrizedGraph::with_vertex_count(2, {Edge{0, 1, 1}, Edge{1, 0, 2}, Edge{0, 1, 3}, Edge{1, 1, Q("7/2")}}),
      MetrizedGraph::with_vertex_count(3, {Edge{0, 0, 1}, Edge{0, 1, 2}, Edge{1, 2, 1}, Edge{2, 1, Q("1/2")}}),
  };
  for (const auto& g : messy) {
    const Refinement rep = make_adequate(g);
    const MetrizedGraph& h = rep.graph();
    CHECK(validate_adequate(h));
    CHECK(h.total_length() == g.total_length());
    const auto before = oracles::floyd_warshall(g);
    const auto after = oracles::floyd_warshall(h);
    for (VertexIndex u = 0; u < g.vertex_count(); ++u)
      for (VertexIndex v = 0; v < g.vertex_count(); ++v) CHECK(before[u][v] == after[u][v]);
  }
}

TEST_CASE("bridges") {
  const auto cl = fixtures::circle_line(1, 1, 2);
  CHECK(is_bridge(cl, 2));
  CHECK_FALSE(is_bridge(cl, 0));
  CHECK_FALSE(is_bridge(cl, 1));
  for (EdgeIndex e = 0; e < 3; ++e) CHECK_FALSE(is_bridge(fixtures::circle(), e));
  CHECK(is_bridge(fixtures::segment(), 0));
  CHECK_THROWS_AS(is_bridge(fixtures::segment(), 1), Error);
}

TEST_CASE("bridge iff the edge lies on no cycle") {
  for (const auto& g : adequate_corpus()) {
    const std::size_t rank = oracles::cycle_rank(g);
    for (EdgeIndex e = 0; e < g.edge_count(); ++e) {
      CHECK(is_bridge(g, e) == (oracles::cycle_rank(g, e) == rank));
    }
  }
}

TEST_CASE("bridge sides on the two-bridge graph") {
  const auto g = fixtures::two_bridges();
  CHECK(bridge_side_of_edge(g, 0, 1) == Side::Q);
  CHECK(bridge_side_of_edge(g, 5, 1) == Side::P);
  CHECK(bridge_side_of_edge(g, 0, 5) == Side::Q);
  CHECK(bridge_side_of_edge(g, 5, 0) == Side::P);
  CHECK(bridge_side(g, 0, 0) == Side::P);
  CHECK(bridge_side(g, 0, 1) == Side::Q);
  CHECK(bridge_side(g, 5, 5) == Side::Q);
  CHECK(bridge_side(g, 5, 4) == Side::P);
  CHECK(kind_of([&] { bridge_side(g, 1, 0); }) == ErrorKind::NotABridge);
}

TEST_CASE("non-bridge edges never straddle a bridge") {
  for (const auto& g : adequate_corpus()) {
    for (EdgeIndex b = 0; b < g.edge_count(); ++b) {
      if (!is_bridge(g, b)) continue;
      for (EdgeIndex e = 0; e < g.edge_count(); ++e) {
        if (e == b || is_bridge(g, e)) continue;
        CHECK(bridge_side(g, b, g.edge(e).tail) == bridge_side(g, b, g.edge(e).head));
      }
    }
  }
}

TEST_CASE("shortest distances") {
  const auto c = fixtures::circle();
  CHECK(shortest_distance(c, fixtures::circle_p0, fixtures::circle_p1) == Q("1/2"));
  CHECK(shortest_distance(c, 2, 2) == 0);
  CHECK(shortest_distance(fixtures::segment(Q("7/3")), 0, 1) == Q("7/3"));
  for (const auto& g : adequate_corpus()) {
    const auto fw = oracles::floyd_warshall(g);
    for (VertexIndex u = 0; u < g.vertex_count(); ++u) {
      const auto d = distances_from(g, u);
      for (VertexIndex v = 0; v < g.vertex_count(); ++v) CHECK(d[v] == fw[u][v]);
    }
  }
}

TEST_CASE("closest neighbours") {
  const auto g = fixtures::two_bridges();
  const auto ab = closest_neighbours(g, 0, 5);
  CHECK(ab.on_first == 1);
  CHECK(ab.on_second == 4);
  CHECK(ab.which == Neighbours::QP);
  const auto ba = closest_neighbours(g, 5, 0);
  CHECK(ba.on_first == 4);
  CHECK(ba.on_second == 1);
  CHECK(ba.which == Neighbours::PQ);

  const auto path = MetrizedGraph::with_vertex_count(4, {Edge{0, 1, 1}, Edge{1, 2, 2}, Edge{3, 2, 1}});
  const auto shared = closest_neighbours(path, 0, 2);
  CHECK(shared.on_first == 1);
  CHECK(shared.on_second == 2);
  const auto adjacent = closest_neighbours(path, 1, 2);
  CHECK(adjacent.on_first == 2);
  CHECK(adjacent.on_second == 2);
  CHECK(adjacent.which == Neighbours::QQ);

  CHECK(kind_of([&] { closest_neighbours(g, 0, 1); }) == ErrorKind::NotABridge);
}

TEST_CASE("closest neighbours attain the strict minimum") {
  for (const auto& g : adequate_corpus()) {
    const auto fw = oracles::floyd_warshall(g);
    for (EdgeIndex i = 0; i < g.edge_count(); ++i) {
      for (EdgeIndex j = 0; j < g.edge_count(); ++j) {
        if (i == j || !is_bridge(g, i) || !is_bridge(g, j)) continue;
        const auto cn = closest_neighbours(g, i, j);
        const Rational best = fw[cn.on_first][cn.on_second];
        int attaining = 0;
        for (Side s : {Side::P, Side::Q})
          for (Side t : {Side::P, Side::Q}) {
            const Rational d = fw[g.edge(i).endpoint(s)][g.edge(j).endpoint(t)];
            CHECK(d >= best);
            attaining += d == best;
          }
        CHECK(attaining == 1);
      }
    }
  }
}

TEST_CASE("canonical divisors") {
  const std::vector<std::int64_t> zero4(4, 0);
  const auto banana = canonical_divisor(fixtures::banana(1, 2, 3), zero4);
  CHECK(banana.divisor == fixtures::divisor({1, 1, 0, 0}));
  CHECK(banana.polarized);

  const std::vector<std::int64_t> zero3(3, 0);
  const auto circle = canonical_divisor(fixtures::circle(), zero3);
  CHECK(circle.divisor == fixtures::divisor({0, 0, 0}));
  CHECK(circle.polarized);

  const std::vector<std::int64_t> q{0, 0, 1, 1};
  const auto cl = canonical_divisor(fixtures::circle_line_adequate(2, 1, 3), q);
  CHECK(cl.divisor == fixtures::divisor({0, 0, 3, 1}));
  CHECK(cl.polarized);

  const auto cl0 = canonical_divisor(fixtures::circle_line_adequate(2, 1, 3), zero4);
  CHECK(cl0.divisor == fixtures::divisor({0, 0, 1, -1}));
  CHECK_FALSE(cl0.polarized);

  const std::vector<std::int64_t> negative{-1, 0, 0};
  CHECK_FALSE(canonical_divisor(fixtures::circle(), negative).polarized);
}

TEST_CASE("connectivity codes are a bijection in context") {
  std::set<int> pair_codes;
  for (Side s : {Side::P, Side::Q}) {
    for (int b = 0; b < 4; ++b) {
      const auto entry = ConnectivityEntry::bridge_pair(s, static_cast<Neighbours>(b));
      pair_codes.insert(entry.code());
      CHECK(ConnectivityEntry::decode(entry.code(), false, true, true) == entry);
    }
    const auto one = ConnectivityEntry::one_bridge(s);
    CHECK(ConnectivityEntry::decode(one.code(), false, true, false) == one);
    CHECK(ConnectivityEntry::decode(one.code(), false, false, true) == one);
  }
  CHECK(pair_codes == std::set<int>{0, 1, 10, 11, 100, 101, 110, 111});
  CHECK(ConnectivityEntry::self_bridge().code() == 1);
  CHECK(ConnectivityEntry::decode(1, true, true, true) == ConnectivityEntry::self_bridge());
  CHECK(ConnectivityEntry::decode(0, false, false, false) == ConnectivityEntry::not_applicable());
  CHECK_THROWS_AS(ConnectivityEntry::decode(12, false, true, true), Error);
  CHECK_THROWS_AS(ConnectivityEntry::decode(10, false, true, false), Error);
  CHECK_THROWS_AS(ConnectivityEntry::decode(1, false, false, false), Error);
}

TEST_CASE("scaling and reversal helpers") {
  const auto g = fixtures::circle();
  const auto s = scaled(g, Q("1/3"));
  CHECK(s.total_length() == Q("2/3"));
  const auto r = with_reversed_edge(g, 1);
  CHECK(r.edge(1).tail == 2);
  CHECK(r.edge(1).head == 1);
}
