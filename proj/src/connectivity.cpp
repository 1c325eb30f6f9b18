#include "mgreen/connectivity.hpp"

#include "mgreen/error.hpp"

namespace mgreen {

std::vector<std::vector<int>> ConnectivityMatrix::codes() const {
  std::vector<std::vector<int>> out(size_, std::vector<int>(size_, 0));
  for (EdgeIndex i = 0; i < size_; ++i)
    for (EdgeIndex j = 0; j < size_; ++j) out[i][j] = (*this)(i, j).code();
  return out;
}

ConnectivityMatrix ConnectivityMatrix::from_codes(const std::vector<std::vector<int>>& codes) {
  const std::size_t m = codes.size();
  ConnectivityMatrix c(m);
  for (const auto& row : codes) {
    if (row.size() != m) throw Error(ErrorKind::ParseError, "connectivity codes must form a square matrix");
  }
  std::vector<bool> bridge(m);
  for (EdgeIndex i = 0; i < m; ++i) bridge[i] = codes[i][i] == 1;
  for (EdgeIndex i = 0; i < m; ++i)
    for (EdgeIndex j = 0; j < m; ++j)
      c(i, j) = ConnectivityEntry::decode(codes[i][j], i == j, bridge[i], bridge[j]);
  return c;
}

ConnectivityMatrix connectivity_matrix(const MetrizedGraph& g) {
  if (!validate_adequate(g)) {
    throw Error(ErrorKind::NotAdequate, "connectivity matrix needs an adequate vertex set");
  }
  const std::size_t m = g.edge_count();
  ConnectivityMatrix c(m);
  for (EdgeIndex i = 0; i < m; ++i) {
    if (is_bridge(g, i)) c(i, i) = ConnectivityEntry::self_bridge();
  }
  for (EdgeIndex i = 0; i < m; ++i) {
    for (EdgeIndex j = i + 1; j < m; ++j) {
      const bool bi = c.is_bridge(i);
      const bool bj = c.is_bridge(j);
      if (bi && bj) {
        c(i, j) = ConnectivityEntry::bridge_pair(bridge_side_of_edge(g, i, j), closest_neighbours(g, i, j).which);
        c(j, i) = ConnectivityEntry::bridge_pair(bridge_side_of_edge(g, j, i), closest_neighbours(g, j, i).which);
      } else if (bi) {
        c(i, j) = c(j, i) = ConnectivityEntry::one_bridge(bridge_side_of_edge(g, i, j));
      } else if (bj) {
        c(i, j) = c(j, i) = ConnectivityEntry::one_bridge(bridge_side_of_edge(g, j, i));
      }
    }
  }
  return c;
}

}  // namespace mgreen
