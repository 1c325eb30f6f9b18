#pragma once

#include <vector>

#include "mgreen/graph.hpp"

namespace mgreen {

/// Bridge topology of every ordered edge pair.
class ConnectivityMatrix {
 public:
  ConnectivityMatrix() = default;
  explicit ConnectivityMatrix(std::size_t m) : size_(m), entries_(m * m) {}

  std::size_t size() const { return size_; }
  const ConnectivityEntry& operator()(EdgeIndex i, EdgeIndex j) const { return entries_[i * size_ + j]; }
  ConnectivityEntry& operator()(EdgeIndex i, EdgeIndex j) { return entries_[i * size_ + j]; }

  bool is_bridge(EdgeIndex i) const { return (*this)(i, i).kind == ConnectivityEntry::Kind::SelfBridge; }

  /// Decimal display codes, row by row.
  std::vector<std::vector<int>> codes() const;

  /// Rebuilds entries from display codes; the diagonal fixes bridgehood.
  static ConnectivityMatrix from_codes(const std::vector<std::vector<int>>& codes);

  friend bool operator==(const ConnectivityMatrix&, const ConnectivityMatrix&) = default;

 private:
  std::size_t size_ = 0;
  std::vector<ConnectivityEntry> entries_;
};

/// Diagonal first (bridgehood), then the upper triangle with its mirrored
/// lower entries. Requires an adequate graph.
ConnectivityMatrix connectivity_matrix(const MetrizedGraph& g);

}  // namespace mgreen
