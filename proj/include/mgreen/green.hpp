#pragma once

#include <string>
#include <vector>

#include "mgreen/graph.hpp"
#include "mgreen/potential.hpp"
#include "mgreen/prepared_graph.hpp"

namespace mgreen {

/// c0 + cx x + cy y + cxx x^2 + cyy y^2 + cxy xy + cabs |x - y| on e_i × e_j.
/// Every closed form for g_{μ_D} on an edge pair lies in this span.
struct EdgePairFunction {
  EdgeIndex first = 0;
  EdgeIndex second = 0;
  Rational c0;
  Rational cx;
  Rational cy;
  Rational cxx;
  Rational cyy;
  Rational cxy;
  Rational cabs;

  Rational operator()(const Rational& x, const Rational& y) const;

  /// The same function with the roles of x and y exchanged, on e_j × e_i.
  EdgePairFunction swapped() const;

  /// "c0 + cx*x + ..." with zero terms omitted; "0" if all vanish.
  std::string to_string() const;

  friend bool operator==(const EdgePairFunction&, const EdgePairFunction&) = default;
};

/// g_{μ_D} on every edge pair.
class ValueMatrix {
 public:
  ValueMatrix(Divisor divisor, std::size_t m, std::vector<EdgePairFunction> entries)
      : divisor_(std::move(divisor)), size_(m), entries_(std::move(entries)) {}

  std::size_t size() const { return size_; }
  const Divisor& divisor() const { return divisor_; }
  const EdgePairFunction& operator()(EdgeIndex i, EdgeIndex j) const { return entries_[i * size_ + j]; }
  EdgePairFunction& operator()(EdgeIndex i, EdgeIndex j) { return entries_[i * size_ + j]; }

  /// z_ij at the offsets of x (on e_i) and y (on e_j).
  Rational evaluate(const GraphPoint& x, const GraphPoint& y) const;

  /// z_ij(x, y) == z_ji(y, x) coefficientwise for all i, j.
  bool is_symmetric() const;

 private:
  Divisor divisor_;
  std::size_t size_;
  std::vector<EdgePairFunction> entries_;
};

/// z_ij for divisor D, by the closed forms for bridge-free, one-bridge and
/// two-bridge edge pairs. Throws BadDegree when deg(D) = -2.
EdgePairFunction value_matrix_entry(const PreparedGraph& pg, const Divisor& d, EdgeIndex i, EdgeIndex j);

/// All m² entries. Throws Internal if the result fails the symmetry check.
ValueMatrix value_matrix(const PreparedGraph& pg, const Divisor& d);

/// g_{μ_D}(x, y).
Rational evaluate_g(const PreparedGraph& pg, const Divisor& d, const GraphPoint& x, const GraphPoint& y);

}  // namespace mgreen
