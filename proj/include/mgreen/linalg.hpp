#pragma once

#include <cstddef>
#include <initializer_list>
#include <vector>

#include "mgreen/graph.hpp"
#include "mgreen/rational.hpp"

namespace mgreen {

/// Dense row-major matrix of exact rationals.
class RationalMatrix {
 public:
  RationalMatrix() = default;
  RationalMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  RationalMatrix(std::initializer_list<std::initializer_list<Rational>> rows);

  static RationalMatrix identity(std::size_t n);
  /// J_n: all entries one.
  static RationalMatrix ones(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  RationalMatrix transpose() const;
  bool is_symmetric() const;

  friend RationalMatrix operator+(const RationalMatrix& a, const RationalMatrix& b);
  friend RationalMatrix operator-(const RationalMatrix& a, const RationalMatrix& b);
  friend RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b);
  friend RationalMatrix operator*(const Rational& s, const RationalMatrix& a);
  friend bool operator==(const RationalMatrix& a, const RationalMatrix& b);

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

/// Exact inverse by Gaussian elimination. Throws SingularShift if singular.
RationalMatrix inverse(const RationalMatrix& a);

/// Weighted Laplacian with weights 1/length. Requires an adequate graph.
RationalMatrix laplacian(const MetrizedGraph& g);

/// Moore–Penrose inverse of a connected-graph Laplacian via
/// (L - J/n)^{-1} + J/n.
RationalMatrix pseudo_inverse(const RationalMatrix& laplacian);

/// j_s(p, q) from the pseudoinverse.
Rational voltage_at_vertices(const RationalMatrix& lplus, VertexIndex s, VertexIndex p, VertexIndex q);

/// r(p, q) from the pseudoinverse.
Rational resistance_at_vertices(const RationalMatrix& lplus, VertexIndex p, VertexIndex q);

}  // namespace mgreen
