#include "mgreen/linalg.hpp"

#include <utility>

#include "mgreen/error.hpp"

namespace mgreen {

namespace {

void require_same_shape(const RationalMatrix& a, const RationalMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw Error(ErrorKind::IndexOutOfRange, "matrix shapes differ");
  }
}

void check_index(const RationalMatrix& m, std::size_t k) {
  if (k >= m.rows()) {
    throw Error(ErrorKind::IndexOutOfRange, "vertex " + std::to_string(k) + " out of range");
  }
}

}  // namespace

RationalMatrix::RationalMatrix(std::initializer_list<std::initializer_list<Rational>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  data_.reserve(rows_ * cols_);
  for (const auto& row : rows) {
    if (row.size() != cols_) throw Error(ErrorKind::IndexOutOfRange, "ragged matrix literal");
    for (const auto& v : row) data_.push_back(v);
  }
}

RationalMatrix RationalMatrix::identity(std::size_t n) {
  RationalMatrix m(n, n);
  for (std::size_t k = 0; k < n; ++k) m(k, k) = 1;
  return m;
}

RationalMatrix RationalMatrix::ones(std::size_t n) {
  RationalMatrix m(n, n);
  for (auto& v : m.data_) v = 1;
  return m;
}

RationalMatrix RationalMatrix::transpose() const {
  RationalMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

bool RationalMatrix::is_symmetric() const { return rows_ == cols_ && *this == transpose(); }

RationalMatrix operator+(const RationalMatrix& a, const RationalMatrix& b) {
  require_same_shape(a, b);
  RationalMatrix out = a;
  for (std::size_t k = 0; k < out.data_.size(); ++k) out.data_[k] += b.data_[k];
  return out;
}

RationalMatrix operator-(const RationalMatrix& a, const RationalMatrix& b) {
  require_same_shape(a, b);
  RationalMatrix out = a;
  for (std::size_t k = 0; k < out.data_.size(); ++k) out.data_[k] -= b.data_[k];
  return out;
}

RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b) {
  if (a.cols_ != b.rows_) throw Error(ErrorKind::IndexOutOfRange, "matrix product shape mismatch");
  RationalMatrix out(a.rows_, b.cols_);
  for (std::size_t r = 0; r < a.rows_; ++r) {
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Rational& lhs = a(r, k);
      if (lhs == 0) continue;
      for (std::size_t c = 0; c < b.cols_; ++c) out(r, c) += lhs * b(k, c);
    }
  }
  return out;
}

RationalMatrix operator*(const Rational& s, const RationalMatrix& a) {
  RationalMatrix out = a;
  for (auto& v : out.data_) v *= s;
  return out;
}

bool operator==(const RationalMatrix& a, const RationalMatrix& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

RationalMatrix inverse(const RationalMatrix& a) {
  if (a.rows() != a.cols()) throw Error(ErrorKind::IndexOutOfRange, "inverse of a non-square matrix");
  const std::size_t n = a.rows();
  RationalMatrix work = a;
  RationalMatrix inv = RationalMatrix::identity(n);
  for (std::size_t col = 0; col < n; ++col) {
    // Partial pivoting by absolute value; exact arithmetic makes any
    // nonzero pivot correct, this only tames intermediate growth.
    std::size_t pivot = n;
    for (std::size_t r = col; r < n; ++r) {
      if (work(r, col) != 0 && (pivot == n || abs(work(r, col)) > abs(work(pivot, col)))) pivot = r;
    }
    if (pivot == n) throw Error(ErrorKind::SingularShift, "matrix is singular");
    if (pivot != col) {
      for (std::size_t c = 0; c < n; ++c) {
        std::swap(work(pivot, c), work(col, c));
        std::swap(inv(pivot, c), inv(col, c));
      }
    }
    const Rational scale = 1 / work(col, col);
    for (std::size_t c = 0; c < n; ++c) {
      work(col, c) *= scale;
      inv(col, c) *= scale;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || work(r, col) == 0) continue;
      const Rational factor = work(r, col);
      for (std::size_t c = 0; c < n; ++c) {
        work(r, c) -= factor * work(col, c);
        inv(r, c) -= factor * inv(col, c);
      }
    }
  }
  return inv;
}

RationalMatrix laplacian(const MetrizedGraph& g) {
  if (!validate_adequate(g)) {
    throw Error(ErrorKind::NotAdequate, "the Laplacian needs a vertex set without loops or parallel edges");
  }
  const std::size_t n = g.vertex_count();
  RationalMatrix lap(n, n);
  for (const Edge& e : g.edges()) {
    const Rational w = 1 / e.length;
    lap(e.tail, e.head) -= w;
    lap(e.head, e.tail) -= w;
    lap(e.tail, e.tail) += w;
    lap(e.head, e.head) += w;
  }
  return lap;
}

RationalMatrix pseudo_inverse(const RationalMatrix& laplacian) {
  const std::size_t n = laplacian.rows();
  if (n == 0 || laplacian.cols() != n) throw Error(ErrorKind::IndexOutOfRange, "Laplacian must be square");
  const RationalMatrix shift = Rational(1, n) * RationalMatrix::ones(n);
  return inverse(laplacian - shift) + shift;
}

Rational voltage_at_vertices(const RationalMatrix& lplus, VertexIndex s, VertexIndex p, VertexIndex q) {
  check_index(lplus, s);
  check_index(lplus, p);
  check_index(lplus, q);
  return lplus(s, s) - lplus(s, p) - lplus(s, q) + lplus(p, q);
}

Rational resistance_at_vertices(const RationalMatrix& lplus, VertexIndex p, VertexIndex q) {
  check_index(lplus, p);
  check_index(lplus, q);
  return lplus(p, p) - 2 * lplus(p, q) + lplus(q, q);
}

}  // namespace mgreen
