#include "gcstar/linalg.hpp"

#include <stdexcept>

namespace gcstar {

RatMatrix::RatMatrix(int rows, int cols) : rows_(rows), cols_(cols) {
  if (rows < 0 || cols < 0) throw std::invalid_argument("RatMatrix: negative dimension");
  a_.assign(static_cast<std::size_t>(rows) * cols, Rational(0));
}

RatMatrix::RatMatrix(std::initializer_list<std::initializer_list<Rational>> rows)
    : RatMatrix(static_cast<int>(rows.size()),
                rows.size() ? static_cast<int>(rows.begin()->size()) : 0) {
  int r = 0;
  for (const auto& row : rows) {
    if (static_cast<int>(row.size()) != cols_)
      throw std::invalid_argument("RatMatrix: ragged initializer");
    int c = 0;
    for (const auto& v : row) at(r, c++) = v;
    ++r;
  }
}

RatMatrix RatMatrix::identity(int n) {
  RatMatrix m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

RatMatrix RatMatrix::diagonal(const std::vector<Rational>& entries) {
  RatMatrix m(static_cast<int>(entries.size()), static_cast<int>(entries.size()));
  for (int i = 0; i < m.rows(); ++i) m.at(i, i) = entries[static_cast<std::size_t>(i)];
  return m;
}

RatMatrix RatMatrix::transposed() const {
  RatMatrix m(cols_, rows_);
  for (int r = 0; r < rows_; ++r)
    for (int c = 0; c < cols_; ++c) m.at(c, r) = at(r, c);
  return m;
}

bool RatMatrix::is_symmetric() const {
  if (rows_ != cols_) return false;
  for (int r = 0; r < rows_; ++r)
    for (int c = r + 1; c < cols_; ++c)
      if (at(r, c) != at(c, r)) return false;
  return true;
}

namespace {

// Row-reduces `m` in place, returns (rank, determinant of the square part).
// Exact pivoting: any nonzero pivot is as good as any other.
std::pair<int, Rational> eliminate(RatMatrix& m) {
  const int rows = m.rows(), cols = m.cols();
  Rational det(1);
  int rank = 0;
  for (int col = 0; col < cols && rank < rows; ++col) {
    int pivot = -1;
    for (int r = rank; r < rows; ++r) {
      if (m.at(r, col) != 0) {
        pivot = r;
        break;
      }
    }
    if (pivot < 0) {
      det = 0;
      continue;
    }
    if (pivot != rank) {
      for (int c = 0; c < cols; ++c) std::swap(m.at(pivot, c), m.at(rank, c));
      det = -det;
    }
    det *= m.at(rank, col);
    const Rational inv_pivot = Rational(1) / m.at(rank, col);
    for (int c = col; c < cols; ++c) m.at(rank, c) *= inv_pivot;
    for (int r = 0; r < rows; ++r) {
      if (r == rank || m.at(r, col) == 0) continue;
      const Rational factor = m.at(r, col);
      for (int c = col; c < cols; ++c) m.at(r, c) -= factor * m.at(rank, c);
    }
    ++rank;
  }
  return {rank, det};
}

}  // namespace

Rational RatMatrix::determinant() const {
  if (rows_ != cols_) throw std::invalid_argument("determinant: matrix not square");
  RatMatrix work = *this;
  auto [rank, det] = eliminate(work);
  return rank == rows_ ? det : Rational(0);
}

std::optional<RatMatrix> RatMatrix::inverse() const {
  if (rows_ != cols_) throw std::invalid_argument("inverse: matrix not square");
  // Gauss-Jordan on [A | I].
  RatMatrix work(rows_, 2 * cols_);
  for (int r = 0; r < rows_; ++r) {
    for (int c = 0; c < cols_; ++c) work.at(r, c) = at(r, c);
    work.at(r, cols_ + r) = 1;
  }
  eliminate(work);
  // The identity columns always supply pivots, so the augmented rank is no
  // test of invertibility; A is invertible iff its block reduced to I.
  for (int r = 0; r < rows_; ++r)
    for (int c = 0; c < cols_; ++c)
      if (work.at(r, c) != Rational(r == c ? 1 : 0)) return std::nullopt;
  RatMatrix inv(rows_, cols_);
  for (int r = 0; r < rows_; ++r)
    for (int c = 0; c < cols_; ++c) inv.at(r, c) = work.at(r, cols_ + c);
  return inv;
}

int RatMatrix::rank() const {
  RatMatrix work = *this;
  return eliminate(work).first;
}

RatMatrix operator*(const RatMatrix& a, const RatMatrix& b) {
  if (a.cols_ != b.rows_) throw std::invalid_argument("operator*: dimension mismatch");
  RatMatrix out(a.rows_, b.cols_);
  for (int r = 0; r < a.rows_; ++r)
    for (int k = 0; k < a.cols_; ++k) {
      if (a.at(r, k) == 0) continue;
      for (int c = 0; c < b.cols_; ++c) out.at(r, c) += a.at(r, k) * b.at(k, c);
    }
  return out;
}

std::vector<Rational> RatMatrix::apply(const std::vector<Rational>& x) const {
  if (static_cast<int>(x.size()) != cols_) throw std::invalid_argument("apply: dimension mismatch");
  std::vector<Rational> y(static_cast<std::size_t>(rows_), Rational(0));
  for (int r = 0; r < rows_; ++r)
    for (int c = 0; c < cols_; ++c)
      if (at(r, c) != 0) y[static_cast<std::size_t>(r)] += at(r, c) * x[static_cast<std::size_t>(c)];
  return y;
}

}  // namespace gcstar
