#pragma once

#include <initializer_list>
#include <optional>
#include <vector>

#include "gcstar/rational.hpp"

namespace gcstar {

// Dense matrix over the exact rationals.  Dimensions stay tiny (at most
// 16 x 16), so plain Gaussian elimination with exact pivots is all the
// numerics this library ever needs.
class RatMatrix {
 public:
  RatMatrix() : rows_(0), cols_(0) {}
  RatMatrix(int rows, int cols);
  RatMatrix(std::initializer_list<std::initializer_list<Rational>> rows);

  static RatMatrix identity(int n);
  static RatMatrix diagonal(const std::vector<Rational>& entries);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  Rational& at(int r, int c) { return a_[static_cast<std::size_t>(r) * cols_ + c]; }
  const Rational& at(int r, int c) const { return a_[static_cast<std::size_t>(r) * cols_ + c]; }

  RatMatrix transposed() const;
  bool is_symmetric() const;

  Rational determinant() const;                // square only
  std::optional<RatMatrix> inverse() const;    // nullopt when singular
  int rank() const;                            // exact row reduction

  friend RatMatrix operator*(const RatMatrix& a, const RatMatrix& b);
  friend bool operator==(const RatMatrix&, const RatMatrix&) = default;

  // Column vector action y = M x.
  std::vector<Rational> apply(const std::vector<Rational>& x) const;

 private:
  int rows_, cols_;
  std::vector<Rational> a_;
};

}  // namespace gcstar
