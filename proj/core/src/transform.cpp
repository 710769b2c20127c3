#include "gcstar/transform.hpp"

#include <stdexcept>

namespace gcstar {

FrameChange::FrameChange(RatMatrix matrix) : matrix_(std::move(matrix)) {
  if (matrix_.rows() != matrix_.cols() || matrix_.rows() < 1)
    throw std::invalid_argument("FrameChange: matrix must be square");
  auto inv = matrix_.inverse();
  if (!inv) throw std::invalid_argument("FrameChange: matrix is singular");
  inverse_ = std::move(*inv);
  det_ = matrix_.determinant();
}

FrameChange operator*(const FrameChange& a, const FrameChange& b) {
  return FrameChange(a.matrix_ * b.matrix_);
}

FrameChange galilei_boost(std::span<const Rational> velocity) {
  const int n = static_cast<int>(velocity.size());
  if (n < 1) throw std::invalid_argument("galilei_boost: empty velocity");
  RatMatrix m = RatMatrix::identity(n + 1);
  for (int i = 0; i < n; ++i) m.at(i + 1, 0) = velocity[static_cast<std::size_t>(i)];
  return FrameChange(std::move(m));
}

FrameChange carroll_boost(std::span<const Rational> velocity) {
  const int n = static_cast<int>(velocity.size());
  if (n < 1) throw std::invalid_argument("carroll_boost: empty velocity");
  RatMatrix m = RatMatrix::identity(n + 1);
  for (int i = 0; i < n; ++i) m.at(0, i + 1) = velocity[static_cast<std::size_t>(i)];
  return FrameChange(std::move(m));
}

FrameChange rotation(const RatMatrix& r) {
  const int n = r.rows();
  if (n < 1 || r.cols() != n) throw std::invalid_argument("rotation: matrix must be square");
  if (r.transposed() * r != RatMatrix::identity(n))
    throw std::invalid_argument("rotation: matrix is not orthogonal");
  const Rational det = r.determinant();
  if (det == -1) throw std::invalid_argument("rotation: reflections (det -1) are rejected");
  if (det != 1) throw std::invalid_argument("rotation: determinant must be +1");
  RatMatrix m = RatMatrix::identity(n + 1);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m.at(i + 1, j + 1) = r.at(i, j);
  return FrameChange(std::move(m));
}

namespace {

// det of the square submatrix of `m` with the given rows and columns; this is
// the coefficient a pulled-back basis wedge contributes to one canonical key.
Rational minor_det(const RatMatrix& m, const std::vector<int>& rows,
                   const std::vector<int>& cols) {
  const int k = static_cast<int>(rows.size());
  RatMatrix sub(k, k);
  for (int r = 0; r < k; ++r)
    for (int c = 0; c < k; ++c)
      sub.at(r, c) = m.at(rows[static_cast<std::size_t>(r)], cols[static_cast<std::size_t>(c)]);
  return sub.determinant();
}

SymTensor2 transport_sym2(const SymTensor2& t, const FrameChange& f) {
  if (t.variance == Variance::Upper)
    return SymTensor2{t.variance, f.matrix() * t.entries * f.matrix().transposed()};
  return SymTensor2{t.variance, f.inverse().transposed() * t.entries * f.inverse()};
}

IndexedVector transport_vector(const IndexedVector& v, const FrameChange& f) {
  if (v.variance == Variance::Upper) return IndexedVector{v.variance, f.matrix().apply(v.entries)};
  return IndexedVector{v.variance, f.inverse().transposed().apply(v.entries)};
}

}  // namespace

Form pullback_form(const Form& a, const FrameChange& f) {
  if (a.dim != f.dim()) throw std::invalid_argument("pullback_form: dimension mismatch");
  const RatMatrix& w = f.inverse();
  Form out = Form::zero(a.dim, a.degree);
  for (const auto& [key, value] : a.terms) {
    const std::vector<int> rows = key.indices();
    for_each_index_set(a.dim, a.degree, [&](MultiIndex target) {
      const Rational coefficient = minor_det(w, rows, target.indices());
      if (coefficient != 0) out.add_term(target, value * coefficient);
    });
  }
  return out;
}

SpacetimeStructure pullback_structure(const SpacetimeStructure& s, const FrameChange& f) {
  if (s.dim != f.dim()) throw std::invalid_argument("pullback_structure: dimension mismatch");
  SpacetimeStructure out = s;
  out.metric_or_h = transport_sym2(s.metric_or_h, f);
  if (s.xi) out.xi = transport_vector(*s.xi, f);
  if (s.k) out.k = transport_sym2(*s.k, f);
  out.vol = pullback_form(s.vol, f);
  // The top polyvector carries upper indices throughout, so it scales with
  // det(A) rather than det(A^{-1}).
  out.polyvol = f.det() * s.polyvol;
  return out;
}

bool check_naturality(const Form& a, const SpacetimeStructure& s, StarVariant variant,
                      const FrameChange& f) {
  const Form lhs = pullback_form(star_oracle(a, s, variant), f);
  const Form rhs = star_oracle(pullback_form(a, f), pullback_structure(s, f), variant);
  return lhs == rhs;
}

}  // namespace gcstar
