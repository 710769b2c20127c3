#pragma once

#include <span>
#include <vector>

#include "gcstar/hodge.hpp"
#include "gcstar/linalg.hpp"
#include "gcstar/structures.hpp"

namespace gcstar {

/* Invertible change of frame  e_a  ->  e^_a = A^b_a e_b,  stored as the
   d x d matrix with entries matrix[b][a] = A^b_a: column a holds the new
   frame vector e^_a in the old basis.  The dual coframe then transforms with
   the inverse, e^^a = (A^{-1})^a_b e^b, which is what pullback_form applies.

   Composition is plain matrix multiplication; dets multiply.  The adapted
   boosts have det exactly 1, and rotations are required to. */
class FrameChange {
 public:
  explicit FrameChange(RatMatrix matrix);  // throws when singular

  int dim() const { return matrix_.rows(); }
  const RatMatrix& matrix() const { return matrix_; }
  const RatMatrix& inverse() const { return inverse_; }
  const Rational& det() const { return det_; }

  friend FrameChange operator*(const FrameChange& a, const FrameChange& b);
  friend bool operator==(const FrameChange& a, const FrameChange& b) {
    return a.matrix_ == b.matrix_;
  }

 private:
  RatMatrix matrix_;
  RatMatrix inverse_;
  Rational det_;
};

// Galilean boost: e^_0 = e_0 + v^i e_i, spatial frame unchanged.  Block form
// [[1, 0], [v, I]].  v has one entry per spatial dimension.
FrameChange galilei_boost(std::span<const Rational> velocity);

// Carrollian boost: e^_i = e_i + v_i e_0, temporal frame unchanged.  Block
// form [[1, v^T], [0, I]].
FrameChange carroll_boost(std::span<const Rational> velocity);

// Embeds an n x n spatial rotation as diag(1, R).  R must be exactly
// orthogonal with det +1; reflections (det -1) are rejected.
FrameChange rotation(const RatMatrix& r);

// Coframe substitution e^a -> sum_b inverse[a][b] e^b applied to every leg.
Form pullback_form(const Form& a, const FrameChange& f);

// Transports every piece of the structure: lower slots contract the rows of
// the inverse matrix, upper slots the rows of the matrix itself; the top
// polyvector picks up det(A), the volume form det(A^{-1}).  Normalization
// constants are copied: they describe the canonical components and remain
// meaningful exactly when A lies in the structure's adapted group, in which
// case the output equals the input componentwise.
SpacetimeStructure pullback_structure(const SpacetimeStructure& s, const FrameChange& f);

// Naturality of the star under an arbitrary invertible frame change:
//   pullback(star(a))  ==  star'(pullback(a))
// with star' taken over the transported structure.  Both sides go through
// the oracle star.
bool check_naturality(const Form& a, const SpacetimeStructure& s, StarVariant variant,
                      const FrameChange& f);

// Affine coordinate map x -> linear.matrix() x + translation on flat
// spacetime; the linear part doubles as the Jacobian when pulling back
// polynomial-coefficient forms.
struct AffineMap {
  FrameChange linear;
  std::vector<Rational> translation;
};

}  // namespace gcstar
