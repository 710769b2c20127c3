#include <doctest.h>

#include <vector>

#include "gcstar/form_text.hpp"
#include "gcstar/transform.hpp"

using namespace gcstar;

namespace {

std::vector<Rational> vel(std::initializer_list<Rational> v) { return std::vector<Rational>(v); }

// 2x2 rotation block from the pythagorean parametrization embedded at rows
// and columns (i, j) of an n x n identity.
RatMatrix plane_rotation(int n, int i, int j, const Rational& u) {
  const Rational denom = 1 + u * u;
  RatMatrix r = RatMatrix::identity(n);
  r.at(i, i) = (1 - u * u) / denom;
  r.at(j, j) = r.at(i, i);
  r.at(i, j) = -2 * u / denom;
  r.at(j, i) = 2 * u / denom;
  return r;
}

}  // namespace

TEST_CASE("frame changes require invertibility and compose by matrix product") {
  CHECK_THROWS_AS(FrameChange(RatMatrix(3, 3)), std::invalid_argument);  // zero matrix
  CHECK_THROWS_AS(FrameChange(RatMatrix(2, 3)), std::invalid_argument);  // not square

  const FrameChange a = galilei_boost(vel({1, 2, 3}));
  const FrameChange b = galilei_boost(vel({make_rational(1, 2), 0, -1}));
  const FrameChange ab = a * b;
  CHECK(ab.matrix() == a.matrix() * b.matrix());
  CHECK(ab.det() == a.det() * b.det());
  CHECK(ab.inverse() * ab.matrix() == RatMatrix::identity(4));
}

TEST_CASE("galilei boosts form an abelian group isomorphic to velocity addition") {
  const auto v = vel({1, make_rational(-2, 3), 5});
  const auto w = vel({make_rational(7, 2), 4, -1});
  const FrameChange bv = galilei_boost(v);
  const FrameChange bw = galilei_boost(w);
  // matrix shape [[1, 0], [v, I]]
  CHECK(bv.matrix().at(0, 0) == 1);
  CHECK(bv.matrix().at(1, 0) == 1);
  CHECK(bv.matrix().at(2, 0) == make_rational(-2, 3));
  CHECK(bv.matrix().at(0, 1) == 0);
  CHECK(bv.matrix().at(1, 1) == 1);
  CHECK(bv.det() == 1);

  std::vector<Rational> sum;
  for (std::size_t i = 0; i < v.size(); ++i) sum.push_back(v[i] + w[i]);
  CHECK(bv * bw == galilei_boost(sum));
  CHECK(bv * bw == bw * bv);
  CHECK(galilei_boost(vel({0, 0, 0})).matrix() == RatMatrix::identity(4));
}

TEST_CASE("carroll boosts transpose the galilei block shape") {
  const auto v = vel({2, make_rational(1, 3)});
  const FrameChange bv = carroll_boost(v);
  // matrix shape [[1, v^T], [0, I]]
  CHECK(bv.matrix().at(0, 1) == 2);
  CHECK(bv.matrix().at(0, 2) == make_rational(1, 3));
  CHECK(bv.matrix().at(1, 0) == 0);
  CHECK(bv.det() == 1);
  const auto w = vel({-1, 1});
  CHECK(carroll_boost(v) * carroll_boost(w) == carroll_boost(vel({1, make_rational(4, 3)})));
}

TEST_CASE("rotations embed as diag(1, R); reflections are rejected") {
  const RatMatrix r = plane_rotation(3, 0, 1, make_rational(1, 2));
  CHECK(r * r.transposed() == RatMatrix::identity(3));
  CHECK(r.determinant() == 1);
  const FrameChange f = rotation(r);
  CHECK(f.dim() == 4);
  CHECK(f.matrix().at(0, 0) == 1);
  CHECK(f.matrix().at(1, 1) == make_rational(3, 5));  // (1-u^2)/(1+u^2) at u = 1/2
  CHECK(f.det() == 1);

  RatMatrix reflection = RatMatrix::identity(3);
  reflection.at(2, 2) = -1;
  CHECK_THROWS_AS(rotation(reflection), std::invalid_argument);

  RatMatrix shear = RatMatrix::identity(3);
  shear.at(0, 1) = 1;
  CHECK_THROWS_AS(rotation(shear), std::invalid_argument);  // not orthogonal
}

TEST_CASE("pullback of the coframe under a carroll boost mixes dt into dr") {
  // e^_i = e_i + v_i e_0 means the new coframe satisfies
  // e^^0 = e^0 - v_i e^i, while the spatial coframe is unchanged.
  const FrameChange f = carroll_boost(vel({1, 2, 3}));
  CHECK(pullback_form(parse_form("dt", 4), f) == parse_form("dt - dx - 2 dy - 3 dz", 4));
  CHECK(pullback_form(parse_form("dx", 4), f) == parse_form("dx", 4));

  // and dually for a galilei boost the spatial coframe absorbs dt
  const FrameChange g = galilei_boost(vel({1, 2, 3}));
  CHECK(pullback_form(parse_form("dt", 4), g) == parse_form("dt", 4));
  CHECK(pullback_form(parse_form("dx", 4), g) == parse_form("dx - dt", 4));
  CHECK(pullback_form(parse_form("dy", 4), g) == parse_form("dy - 2 dt", 4));
}

TEST_CASE("pullback respects wedge and composes contravariantly") {
  const FrameChange f = galilei_boost(vel({1, -2, make_rational(3, 5)}));
  const FrameChange g =
      rotation(plane_rotation(3, 1, 2, make_rational(2, 3))) * carroll_boost(vel({0, 1, 0}));
  const Form a = parse_form("dt^dx - 2 dy^dz", 4);
  const Form b = parse_form("dz - 3 dt", 4);
  CHECK(pullback_form(wedge(a, b), f) == wedge(pullback_form(a, f), pullback_form(b, f)));
  // composite frame change f*g pulls back as f^* applied to g^*'s output:
  // (AB)^{-1} = B^{-1} A^{-1} and minors compose by Cauchy-Binet
  CHECK(pullback_form(a, f * g) == pullback_form(pullback_form(a, g), f));
}

TEST_CASE("adapted maps fix their structures componentwise") {
  const SpacetimeStructure gal = make_galilean(3);
  const FrameChange fg = galilei_boost(vel({make_rational(5, 7), -3, 2})) *
                         rotation(plane_rotation(3, 0, 2, make_rational(-1, 3)));
  CHECK(pullback_structure(gal, fg) == gal);

  const SpacetimeStructure car = make_carrollian(3);
  const FrameChange fc = carroll_boost(vel({make_rational(5, 7), -3, 2})) *
                         rotation(plane_rotation(3, 1, 2, Rational(4)));
  CHECK(pullback_structure(car, fc) == car);

  const SpacetimeStructure mink = make_minkowski(3);
  const FrameChange rot = rotation(plane_rotation(3, 0, 1, Rational(1)));
  CHECK(pullback_structure(mink, rot) == mink);
  // a galilei boost is not a lorentz transformation: the metric moves
  CHECK(pullback_structure(mink, fg) != mink);
  // and a galilei boost is not adapted to the carroll structure
  CHECK(pullback_structure(car, fg) != car);
}

TEST_CASE("stars commute with their adapted maps") {
  const SpacetimeStructure gal = make_galilean(3);
  const FrameChange fg = galilei_boost(vel({1, make_rational(1, 2), -2}));
  const SpacetimeStructure car = make_carrollian(3);
  const FrameChange fc = carroll_boost(vel({1, make_rational(1, 2), -2}));
  for (int p = 0; p <= 4; ++p) {
    for_each_index_set(4, p, [&](MultiIndex m) {
      const Form basis = Form::basis(4, m);
      for (StarVariant v : {StarVariant::GalileanH, StarVariant::GalileanK})
        CHECK(pullback_form(star_oracle(basis, gal, v), fg) ==
              star_oracle(pullback_form(basis, fg), gal, v));
      for (StarVariant v : {StarVariant::CarrollianH, StarVariant::CarrollianK})
        CHECK(pullback_form(star_oracle(basis, car, v), fc) ==
              star_oracle(pullback_form(basis, fc), car, v));
    });
  }
}

TEST_CASE("naturality holds for arbitrary invertible frame changes") {
  const RatMatrix m = {{Rational(2), Rational(1), Rational(0), Rational(0)},
                       {Rational(1), Rational(1), Rational(0), Rational(-1)},
                       {Rational(0), Rational(3), Rational(1), Rational(0)},
                       {Rational(0), Rational(0), Rational(2), Rational(1)}};
  const FrameChange f{m};
  for (const auto& s : {make_minkowski(3), make_galilean(3), make_carrollian(3)}) {
    for (StarVariant v : {StarVariant::MinkowskiMetric, StarVariant::GalileanH,
                          StarVariant::GalileanK, StarVariant::CarrollianH,
                          StarVariant::CarrollianK}) {
      if (!variant_compatible(s.kind, v)) continue;
      for (int p = 0; p <= 4; ++p) {
        for_each_index_set(4, p, [&](MultiIndex key) {
          CHECK(check_naturality(Form::basis(4, key), s, v, f));
        });
      }
    }
  }
}

TEST_CASE("transported structures feed the oracle star consistently") {
  // spell one naturality instance out by hand: transport, star, compare
  const SpacetimeStructure gal = make_galilean(2);
  const RatMatrix m = {{Rational(1), Rational(2), Rational(0)},
                       {Rational(0), Rational(1), Rational(1)},
                       {Rational(1), Rational(0), Rational(3)}};
  const FrameChange f{m};
  const SpacetimeStructure moved = pullback_structure(gal, f);
  CHECK(moved != gal);
  const Form alpha = parse_form("dx1^dx2", 3);
  const Form lhs = pullback_form(star_oracle(alpha, gal, StarVariant::GalileanH), f);
  const Form rhs = star_oracle(pullback_form(alpha, f), moved, StarVariant::GalileanH);
  CHECK(lhs == rhs);
}
