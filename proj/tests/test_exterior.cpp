#include <doctest.h>

#include <sstream>
#include <vector>

#include "gcstar/form.hpp"
#include "gcstar/form_text.hpp"
#include "gcstar/linalg.hpp"
#include "gcstar/multi_index.hpp"
#include "gcstar/rational.hpp"

using namespace gcstar;

TEST_CASE("rational parsing accepts integers and fractions, rejects junk") {
  CHECK(parse_rational("3") == Rational(3));
  CHECK(parse_rational("-3") == Rational(-3));
  CHECK(parse_rational("2/5") == make_rational(2, 5));
  CHECK(parse_rational("-2/5") == make_rational(-2, 5));
  CHECK(parse_rational(" 7/2 ") == make_rational(7, 2));
  CHECK(parse_rational("4/6") == make_rational(2, 3));
  CHECK_FALSE(parse_rational("").has_value());
  CHECK_FALSE(parse_rational("1/0").has_value());
  CHECK_FALSE(parse_rational("a/b").has_value());
  CHECK_FALSE(parse_rational("1.5").has_value());
  CHECK_FALSE(parse_rational("1/2/3").has_value());
}

TEST_CASE("rational arithmetic is exact at large sizes") {
  Rational big = 1;
  for (int i = 1; i <= 40; ++i) big *= make_rational(i, i + 1);
  // telescoping product: 1/41
  CHECK(big == make_rational(1, 41));
  CHECK(sign_pow(0) == Rational(1));
  CHECK(sign_pow(7) == Rational(-1));
  CHECK(sign_pow(-3) == Rational(-1));
  CHECK(sign_pow(-4) == Rational(1));
}

TEST_CASE("multi-index construction, ordering, and queries") {
  const auto i01 = MultiIndex::from_indices({0, 1});
  const auto i12 = MultiIndex::from_indices({2, 1});
  CHECK(i01.degree() == 2);
  CHECK(i01.has_temporal());
  CHECK_FALSE(i12.has_temporal());
  CHECK(i01.contains(1));
  CHECK_FALSE(i01.contains(2));
  CHECK(i01 < i12);                                  // same degree, lex order
  CHECK(MultiIndex{} < i01);                         // lower degree first
  CHECK(i01 < MultiIndex::from_indices({0, 1, 2}));  // degree dominates
  CHECK(MultiIndex::full(3) == MultiIndex::from_indices({0, 1, 2}));
  CHECK(i01.unite(MultiIndex::from_indices({2})) == MultiIndex::full(3));
  CHECK_THROWS_AS(i01.unite(i12), std::invalid_argument);  // share index 1
  CHECK(i01.without(0) == MultiIndex::from_indices({1}));
  CHECK(i01.with(3).indices() == std::vector<int>{0, 1, 3});
  CHECK_THROWS_AS(MultiIndex::from_indices({1, 1}), std::invalid_argument);
  CHECK_THROWS_AS(MultiIndex::from_indices({-1}), std::invalid_argument);
}

TEST_CASE("levi-civita sign counts inversions and kills repeats") {
  CHECK(levi_civita(std::vector<int>{0, 1, 2}) == 1);
  CHECK(levi_civita(std::vector<int>{1, 0, 2}) == -1);
  CHECK(levi_civita(std::vector<int>{2, 0, 1}) == 1);
  CHECK(levi_civita(std::vector<int>{1, 1, 2}) == 0);
  CHECK(levi_civita(std::vector<int>{}) == 1);
}

TEST_CASE("merge sign matches explicit permutation sign") {
  const auto a = MultiIndex::from_indices({1, 3});
  const auto b = MultiIndex::from_indices({0, 2});
  // concatenated (1,3,0,2) -> sorted needs sign -1
  CHECK(merge_sign(a, b) == -1);
  std::vector<int> concat = {1, 3, 0, 2};
  CHECK(levi_civita(concat) == -1);
  CHECK(merge_sign(MultiIndex{}, b) == 1);
  CHECK(merge_sign(a, MultiIndex{}) == 1);
}

TEST_CASE("index-set enumeration is complete and canonical") {
  std::vector<MultiIndex> sets;
  for_each_index_set(4, 2, [&](MultiIndex m) { sets.push_back(m); });
  CHECK(sets.size() == 6);
  // visits masks in increasing numeric order, each exactly once
  for (std::size_t i = 0; i + 1 < sets.size(); ++i) CHECK(sets[i].bits() < sets[i + 1].bits());
  for (const auto& m : sets) {
    CHECK(m.degree() == 2);
    CHECK(m.max_index_below(4));
  }
  CHECK(sets.front() == MultiIndex::from_indices({0, 1}));
  CHECK(sets.back() == MultiIndex::from_indices({2, 3}));
  int count = 0;
  for_each_index_set(5, 0, [&](MultiIndex m) {
    CHECK(m.empty());
    ++count;
  });
  CHECK(count == 1);
  for_each_index_set(3, 4, [&](MultiIndex) { CHECK(false); });
}

TEST_CASE("exact linear algebra: determinant, inverse, rank") {
  RatMatrix a(3, 3);
  int v = 1;
  for (int r = 0; r < 3; ++r)
    for (int c = 0; c < 3; ++c) a.at(r, c) = Rational(v++);
  CHECK(a.determinant() == 0);
  CHECK(a.rank() == 2);
  CHECK_FALSE(a.inverse().has_value());

  const RatMatrix b = {{make_rational(1, 2), Rational(1)}, {Rational(3), Rational(4)}};
  CHECK(b.determinant() == Rational(-1));
  const RatMatrix binv = *b.inverse();
  CHECK(b * binv == RatMatrix::identity(2));
  CHECK(binv * b == RatMatrix::identity(2));

  CHECK(RatMatrix::identity(5).determinant() == 1);
}

TEST_CASE("wedge product is associative, graded-commutative, and nilpotent") {
  const int dim = 4;
  const Form dt = Form::basis(dim, MultiIndex::from_indices({0}));
  const Form dx = Form::basis(dim, MultiIndex::from_indices({1}));
  const Form dy = Form::basis(dim, MultiIndex::from_indices({2}));

  CHECK(wedge(dt, dt).is_zero());
  CHECK(wedge(dt, dx) == -wedge(dx, dt));
  CHECK(wedge(wedge(dt, dx), dy) == wedge(dt, wedge(dx, dy)));

  const Form a = parse_form("2 dt^dx + dy^dz", dim);
  const Form b = parse_form("dt^dy - 3 dx^dz", dim);
  CHECK(wedge(a, b) == wedge(b, a));  // even degrees commute
  const Form c = parse_form("dt + dx", dim);
  const Form d = parse_form("dy - dz", dim);
  CHECK(wedge(c, d) == -wedge(d, c));

  // degree overflow collapses to the zero form of clamped degree
  const Form vol = parse_form("dt^dx^dy^dz", dim);
  CHECK(wedge(vol, c).is_zero());
}

TEST_CASE("eta involution flips odd degrees") {
  const int dim = 4;
  const Form a = parse_form("dt^dx^dy", dim);
  CHECK(eta(a) == -a);
  const Form b = parse_form("dt^dx", dim);
  CHECK(eta(b) == b);
  const Form s = Form::scalar(dim, Rational(5));
  CHECK(eta(s) == s);
}

TEST_CASE("temporal/spatial decomposition round-trips") {
  const int dim = 4;
  const Form alpha = parse_form("3 dt^dx^dy + dx^dy^dz - 2 dt^dy^dz", dim);
  const Decomposition dec = decompose(alpha);
  CHECK(dec.s_hat.degree() == 2);
  CHECK(dec.r_hat.degree() == 3);
  CHECK(dec.s_hat.form() == parse_form("3 dx^dy - 2 dy^dz", dim));
  CHECK(dec.r_hat.form() == parse_form("dx^dy^dz", dim));
  CHECK(recompose(dec) == alpha);

  const Form scalar = Form::scalar(dim, Rational(7));
  const Decomposition dec0 = decompose(scalar);
  CHECK(dec0.s_hat.form().is_zero());
  CHECK(dec0.r_hat.form() == scalar);
  CHECK(recompose(dec0) == scalar);
}

TEST_CASE("spatial forms reject temporal legs") {
  const int dim = 4;
  CHECK_THROWS_AS(SpatialForm(parse_form("dt^dx", dim)), std::invalid_argument);
  CHECK_NOTHROW(SpatialForm(parse_form("dx^dy", dim)));
}

TEST_CASE("form text round-trips through parse and print") {
  const int dim = 4;
  const std::vector<std::string> cases = {
      "0",
      "5",
      "-2/3",
      "dt",
      "-dt^dx",
      "dt^dx - dt^dy + 2 dx^dz",
      "1/2 dt^dx^dy^dz",
      "dx - dy + dz - dt",
  };
  for (const auto& text : cases) {
    const Form f = parse_form(text, dim);
    const Form again = parse_form(print_form(f), dim);
    CHECK(again == f);
  }
  CHECK(print_form(parse_form("dx - dy + dz - dt", dim)) == "-dt + dx - dy + dz");
  CHECK(print_form(parse_form("2/4 dt", dim)) == "1/2 dt");
  CHECK(print_form(Form::zero(4, 2)) == "0");
}

TEST_CASE("form parser accepts general-dimension labels and rejects misuse") {
  const Form f = parse_form("dx1^dx2 - 2 dt^dx4", 5);
  CHECK(f.degree == 2);
  CHECK(f.coefficient(MultiIndex::from_indices({1, 2})) == 1);
  CHECK(f.coefficient(MultiIndex::from_indices({0, 4})) == -2);
  CHECK_THROWS_AS(parse_form("dx", 5), ParseError);       // dx/dy/dz only in dim 4
  CHECK_THROWS_AS(parse_form("dx5", 5), ParseError);      // out of range
  CHECK_THROWS_AS(parse_form("dt + dx^dy", 4), ParseError);  // mixed degree
  CHECK_THROWS_AS(parse_form("2 3 dt", 4), ParseError);
  CHECK_THROWS_AS(parse_form("", 4), ParseError);
  CHECK(parse_form("dt^dt", 4).is_zero());  // repeated factor folds to zero
  CHECK(parse_form("0 dt^dx + dy^dz", 4) == parse_form("dy^dz", 4));
}

TEST_CASE("zero forms absorb degree on addition") {
  const Form z = Form::zero(4, 0);  // degenerate degree-0 zero
  const Form a = parse_form("dt^dx", 4);
  CHECK((z + a) == a);
  CHECK((a + z) == a);
}
