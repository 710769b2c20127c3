#include <doctest.h>

#include "gcstar/polynomial.hpp"

using namespace gcstar;

namespace {

Polynomial var(int i) { return Polynomial::variable(4, i); }

}  // namespace

TEST_CASE("polynomial arithmetic is exact and canonical") {
  const Polynomial t = var(0), x = var(1), y = var(2);
  const Polynomial p = (x + y) * (x - y);
  CHECK(p == x * x - y * y);
  CHECK((p - p).is_zero());
  CHECK((make_rational(1, 2) * (x + x)) == x);
  const Polynomial q = t * t * t - Polynomial::constant(4, 1);
  CHECK(q * Polynomial::constant(4, 0) == Polynomial(4));
  CHECK(-(-q) == q);
  CHECK_THROWS_AS(x + Polynomial::variable(3, 1), std::invalid_argument);
}

TEST_CASE("derivative obeys leibniz and equality of mixed partials") {
  const Polynomial t = var(0), x = var(1), z = var(3);
  const Polynomial p = t * t * x + Rational(3) * x * z - Polynomial::constant(4, 7);
  CHECK(p.derivative(0) == Rational(2) * t * x);
  CHECK(p.derivative(1) == t * t + Rational(3) * z);
  CHECK(p.derivative(2).is_zero());

  const Polynomial a = t * x * x + z;
  const Polynomial b = x * z - t;
  CHECK((a * b).derivative(1) == a.derivative(1) * b + a * b.derivative(1));
  CHECK(a.derivative(0).derivative(1) == a.derivative(1).derivative(0));
}

TEST_CASE("substitution composes polynomials") {
  const Polynomial t = var(0), x = var(1), y = var(2), z = var(3);
  const Polynomial p = x * x + y;
  // x -> x + t, y -> y - 2t, t -> t, z -> z
  const Polynomial moved = p.substitute({t, x + t, y - Rational(2) * t, z});
  CHECK(moved == x * x + Rational(2) * t * x + t * t + y - Rational(2) * t);
  // substituting the identity is a no-op
  CHECK(p.substitute({t, x, y, z}) == p);
  // constants pass through untouched
  CHECK(Polynomial::constant(4, make_rational(5, 3)).substitute({t, x, y, z}) ==
        Polynomial::constant(4, make_rational(5, 3)));
  CHECK_THROWS_AS(p.substitute({t, x}), std::invalid_argument);
}

TEST_CASE("polynomial text round-trips") {
  const std::vector<std::string> cases = {
      "0", "1", "-3/2", "t", "x^2*y - z", "2*t*x - 1/2*y^2 + z^3", "-t + x - y + z",
  };
  for (const auto& text : cases) {
    const Polynomial p = parse_polynomial(text, 4);
    CHECK(parse_polynomial(to_string(p), 4) == p);
  }
  CHECK(to_string(parse_polynomial("x*x*x", 4)) == "x^3");
  CHECK(to_string(parse_polynomial("y + x", 4)) == "x + y");
  CHECK(to_string(parse_polynomial("0*x + 0", 4)) == "0");
  CHECK(parse_polynomial("3 x^2 y", 4) == parse_polynomial("3*x^2*y", 4));
  CHECK(parse_polynomial("x1*x0", 5) == Polynomial::variable(5, 1) * Polynomial::variable(5, 0));
}

TEST_CASE("polynomial parser rejects malformed input") {
  CHECK_THROWS_AS(parse_polynomial("", 4), ParseError);
  CHECK_THROWS_AS(parse_polynomial("x +", 4), ParseError);
  CHECK_THROWS_AS(parse_polynomial("q", 4), ParseError);
  CHECK_THROWS_AS(parse_polynomial("x^", 4), ParseError);
  CHECK_THROWS_AS(parse_polynomial("x^y", 4), ParseError);
  CHECK_THROWS_AS(parse_polynomial("1/0", 4), ParseError);
  CHECK_THROWS_AS(parse_polynomial("x$", 4), ParseError);
  CHECK_THROWS_AS(parse_polynomial("x", 3), ParseError);  // t,x,y,z only with 4 variables
  CHECK_THROWS_AS(parse_polynomial("x9", 4), ParseError);
  CHECK_THROWS_AS(parse_polynomial("x^99999999999999999999", 4), ParseError);
}

TEST_CASE("coordinate names follow the slot vocabulary") {
  CHECK(coordinate_name(0, 4) == "t");
  CHECK(coordinate_name(3, 4) == "z");
  CHECK(coordinate_name(0, 3) == "x0");
  CHECK(coordinate_name(2, 5) == "x2");
}
