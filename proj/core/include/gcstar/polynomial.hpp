#pragma once

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "gcstar/rational.hpp"

namespace gcstar {

/* Multivariate polynomial over the exact rationals.  Monomials map an
   exponent-per-variable vector to a coefficient; zero coefficients are never
   stored.  Variables are coordinate slots x^0 .. x^{d-1}; with four
   variables slot 0 prints as t and slots 1..3 as x, y, z, the vocabulary the
   field components are written in. */
class Polynomial {
 public:
  using Monomial = std::vector<int>;  // one exponent per variable

  explicit Polynomial(int nvars = 0) : nvars_(nvars) {}
  static Polynomial constant(int nvars, const Rational& c);
  static Polynomial variable(int nvars, int index);

  int nvars() const { return nvars_; }
  bool is_zero() const { return terms_.empty(); }
  const std::map<Monomial, Rational>& terms() const { return terms_; }

  void add_term(Monomial exponents, const Rational& coefficient);

  Polynomial& operator+=(const Polynomial& other);
  Polynomial& operator-=(const Polynomial& other);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator-(const Polynomial& a);
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Rational& c, const Polynomial& a);

  Polynomial derivative(int var) const;

  // Substitutes images[i] for variable i; images must all share one variable
  // count, which becomes the result's.
  Polynomial substitute(const std::vector<Polynomial>& images) const;

  friend bool operator==(const Polynomial&, const Polynomial&) = default;

 private:
  int nvars_;
  std::map<Monomial, Rational> terms_;
};

// Grammar: terms joined by + and -, each a product of an optional rational
// coefficient and powers "var^k" joined by '*' or plain juxtaposition
// ("3*x^2*y" and "3 x^2 y" parse the same).  Variable names follow the slot
// vocabulary above.  Throws ParseError.
Polynomial parse_polynomial(std::string_view text, int nvars);

// Canonical rendering matching the parse grammar; "0" for the zero
// polynomial.
std::string to_string(const Polynomial& p);

std::string coordinate_name(int index, int nvars);

}  // namespace gcstar
