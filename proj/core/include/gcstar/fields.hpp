#pragma once

#include <array>
#include <map>
#include <string>
#include <vector>

#include "gcstar/hodge.hpp"
#include "gcstar/polynomial.hpp"
#include "gcstar/transform.hpp"

namespace gcstar {

// Differential form with polynomial coefficients on flat spacetime; the
// coefficient ring's variables are the coordinates, one per frame index.
struct PolyForm {
  int dim = 0;
  int degree = 0;
  std::map<MultiIndex, Polynomial> terms;

  static PolyForm zero(int dim, int degree);
  bool is_zero() const { return terms.empty(); }
  Polynomial coefficient(const MultiIndex& key) const;
  void add_term(const MultiIndex& key, const Polynomial& value);  // accumulate, drop zeros

  friend bool operator==(const PolyForm&, const PolyForm&) = default;
};

PolyForm operator+(const PolyForm& a, const PolyForm& b);
PolyForm operator-(const PolyForm& a, const PolyForm& b);
PolyForm wedge(const PolyForm& a, const PolyForm& b);

// d alpha = dx^a ^ (d alpha / dx^a); exact, so d(d alpha) == 0 on the nose.
PolyForm exterior_derivative(const PolyForm& a);

// Coordinate pullback along x -> L x + c: substitute into the coefficients
// and recombine legs with the Jacobian L.
PolyForm pullback_field(const PolyForm& a, const AffineMap& map);

// A spatial vector field on four-dimensional spacetime: three polynomial
// components in (t, x, y, z).
using VectorField3 = std::array<Polynomial, 3>;

struct FieldPair {
  VectorField3 E;
  VectorField3 B;
};

// Faraday 2-form F = dt ^ (E . dr) - B . dS.
PolyForm build_F(const VectorField3& e_field, const VectorField3& b_field);
// Inverse of build_F on degree-2 forms in four dimensions.
FieldPair split_F(const PolyForm& f);

// The four-dimensional star table applied coefficientwise.
PolyForm star_field(const PolyForm& a, SpacetimeKind kind);

/* Residuals of the first-order equations each spacetime kind extracts from
   dF = 0 and d *F = 0, with F built from (E, B) as above.  A residual is the
   polynomial left-hand side of one equation "... = 0":

     Faraday       curl E + dt B          (from dF, all kinds)
     NoMonopole    div B                  (from dF, all kinds)
     Gauss         div E                  (from d*F: minkowski, carroll)
     Ampere        curl B - dt E          (from d*F, minkowski)
                   curl B                 (from d*F, galilei)
     TimeConstancy dt E                   (from d*F, carroll)

   The galilean *F has no purely spatial part, so its d*F has no volume
   component and no Gauss-type residual exists to extract; symmetrically the
   carrollian *F has no dt ^ dr part and its Ampere row degenerates to the
   time-constancy of E.  extract_equations emits exactly the residuals that
   exist for the kind:

     minkowski   Gauss, Ampere, Faraday, NoMonopole
     galilei     Ampere, Faraday, NoMonopole
     carroll     TimeConstancy, Gauss, Faraday, NoMonopole          */
enum class EquationTag { Gauss, Ampere, Faraday, NoMonopole, TimeConstancy };

std::string equation_tag_name(EquationTag tag);

struct Residual {
  EquationTag tag;
  std::vector<Polynomial> components;  // 3 for vector equations, 1 for scalar

  bool vanishes() const;
  friend bool operator==(const Residual&, const Residual&) = default;
};

struct EquationSet {
  SpacetimeKind kind = SpacetimeKind::Minkowski;
  std::vector<Residual> residuals;

  bool satisfied() const;
  friend bool operator==(const EquationSet&, const EquationSet&) = default;
};

EquationSet extract_equations(const VectorField3& e_field, const VectorField3& b_field,
                              SpacetimeKind kind);

// Plain vector calculus on the same fields, computed straight from partial
// derivatives with no forms machinery; the independent cross-check for
// extract_equations.
struct VectorCalculus {
  Polynomial div_e;
  VectorField3 curl_e;
  VectorField3 dt_e;
  Polynomial div_b;
  VectorField3 curl_b;
  VectorField3 dt_b;
};
VectorCalculus vector_calculus(const VectorField3& e_field, const VectorField3& b_field);

// Pulls (E, B) back along the kind's boost with velocity v and reports
// whether "all residuals vanish" is preserved.  Galilean and carrollian
// kinds only.
bool check_boost_covariance(const VectorField3& e_field, const VectorField3& b_field,
                            std::span<const Rational> velocity, SpacetimeKind kind);

// {"E": ["...", "...", "..."], "B": [...]} with polynomial strings in
// t, x, y, z.  A missing field is the zero field.  Throws ParseError.
FieldPair fields_from_json(const std::string& text);
std::string fields_to_json(const FieldPair& fields);

// {"kind": ..., "residuals": [{"tag": ..., "components": [...]}],
//  "satisfied": bool}
std::string equations_to_json(const EquationSet& set);

}  // namespace gcstar
