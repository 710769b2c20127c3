#pragma once

#include <map>

#include "gcstar/multi_index.hpp"
#include "gcstar/rational.hpp"

namespace gcstar {

/* Exterior form of a single degree on a d-dimensional frame, as a sparse map
   from canonical (ascending) MultiIndex to exact rational coefficient.

   Invariants:
     - every key has exactly `degree` indices, all below `dim`;
     - no zero coefficients are stored;
     - the zero form keeps an explicit degree so that degree-dependent signs
       (eta, complementary-degree bookkeeping) stay well defined.

   Mutate through set_term/add_term, which maintain the invariants. */
struct Form {
  int dim = 0;
  int degree = 0;
  std::map<MultiIndex, Rational> terms;

  static Form zero(int dim, int degree);
  static Form scalar(int dim, const Rational& value);           // degree 0
  static Form basis(int dim, const MultiIndex& key);            // coefficient 1
  static Form basis(int dim, std::initializer_list<int> idxs);  // convenience

  bool is_zero() const { return terms.empty(); }
  Rational coefficient(const MultiIndex& key) const;

  void set_term(const MultiIndex& key, const Rational& value);  // overwrite
  void add_term(const MultiIndex& key, const Rational& value);  // accumulate

  friend bool operator==(const Form&, const Form&) = default;
};

// Addition of a zero form adopts the other operand's degree; otherwise both
// dims and degrees must agree.
Form operator+(const Form& a, const Form& b);
Form operator-(const Form& a, const Form& b);
Form operator-(const Form& a);
Form operator*(const Rational& c, const Form& a);

// Exterior product; degrees add (clamped to dim once the product can only be
// zero).  Throws on mismatched dims.
Form wedge(const Form& a, const Form& b);

// Degree involution: eta(a) = (-1)^degree a.
Form eta(const Form& a);

// A form with no temporal leg: index 0 absent from every key.  Spatial forms
// live in the same d-dimensional frame; only their index sets are restricted
// to 1..n.
class SpatialForm {
 public:
  explicit SpatialForm(Form f);  // throws when a key contains index 0
  static SpatialForm zero(int dim, int degree);

  const Form& form() const { return form_; }
  int dim() const { return form_.dim; }
  int degree() const { return form_.degree; }

  friend bool operator==(const SpatialForm&, const SpatialForm&) = default;

 private:
  Form form_;
};

// Unique splitting  a = e0 ^ s_hat + r_hat  with both parts spatial;
// s_hat has degree p-1 (clamped at 0 for scalars, where it is zero anyway).
struct Decomposition {
  SpatialForm s_hat;  // temporal factor's spatial companion
  SpatialForm r_hat;  // purely spatial remainder
};
Decomposition decompose(const Form& a);

// Exact inverse of decompose.
Form recompose(const Decomposition& parts);

}  // namespace gcstar
