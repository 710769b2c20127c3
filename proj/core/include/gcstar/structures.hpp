#pragma once

#include <optional>
#include <string>
#include <vector>

#include "gcstar/form.hpp"
#include "gcstar/linalg.hpp"

namespace gcstar {

enum class SpacetimeKind { Minkowski, Galilean, Carrollian };

// Index placement of a tensor's components.  Raising tensors (inverse
// metric, Galilean h, Carrollian k-tilde) carry Upper; lowering tensors
// (Carrollian h-tilde, Galilean k) and the volume form carry Lower.
enum class Variance { Upper, Lower };

struct SymTensor2 {
  Variance variance = Variance::Upper;
  RatMatrix entries;  // d x d, symmetric

  friend bool operator==(const SymTensor2&, const SymTensor2&) = default;
};

struct IndexedVector {
  Variance variance = Variance::Lower;
  std::vector<Rational> entries;  // length d

  friend bool operator==(const IndexedVector&, const IndexedVector&) = default;
};

// Non-canonical normalization constants.  The canonical constructors fix the
// spatial scale, the companion scale, and the top polyvector scale so the two
// degenerate star families mesh into a single table in four dimensions; any
// nonzero override is accepted and threaded through every formula exactly.
struct StructureOverrides {
  std::optional<Rational> lambda_h;
  std::optional<Rational> lambda_k;
  std::optional<Rational> mu;
};

/* One flat spacetime in an adapted frame e_0, e_1, ..., e_n (d = 1 + n).

   Minkowski carries the inverse metric g^{ab} = diag(1, -1, ..., -1).

   Galilean carries a corank-one "raising" tensor h^{ab} (temporal row and
   column zero, spatial block lambda_h * delta) annihilated by the clock
   covector xi = e^0, plus the rank-one companion k_{ab} = lambda_k xi_a xi_b.

   Carrollian mirrors this with lower/upper indices swapped: a corank-one
   lowering tensor h~_{ab} annihilated by the vector xi~ = e_0, and the
   rank-one raising companion k~^{ab} = lambda_k xi~^a xi~^b.

   vol is the top-degree form with components epsilon (coefficient 1 on
   e^0 ^ ... ^ e^n); polyvol is the top-degree polyvector, upper-index
   components mu * epsilon.  Note vol is never rescaled; only polyvol
   carries mu. */
struct SpacetimeStructure {
  SpacetimeKind kind = SpacetimeKind::Minkowski;
  int dim = 0;

  SymTensor2 metric_or_h;             // g^{ab}, h^{ab}, or h~_{ab} by kind
  std::optional<IndexedVector> xi;    // absent for Minkowski
  std::optional<SymTensor2> k;        // rank-one companion, absent for Minkowski
  Form vol;                           // degree-d volume form
  Form polyvol;                       // degree-d polyvector (upper components)

  Rational lambda_h = -1;
  Rational lambda_k = 1;
  Rational mu = 1;

  int spatial_dim() const { return dim - 1; }

  friend bool operator==(const SpacetimeStructure&, const SpacetimeStructure&) = default;
};

// n = number of spatial dimensions, n >= 1.  Overrides must be nonzero.
SpacetimeStructure make_minkowski(int n);
SpacetimeStructure make_galilean(int n, const StructureOverrides& overrides = {});
SpacetimeStructure make_carrollian(int n, const StructureOverrides& overrides = {});

/* Checks that the components really are those of an adapted frame (up to the
   stored normalization constants) and returns one message per violated
   condition: symmetry, annihilation by xi, spatial rank, the rank-one
   companion, canonical xi, canonical spatial block, and the vol / polyvol
   normalizations.  Empty means valid.  Rank is established by exact Gaussian
   elimination, so a planted defect is reported no matter how small. */
std::vector<std::string> validate_adapted(const SpacetimeStructure& s);

// {"kind": "galilei", "n": 3, "lambda_h": "-1", "lambda_k": "-1", "mu": "-1",
//  "h": [[...]], "xi": [...]}  -- lambdas/mu optional (canonical defaults),
//  h/xi optional (derived from the constants when omitted).
SpacetimeStructure structure_from_json(const std::string& text);  // throws ParseError
std::string structure_to_json(const SpacetimeStructure& s);

std::string kind_name(SpacetimeKind kind);                       // minkowski/galilei/carroll
std::optional<SpacetimeKind> kind_from_name(std::string_view);   // nullopt on unknown

}  // namespace gcstar
