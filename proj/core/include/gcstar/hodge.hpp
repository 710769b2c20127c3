#pragma once

#include <map>
#include <memory>
#include <shared_mutex>
#include <string>
#include <utility>

#include "gcstar/form.hpp"
#include "gcstar/structures.hpp"

namespace gcstar {

/* Hodge-type star operators for metric and degenerate spacetime structures.

   Every variant is, by definition, contraction with a mixed epsilon tensor
   omega^{a..b}_{c..d}:

     (*alpha)_{c..d} = alpha_{a..b} omega^{a..b}_{c..d}   (summed over the
                                                           canonical index
                                                           sets a<..<b)

   built from the structure's data one of two ways:

     raising variants  (MinkowskiMetric, GalileanH, CarrollianK)
       contract p upper slots of the raising tensor into the volume form:
       omega^{a..b}_{c..d} = R^{a a'} ... R^{b b'} vol_{a'..b' c..d}

     lowering variants (CarrollianH, GalileanK)
       contract the trailing d-p slots of the top polyvector with the
       lowering tensor:
       omega^{a..b}_{c..d} = polyvol^{a..b c'..d'} W_{c c'} ... W_{d d'}

   Two independent implementations are kept on purpose and are never allowed
   to collapse into one:

     star_oracle  -- the brute-force contraction above, evaluated term by
                     term with no shortcuts; the reference for everything.

     star_closed  -- the decomposition formulas through the Euclidean spatial
                     star: splitting alpha = e0 ^ s + r into spatial pieces,

                       metric star:      e0 ^ *~r + *~(eta s)
                       galilean h-star:  (-lambda_h)^p  e0 ^ *~r
                       carrollian h-star: mu lambda_h^{n-p+1} *~s

                     and the almost-everywhere-zero companion stars, which
                     only act at the exceptional degrees:

                       galilean k-star:   p = n:  mu lambda_k (-1)^n c e0
                                                  (r = c e1^..^en)
                                          p = d:  mu c        (a = c e0^..^en)
                       carrollian k-star: p = 0:  c e0^..^en
                                          p = 1:  lambda_k c e1^..^en
                                                  (c = coefficient of e0)

   The h-stars are nilpotent away from those exceptional degrees; splicing
   the k-star into the h-star family exactly there yields the degreewise
   star table used for electrodynamics. */
enum class StarVariant {
  MinkowskiMetric,
  GalileanH,
  GalileanK,
  CarrollianH,
  CarrollianK,
  TableGalilei4D,  // degreewise splice, four dimensions only
  TableCarroll4D,
};

bool is_table_variant(StarVariant variant);
bool variant_compatible(SpacetimeKind kind, StarVariant variant);
std::string variant_name(StarVariant variant);

// Components of the mixed epsilon tensor for one structure, variant, and
// upper-group degree p.  Keys pair the canonical upper set with the canonical
// lower set; zero components are omitted.
struct MixedEpsilon {
  int dim = 0;
  int degree = 0;
  std::map<std::pair<MultiIndex, MultiIndex>, Rational> components;
};

// Brute-force construction (the oracle route).  Throws on an incompatible or
// table variant, or degree outside [0, dim].
MixedEpsilon mixed_epsilon(const SpacetimeStructure& s, StarVariant variant, int degree);

// Contraction of a form with the brute-force table.  Result degree d - p.
Form star_oracle(const Form& a, const SpacetimeStructure& s, StarVariant variant);

// Decomposition route.  Requires the structure's components to be adapted
// canonical up to its stored normalization constants (validate_adapted
// returns nothing to complain about); throws std::domain_error otherwise.
Form star_closed(const Form& a, const SpacetimeStructure& s, StarVariant variant);

// Euclidean star on spatial forms: delta^{ij}, orientation e1 ^ .. ^ en.
// In three spatial dimensions: f -> f dV, a.dr -> a.dS, a.dS -> a.dr,
// f dV -> f.  Satisfies *~ *~ = (-1)^{q(n-q)} on degree-q input.
SpatialForm hat_star(const SpatialForm& s);

// Degreewise splice of the h-star with the k-star at the h-star's dead
// degrees (Galilean: top degree, Carrollian: degree zero).  The Galilean top
// degree carries an extra (-1)^n so that in four dimensions the spliced
// table agrees line by line with the Lorentzian one.
Form star_spliced(const Form& a, const SpacetimeStructure& s);

// The four-dimensional star table over the canonical structure of `kind`.
// Throws unless a.dim == 4.
Form star_table_4d(const Form& a, SpacetimeKind kind);

// Uniform dispatch, including the table variants (which require dim == 4 and
// the matching kind).
Form apply_star(const Form& a, const SpacetimeStructure& s, StarVariant variant);

// Memoizes mixed-epsilon tables for one structure.  Thread-safe: tables are
// built outside the lock, inserted as immutable shared_ptrs under an
// exclusive lock, and looked up under a shared lock, so concurrent readers
// only ever observe fully built tables.
class StarCache {
 public:
  explicit StarCache(SpacetimeStructure s);

  const SpacetimeStructure& structure() const { return structure_; }
  std::shared_ptr<const MixedEpsilon> table(StarVariant variant, int degree) const;
  // Oracle star through the memoized tables.
  Form star(const Form& a, StarVariant variant) const;

 private:
  SpacetimeStructure structure_;
  mutable std::shared_mutex mutex_;
  mutable std::map<std::pair<StarVariant, int>, std::shared_ptr<const MixedEpsilon>> tables_;
};

}  // namespace gcstar
