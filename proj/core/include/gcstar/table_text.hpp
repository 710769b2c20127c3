#pragma once

#include <string>
#include <vector>

#include "gcstar/structures.hpp"

namespace gcstar {

/* Renders the four-dimensional star table of a kind with symbolic
   coefficients, one line per degree:

     Galilei Hodge star:
       *(f) = f dt^dV
       *(f dt + a·dr) = dt^(a·dS)
       ...

   The degree-p input is the general 4-form built from the scalar symbol f
   and the vector symbols a, b in the vocabulary f, a·dr, a·dS, f dV; the
   output is computed by applying the star to the symbolic coefficients and
   pattern-matching the result back into that vocabulary (never hardcoded). */
struct TableRow {
  int degree;
  std::string input;
  std::string output;
};

std::vector<TableRow> star_table_rows(SpacetimeKind kind);

// Header plus the five rows, two-space indented, one trailing newline.
std::string star_table_text(SpacetimeKind kind);

}  // namespace gcstar
