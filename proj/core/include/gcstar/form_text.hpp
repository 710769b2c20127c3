#pragma once

#include <string>
#include <string_view>

#include "gcstar/form.hpp"

namespace gcstar {

/* Text form of a Form, one term per basis wedge:

     dt^dx + 2/3 dy^dz        (dim 4)
     -dx1^dx2 + 5 dx1^dx4     (general dim, spatial labels dx1..dxn)
     1                        (the scalar form)
     0                        (the zero form)

   `dt` is index 0; `dx`, `dy`, `dz` are aliases for dx1, dx2, dx3 and are
   accepted (and printed) exactly when dim == 4.  All terms of a literal must
   share one degree; terms with coefficient zero are degree-neutral. */

// Throws ParseError on malformed input, unknown labels, out-of-range
// coordinates, or mixed degrees.  dim = 1 + (number of spatial coordinates).
Form parse_form(std::string_view text, int dim);

// Canonical rendering: ascending keys, coefficient 1 left implicit, "0" for
// the zero form.  parse_form(print_form(f), f.dim) == f.
std::string print_form(const Form& form);

// Basis label for one frame index under the same vocabulary.
std::string coframe_label(int index, int dim);

}  // namespace gcstar
