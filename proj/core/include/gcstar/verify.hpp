#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "gcstar/structures.hpp"

namespace gcstar {

/* Self-check suites shared by the command-line tool and the test suite.
   Every check is exact; a failure carries a human-readable counterexample.

   With no explicit structure the suites sweep the canonical structures of
   all three kinds for d = 2 .. max_dim.  With one, they validate it first
   and then run against it alone (whatever its dimension). */
struct VerifyOptions {
  int max_dim = 4;
  std::uint64_t seed = 0;
  std::optional<SpacetimeStructure> structure;
};

struct VerifyReport {
  std::string suite;
  long cases = 0;
  std::vector<std::string> failures;

  bool ok() const { return failures.empty(); }
};

// star_closed == star_oracle for every compatible variant, degree, and basis
// form.
VerifyReport verify_oracle(const VerifyOptions& options);

// Degenerate h-stars square to zero away from the exceptional degrees;
// the metric star squares to the involution sign (-1)^{p(d-p)+n}.
VerifyReport verify_nilpotency(const VerifyOptions& options);

// Exhaustive kernel/support check of all five variants and the spliced star
// on basis forms.
VerifyReport verify_kernels(const VerifyOptions& options);

// Randomized: adapted frame changes fix the structure and commute with the
// star; arbitrary invertible frame changes commute once the structure is
// transported too (dimensions capped at 4 for the general case).
VerifyReport verify_naturality(const VerifyOptions& options);

std::vector<VerifyReport> verify_all(const VerifyOptions& options);

}  // namespace gcstar
