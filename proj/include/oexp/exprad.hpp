#pragma once

#include <string>

#include "oexp/structure.hpp"

namespace oexp {

// The exponential radical e = r_infinity + [s, r] of a complex Lie algebra,
// together with the ingredients it is assembled from.
struct ExpRadicalData {
  Subspace r;            // solvable radical
  Subspace s;            // Levi subalgebra
  Subspace r_infinity;   // stable term of the lower central series of r
  Subspace s_bracket_r;  // [s, r]
  Subspace e;            // r_infinity + [s, r]
};

ExpRadicalData exponential_radical(const LieAlgebra& g);

struct RDecomposedWitness {
  bool r_decomposed = false;
  bool levi_action_trivial = false;  // [s, r] = 0
  bool radical_nilpotent = false;    // restrict(r) nilpotent (complex Type R)
};

// True iff e = 0; the witness exhibits the direct-sum decomposition.
RDecomposedWitness is_R_decomposed(const LieAlgebra& g);

struct RQuotientResult {
  LieAlgebra algebra;
  Matrix projection;
};

// quotient(g, e); post-validated to be R-decomposed.
RQuotientResult largest_R_decomposed_quotient(const LieAlgebra& g);

// User-declared decomposition g = b (+) l with b a solvable ideal and l a
// reductive subalgebra; l_label names the reductive group symbolically.
struct SplitData {
  Subspace b;
  Subspace l;
  std::string l_label;
};

struct SplitCheck {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct SplitReport {
  std::vector<SplitCheck> checks;
  bool all_pass() const {
    for (const auto& c : checks)
      if (!c.pass) return false;
    return true;
  }
};

// Validates the declared split against the exponential radical:
// (i) b solvable ideal, l reductive subalgebra, b (+) l = g;
// (ii) e <= b; (iii) [l, b] <= e; (iv) b/e nilpotent;
// (v) if e = 0 then [l, b] = 0.
SplitReport validate_split(const LieAlgebra& g, const SplitData& split);

}  // namespace oexp
