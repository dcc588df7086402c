#pragma once

#include <string>
#include <vector>

#include "oexp/exprad.hpp"

namespace oexp {

// Basis of a nilpotent algebra adapted to its lower central series, with the
// depth weight of each vector. Vectors of weight >= k span exactly the k-th
// series term; ordering is shallow weights first, ties by echelon order.
struct WeightedBasis {
  std::vector<Vec> vectors;               // ambient coordinates
  std::vector<std::size_t> weights;
  std::vector<std::string> coordinate_names;

  std::size_t dim() const { return vectors.size(); }
};

// Requires n nilpotent. `name_prefix` labels the coordinates (t1, t2, ... by
// default).
WeightedBasis weighted_basis(const LieAlgebra& n, const std::string& name_prefix = "t");

struct CartanComplement {
  Subspace h;  // Cartan subalgebra of b
  Subspace v;  // complement of (h ∩ e) within h, so (h ∩ e) (+) v = h
};

// Requires b solvable and e its exponential radical (in b's coordinates).
// Post-validated: e + v = b and e ∩ v = 0, so e (+) v = b as linear spaces.
CartanComplement cartan_complement(const LieAlgebra& b, const Subspace& e);

// Symbolic tensor-factor description of the algebra of holomorphic functions
// of exponential type: a polynomial factor on the exponential radical, a
// weighted-growth factor on b/e, and a regular-function factor on the
// reductive part.
struct OexpDescriptor {
  // polynomial factor on e
  std::vector<std::string> factor_E_generators;
  std::size_t dim_E = 0;

  // exponential-type factor on b/e
  WeightedBasis factor_BE;
  std::string growth_bound;  // e.g. "max{|s1|,|s2|,|s3|^(1/2)}"

  // regular-function factor on the reductive group
  std::string factor_L;      // "R(SL_2)" or "trivial"
  std::size_t dim_L = 0;

  std::string coordinate_map;

  std::string render() const;  // e.g. "R(E[t1,t2,t3]) (x) Oexp(B/E) (x) R(SL_2)"
};

// Requires validate_split(g, split) to pass.
OexpDescriptor oexp_descriptor(const LieAlgebra& g, const SplitData& split);

// Three-term word-length profile matching the descriptor's coordinates.
struct LengthProfile {
  std::string log_term;        // log(1 + max{|t_i|}) on e; empty when dim e = 0
  std::string nilpotent_term;  // max_i |s_i|^(1/w_i) on b/e; empty when trivial
  std::string reductive_term;  // symbolic word length on L; empty when trivial
  std::string equivalence_note;

  std::string render() const;  // the full "ell(...) ~ ..." line
};

LengthProfile length_profile(const OexpDescriptor& descriptor);

}  // namespace oexp
