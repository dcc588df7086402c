#pragma once

#include "oexp/lie.hpp"

namespace oexp {

// Symmetric matrix kappa(e_i, e_j) = trace(ad e_i · ad e_j).
Matrix killing_form(const LieAlgebra& g);

struct ClassifyFlags {
  bool is_abelian = false;
  bool is_nilpotent = false;
  bool is_solvable = false;
  bool is_semisimple = false;
  bool is_reductive = false;
};

// Exact structural flags. A zero algebra counts as semisimple (empty Killing
// determinant convention) as well as nilpotent and solvable.
ClassifyFlags classify(const LieAlgebra& g);

// The solvable radical, computed as the Killing-orthogonal complement of the
// derived algebra (characteristic-zero criterion). Post-validated: it is a
// solvable ideal and the quotient by it is semisimple or zero.
Subspace radical(const LieAlgebra& g);

struct LeviDecomposition {
  Subspace radical;  // maximal solvable ideal
  Subspace levi;     // semisimple complement
};

// Constructive Levi–Malcev decomposition: recursive lift through the last
// nonzero term of the radical's derived series.
LeviDecomposition levi_subalgebra(const LieAlgebra& g);

struct CartanData {
  Subspace cartan;
};

// Cartan subalgebra of a solvable algebra: iterated generalized nullspaces
// of ad(x) for deterministically enumerated non-nilpotent witnesses x.
// Post-validated: nilpotent, self-normalizing, and h + b_infinity = b.
CartanData cartan_subalgebra(const LieAlgebra& b);

// Normalizer {x : [x, u] <= u} of a subspace.
Subspace normalizer(const LieAlgebra& g, const Subspace& u);

}  // namespace oexp
