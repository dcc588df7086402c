#pragma once

#include <string>
#include <vector>

#include "oexp/matrix.hpp"

namespace oexp {

struct JacobiViolation {
  std::size_t i, j, k;   // basis triple, i < j < k
  Vec defect;            // [[ei,ej],ek] + [[ej,ek],ei] + [[ek,ei],ej]
};

struct StructureReport {
  std::vector<JacobiViolation> violations;
  bool valid() const { return violations.empty(); }
};

// Finite-dimensional complex Lie algebra given by structure constants on a
// named basis. Constants are stored only for i < j; antisymmetry is built in.
// The factory validates the Jacobi identity and rejects invalid input.
class LieAlgebra {
public:
  // brackets[i][j - i - 1], for i < j, is the coordinate vector of [e_i, e_j].
  static LieAlgebra make(std::vector<std::string> basis_names,
                         std::vector<std::vector<Vec>> upper_brackets);

  // Skips Jacobi validation; for feeding validate_structure with bad input.
  static LieAlgebra make_unchecked(std::vector<std::string> basis_names,
                                   std::vector<std::vector<Vec>> upper_brackets);

  static LieAlgebra abelian(std::size_t dim, const std::string& name_prefix = "a");

  std::size_t dim() const { return dim_; }
  const std::vector<std::string>& basis_names() const { return names_; }

  // Coordinate vector of [e_i, e_j] for any i, j (antisymmetry derived).
  Vec basis_bracket(std::size_t i, std::size_t j) const;

  Vec bracket(const Vec& x, const Vec& y) const;

  // Matrix of y -> [x, y] in the ambient basis.
  Matrix ad_matrix(const Vec& x) const;

  // span{ [u_a, w_b] } over basis pairs of the two subspaces.
  Subspace bracket_span(const Subspace& u, const Subspace& w) const;

  Subspace full_space() const { return Subspace::full(dim_); }
  Subspace zero_space() const { return Subspace(dim_); }

  bool is_subalgebra(const Subspace& u) const;
  bool is_ideal(const Subspace& u) const;

  // {x : [x, y] = 0 for all y}.
  Subspace center() const;

  bool is_abelian() const;

private:
  LieAlgebra() = default;
  std::size_t dim_ = 0;
  std::vector<std::string> names_;
  std::vector<std::vector<Vec>> upper_;  // [i][j-i-1] for i < j
};

// Checks the Jacobi identity on all basis triples and reports violations.
StructureReport validate_structure(const LieAlgebra& g);

enum class SeriesKind { lower_central, derived };

// Descending series of a subalgebra, computed until stabilization. The last
// stored term is stable: applying the step once more reproduces it.
struct SeriesChain {
  SeriesKind kind;
  std::vector<Subspace> terms;            // terms[0] = the subalgebra itself
  const Subspace& stable_term() const { return terms.back(); }
};

// Series of the subalgebra `on` inside g (ambient coordinates).
// lower_central: T1 = on, T_{k+1} = [on, T_k]; derived: T_{k+1} = [T_k, T_k].
SeriesChain series(const LieAlgebra& g, const Subspace& on, SeriesKind kind);

struct QuotientResult {
  LieAlgebra algebra;
  Matrix projection;   // maps ambient coordinates to quotient coordinates
  Subspace complement; // the canonical complement used as the quotient basis
};

// Quotient by an ideal; quotient basis is the canonical echelon complement.
QuotientResult quotient(const LieAlgebra& g, const Subspace& ideal,
                        const std::string& name_suffix = "_bar");

// The algebra structure induced on a subalgebra, in its echelon basis.
LieAlgebra restrict_to(const LieAlgebra& g, const Subspace& subalg);

// Semidirect sum b ⋊ l: `action` assigns to each basis element of l a
// derivation of b; the map must be a Lie homomorphism into derivations.
// Basis order of the result: b's basis first, then l's.
LieAlgebra semidirect(const LieAlgebra& b, const LieAlgebra& l,
                      const std::vector<Matrix>& action);

}  // namespace oexp
