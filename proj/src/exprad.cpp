#include "oexp/exprad.hpp"

#include "oexp/error.hpp"

namespace oexp {

namespace {

// Pulls a subspace expressed in the echelon coordinates of `frame` back to
// ambient coordinates.
Subspace pull_back(const Subspace& local, const Subspace& frame) {
  std::vector<Vec> rows;
  for (std::size_t r = 0; r < local.dim(); ++r) {
    Vec coords = local.basis_vector(r);
    Vec ambient(frame.ambient_dim());
    for (std::size_t a = 0; a < frame.dim(); ++a)
      if (!coords[a].is_zero())
        for (std::size_t c = 0; c < frame.ambient_dim(); ++c)
          ambient[c] += coords[a] * frame.basis().at(a, c);
    rows.push_back(std::move(ambient));
  }
  return Subspace::span_vectors(rows, frame.ambient_dim());
}

bool restricted_nilpotent(const LieAlgebra& g, const Subspace& u) {
  if (u.dim() == 0) return true;
  LieAlgebra r = restrict_to(g, u);
  return series(r, r.full_space(), SeriesKind::lower_central).stable_term().dim() == 0;
}

}  // namespace

ExpRadicalData exponential_radical(const LieAlgebra& g) {
  LeviDecomposition levi = levi_subalgebra(g);
  ExpRadicalData data;
  data.r = levi.radical;
  data.s = levi.levi;

  if (data.r.dim() == 0) {
    data.r_infinity = g.zero_space();
  } else {
    // r_infinity is computed inside restrict(r) and pulled back through the
    // restriction's basis matrix.
    LieAlgebra r_alg = restrict_to(g, data.r);
    Subspace stable =
        series(r_alg, r_alg.full_space(), SeriesKind::lower_central).stable_term();
    data.r_infinity = pull_back(stable, data.r);
  }
  data.s_bracket_r = g.bracket_span(data.s, data.r);
  data.e = subspace_sum(data.r_infinity, data.s_bracket_r);

  if (!g.is_ideal(data.e))
    throw InternalError("exponential_radical: e is not an ideal");
  if (!restricted_nilpotent(g, data.e))
    throw InternalError("exponential_radical: e is not nilpotent");
  if (data.r.dim() == g.dim()) {
    // Solvable case cross-check: e equals the stable lower-central term of g.
    Subspace g_inf = series(g, g.full_space(), SeriesKind::lower_central).stable_term();
    if (!(data.e == g_inf))
      throw InternalError("exponential_radical: solvable cross-check e = g_infinity failed");
  }
  return data;
}

RDecomposedWitness is_R_decomposed(const LieAlgebra& g) {
  ExpRadicalData data = exponential_radical(g);
  RDecomposedWitness w;
  w.r_decomposed = data.e.dim() == 0;
  w.levi_action_trivial = data.s_bracket_r.dim() == 0;
  w.radical_nilpotent = restricted_nilpotent(g, data.r);
  if (w.r_decomposed && !(w.levi_action_trivial && w.radical_nilpotent))
    throw InternalError("is_R_decomposed: witness disagrees with e = 0");
  return w;
}

RQuotientResult largest_R_decomposed_quotient(const LieAlgebra& g) {
  ExpRadicalData data = exponential_radical(g);
  QuotientResult q = quotient(g, data.e);
  if (!is_R_decomposed(q.algebra).r_decomposed)
    throw InternalError("largest_R_decomposed_quotient: quotient is not R-decomposed");
  return {std::move(q.algebra), std::move(q.projection)};
}

SplitReport validate_split(const LieAlgebra& g, const SplitData& split) {
  SplitReport report;
  auto add = [&](const std::string& name, bool pass, const std::string& detail) {
    report.checks.push_back({name, pass, detail});
  };

  const Subspace& b = split.b;
  const Subspace& l = split.l;

  bool b_ideal = g.is_ideal(b);
  bool b_solvable = false;
  if (b_ideal || g.is_subalgebra(b)) {
    if (b.dim() == 0) {
      b_solvable = true;
    } else {
      LieAlgebra b_alg = restrict_to(g, b);
      b_solvable =
          series(b_alg, b_alg.full_space(), SeriesKind::derived).stable_term().dim() == 0;
    }
  }
  add("b_is_solvable_ideal", b_ideal && b_solvable,
      b_ideal ? (b_solvable ? "" : "b is not solvable") : "b is not an ideal");

  bool l_subalg = g.is_subalgebra(l);
  bool l_reductive = false;
  if (l_subalg) {
    if (l.dim() == 0) {
      l_reductive = true;
    } else {
      l_reductive = classify(restrict_to(g, l)).is_reductive;
    }
  }
  add("l_is_reductive_subalgebra", l_subalg && l_reductive,
      l_subalg ? (l_reductive ? "" : "l is not reductive") : "l is not a subalgebra");

  bool direct = subspace_intersect(b, l).dim() == 0 &&
                subspace_sum(b, l).dim() == g.dim();
  add("b_plus_l_is_direct_sum", direct, direct ? "" : "b (+) l != g");

  if (!(b_ideal && b_solvable && l_subalg && l_reductive && direct)) {
    add("e_contained_in_b", false, "skipped: split is not a valid decomposition");
    return report;
  }

  ExpRadicalData data = exponential_radical(g);
  bool e_in_b = b.contains(data.e);
  add("e_contained_in_b", e_in_b, e_in_b ? "" : "exponential radical is not inside b");

  Subspace lb = g.bracket_span(l, b);
  bool action_into_e = data.e.contains(lb);
  add("l_action_on_b_mod_e_trivial", action_into_e,
      action_into_e ? "" : "[l, b] is not contained in e");

  bool be_nilpotent = true;
  if (e_in_b) {
    LieAlgebra b_alg = restrict_to(g, b);
    // Map e into b's coordinates.
    std::vector<Vec> rows;
    for (std::size_t r = 0; r < data.e.dim(); ++r) {
      auto co = b.coordinates_of(data.e.basis_vector(r));
      if (!co) { be_nilpotent = false; break; }
      rows.push_back(std::move(*co));
    }
    if (be_nilpotent) {
      Subspace e_in_b_coords = Subspace::span_vectors(rows, b.dim());
      QuotientResult q = quotient(b_alg, e_in_b_coords);
      be_nilpotent =
          series(q.algebra, q.algebra.full_space(), SeriesKind::lower_central)
              .stable_term()
              .dim() == 0;
    }
  } else {
    be_nilpotent = false;
  }
  add("b_mod_e_nilpotent", be_nilpotent, be_nilpotent ? "" : "b/e is not nilpotent");

  if (data.e.dim() == 0) {
    bool trivial = lb.dim() == 0;
    add("trivial_action_when_e_zero", trivial,
        trivial ? "" : "e = 0 but the action of l on b is nonzero");
  }
  return report;
}

}  // namespace oexp
