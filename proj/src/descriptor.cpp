#include "oexp/descriptor.hpp"

#include "oexp/error.hpp"

namespace oexp {

WeightedBasis weighted_basis(const LieAlgebra& n, const std::string& name_prefix) {
  SeriesChain lcs = series(n, n.full_space(), SeriesKind::lower_central);
  if (lcs.stable_term().dim() != 0)
    throw ValidationError("weighted_basis: algebra is not nilpotent");

  // lcs.terms = g_1 > g_2 > ... > g_c > 0 (last term is the zero space).
  WeightedBasis wb;
  for (std::size_t k = 0; k + 1 < lcs.terms.size(); ++k) {
    Subspace piece = complement_within(lcs.terms[k + 1], lcs.terms[k]);
    for (std::size_t r = 0; r < piece.dim(); ++r) {
      wb.vectors.push_back(piece.basis_vector(r));
      wb.weights.push_back(k + 1);
    }
  }
  if (lcs.terms.size() == 1 && lcs.terms[0].dim() == 0) {
    // zero algebra: empty basis
  }
  for (std::size_t i = 0; i < wb.vectors.size(); ++i)
    wb.coordinate_names.push_back(name_prefix + std::to_string(i + 1));
  if (wb.dim() != n.dim())
    throw InternalError("weighted_basis: adapted basis has wrong size");
  return wb;
}

CartanComplement cartan_complement(const LieAlgebra& b, const Subspace& e) {
  if (e.ambient_dim() != b.dim())
    throw ValidationError("cartan_complement: ambient dimension mismatch");
  CartanData cd = cartan_subalgebra(b);
  CartanComplement out;
  out.h = cd.cartan;
  if (subspace_sum(out.h, e).dim() != b.dim())
    throw InternalError("cartan_complement: h + e != b");
  Subspace he = subspace_intersect(out.h, e);
  out.v = complement_within(he, out.h);
  // Exactness of the coordinate domain: e (+) v = b as linear spaces.
  if (subspace_intersect(e, out.v).dim() != 0 ||
      subspace_sum(e, out.v).dim() != b.dim())
    throw InternalError("cartan_complement: e (+) v != b");
  return out;
}

namespace {

std::string power_term(const std::string& name, std::size_t weight) {
  if (weight == 1) return "|" + name + "|";
  return "|" + name + "|^(1/" + std::to_string(weight) + ")";
}

std::string max_of(const std::vector<std::string>& parts) {
  if (parts.empty()) return "";
  if (parts.size() == 1) return parts[0];
  std::string s = "max{";
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) s += ",";
    s += parts[i];
  }
  s += "}";
  return s;
}

}  // namespace

std::string OexpDescriptor::render() const {
  std::string e_part = "R(C^" + std::to_string(dim_E);
  if (dim_E > 0) {
    e_part += "[";
    for (std::size_t i = 0; i < factor_E_generators.size(); ++i) {
      if (i) e_part += ",";
      e_part += factor_E_generators[i];
    }
    e_part += "]";
  }
  e_part += ")";
  std::string be_part = "Oexp(B/E dim " + std::to_string(factor_BE.dim()) + ")";
  std::string l_part = factor_L.empty() ? "trivial" : factor_L;
  if (dim_E == 0) e_part = "trivial";
  if (factor_BE.dim() == 0) be_part = "trivial";
  return e_part + " (x) " + be_part + " (x) " + l_part;
}

OexpDescriptor oexp_descriptor(const LieAlgebra& g, const SplitData& split) {
  SplitReport check = validate_split(g, split);
  if (!check.all_pass()) {
    std::string failing;
    for (const auto& c : check.checks)
      if (!c.pass) failing += (failing.empty() ? "" : ", ") + c.name;
    throw ValidationError("oexp_descriptor: split validation failed: " + failing);
  }

  ExpRadicalData data = exponential_radical(g);
  OexpDescriptor d;
  d.dim_E = data.e.dim();
  d.dim_L = split.l.dim();

  // Polynomial generators named after e's adapted coordinates.
  if (d.dim_E > 0) {
    LieAlgebra e_alg = restrict_to(g, data.e);
    WeightedBasis we = weighted_basis(e_alg, "t");
    d.factor_E_generators = we.coordinate_names;
  }

  // Weighted basis of b/e with the exponential-type growth bound.
  LieAlgebra b_alg = restrict_to(g, split.b);
  std::vector<Vec> rows;
  for (std::size_t r = 0; r < data.e.dim(); ++r) {
    auto co = split.b.coordinates_of(data.e.basis_vector(r));
    if (!co) throw InternalError("oexp_descriptor: e is not inside b");
    rows.push_back(std::move(*co));
  }
  Subspace e_in_b = Subspace::span_vectors(rows, split.b.dim());
  QuotientResult be = quotient(b_alg, e_in_b);
  d.factor_BE = weighted_basis(be.algebra, "s");
  if (d.factor_BE.dim() > 0) {
    std::vector<std::string> parts;
    for (std::size_t i = 0; i < d.factor_BE.dim(); ++i)
      parts.push_back(power_term(d.factor_BE.coordinate_names[i], d.factor_BE.weights[i]));
    d.growth_bound = max_of(parts);
  }

  d.factor_L = split.l.dim() == 0 ? "trivial" : "R(" + split.l_label + ")";

  if (d.dim_E + d.factor_BE.dim() + d.dim_L != g.dim())
    throw InternalError("oexp_descriptor: factor dimensions do not add up");

  d.coordinate_map =
      "tau(eta, xi, l) = exp(eta) exp(xi) l with eta in e (coordinates " +
      std::string(d.dim_E > 0 ? "t1..t" + std::to_string(d.dim_E) : "none") +
      "), xi in v (a complement of (h cap e) inside a Cartan subalgebra h of b, "
      "projecting onto b/e coordinates " +
      std::string(d.factor_BE.dim() > 0 ? "s1..s" + std::to_string(d.factor_BE.dim())
                                        : "none") +
      "), l in L";
  return d;
}

std::string LengthProfile::render() const {
  std::vector<std::string> terms;
  if (!log_term.empty()) terms.push_back(log_term);
  if (!nilpotent_term.empty()) terms.push_back(nilpotent_term);
  if (!reductive_term.empty()) terms.push_back(reductive_term);
  std::string rhs;
  if (terms.empty()) rhs = "0";
  for (std::size_t i = 0; i < terms.size(); ++i) {
    if (i) rhs += " + ";
    rhs += terms[i];
  }
  return "ell(exp(eta) exp(xi) l) ~ " + rhs;
}

LengthProfile length_profile(const OexpDescriptor& d) {
  LengthProfile p;
  if (d.dim_E > 0) {
    std::vector<std::string> parts;
    for (const auto& name : d.factor_E_generators) parts.push_back("|" + name + "|");
    // Norm on e fixed as the max-coordinate norm in the adapted basis.
    p.log_term = "log(1 + " + max_of(parts) + ")";
  }
  if (d.factor_BE.dim() > 0) {
    std::vector<std::string> parts;
    for (std::size_t i = 0; i < d.factor_BE.dim(); ++i)
      parts.push_back(power_term(d.factor_BE.coordinate_names[i], d.factor_BE.weights[i]));
    p.nilpotent_term = max_of(parts);
  }
  if (d.dim_L > 0) {
    std::string label = d.factor_L;
    // strip "R(...)" down to the label
    if (label.rfind("R(", 0) == 0 && label.back() == ')')
      label = label.substr(2, label.size() - 3);
    p.reductive_term = "ell_" + label + "(l)";
  }
  p.equivalence_note =
      "equivalence up to multiplicative/additive constants C, D: each side "
      "dominates the other at infinity";
  return p;
}

}  // namespace oexp
