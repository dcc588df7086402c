#include "oexp/analyze.hpp"

#include <sstream>

#include "json.hpp"
#include "oexp/error.hpp"

namespace oexp {

using json = nlohmann::ordered_json;

namespace {

json gr_json(const GR& v) {
  return json::array({rational_str(v.re()), rational_str(v.im())});
}

json vec_json(const Vec& v) {
  json a = json::array();
  for (const auto& e : v) a.push_back(gr_json(e));
  return a;
}

json subspace_json(const Subspace& s) {
  json rows = json::array();
  for (std::size_t r = 0; r < s.dim(); ++r) rows.push_back(vec_json(s.basis_vector(r)));
  return json{{"dim", s.dim()}, {"basis", rows}};
}

// Short display form of a subspace in terms of the ambient basis names.
std::string subspace_display(const Subspace& s, const std::vector<std::string>& names) {
  if (s.dim() == 0) return "0";
  std::string out = "span{";
  for (std::size_t r = 0; r < s.dim(); ++r) {
    if (r) out += ", ";
    Vec v = s.basis_vector(r);
    std::string row;
    for (std::size_t c = 0; c < v.size(); ++c) {
      if (v[c].is_zero()) continue;
      std::string coef = v[c].str();
      if (coef == "1") coef = "";
      else if (coef == "-1") coef = "-";
      else coef += "*";
      row += (row.empty() ? "" : " + ") + coef + names[c];
    }
    out += row.empty() ? "0" : row;
  }
  return out + "}";
}

json series_json(const SeriesChain& chain, const std::vector<std::string>& names) {
  json terms = json::array();
  for (const auto& t : chain.terms) {
    json entry = subspace_json(t);
    entry["display"] = subspace_display(t, names);
    terms.push_back(std::move(entry));
  }
  return terms;
}

json file_json(const AlgebraFile& f) {
  // Round-trip through the renderer so the echo matches the canonical form.
  return json::parse(render_algebra_file(f));
}

}  // namespace

AnalysisReport analyze(const ParsedAlgebra& input) {
  const LieAlgebra& g = input.algebra;
  const auto& names = g.basis_names();
  AnalysisReport out;

  json doc;
  doc["input"] = file_json(input.file);
  doc["assumptions"] = json::array({
      "the algebra is taken as the Lie algebra of a connected linear complex Lie group",
      "for the descriptor, the group decomposition G = B x| L with B simply connected "
      "is a standing hypothesis that cannot be checked from structure constants",
  });

  ClassifyFlags flags = classify(g);
  doc["classification"] = {
      {"is_abelian", flags.is_abelian},
      {"is_nilpotent", flags.is_nilpotent},
      {"is_solvable", flags.is_solvable},
      {"is_semisimple", flags.is_semisimple},
      {"is_reductive", flags.is_reductive},
  };

  SeriesChain lcs = series(g, g.full_space(), SeriesKind::lower_central);
  SeriesChain der = series(g, g.full_space(), SeriesKind::derived);
  doc["series"] = {
      {"lower_central", series_json(lcs, names)},
      {"derived", series_json(der, names)},
  };

  ExpRadicalData erad = exponential_radical(g);
  doc["radical"] = subspace_json(erad.r);
  doc["radical"]["display"] = subspace_display(erad.r, names);
  doc["levi"] = subspace_json(erad.s);
  doc["levi"]["display"] = subspace_display(erad.s, names);
  doc["exponential_radical"] = {
      {"r_infinity", subspace_json(erad.r_infinity)},
      {"s_bracket_r", subspace_json(erad.s_bracket_r)},
      {"e", subspace_json(erad.e)},
      {"e_display", subspace_display(erad.e, names)},
      {"is_R_decomposed", erad.e.dim() == 0},
      {"largest_R_decomposed_quotient_dim", g.dim() - erad.e.dim()},
  };

  // Split resolution: declared, defaulted (solvable), or absent.
  std::optional<SplitData> split = input.split;
  std::string split_origin = "declared";
  if (!split) {
    if (flags.is_solvable) {
      split = SplitData{g.full_space(), g.zero_space(), "trivial"};
      split_origin = "defaulted to (g, 0) for a solvable algebra";
    } else {
      split_origin = "absent";
    }
  }

  std::vector<std::string> notes;
  notes.push_back(
      "coordinate convention: v is the complement of (h cap e) inside the Cartan "
      "subalgebra h, following the construction that decomposes elements of h; the "
      "source statement words it as a complement inside e, which does not span b");
  notes.push_back(
      "the norm on e is fixed as the max-coordinate norm in the adapted basis; any "
      "norm gives an equivalent profile");
  notes.push_back(
      "Cartan subalgebras are not unique; emitted coordinates depend on the "
      "deterministic choice made here, the profile shape does not");

  if (!split) {
    doc["split"] = {{"origin", split_origin},
                    {"note", "no split declared for a non-solvable algebra; "
                             "descriptor stage skipped"}};
    doc["descriptor"] = nullptr;
    doc["length_profile"] = nullptr;
  } else {
    SplitReport check = validate_split(g, *split);
    json checks = json::array();
    for (const auto& c : check.checks)
      checks.push_back({{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
    doc["split"] = {
        {"origin", split_origin},
        {"b", subspace_json(split->b)},
        {"l", subspace_json(split->l)},
        {"l_label", split->l_label},
        {"validation", checks},
        {"valid", check.all_pass()},
    };
    if (!check.all_pass()) {
      out.split_validation_passed = false;
      doc["descriptor"] = nullptr;
      doc["length_profile"] = nullptr;
    } else {
      // Cartan subalgebra and coordinate complement inside b.
      LieAlgebra b_alg = restrict_to(g, split->b);
      std::vector<Vec> rows;
      for (std::size_t r = 0; r < erad.e.dim(); ++r) {
        auto co = split->b.coordinates_of(erad.e.basis_vector(r));
        if (!co) throw InternalError("analyze: e not contained in b after validation");
        rows.push_back(std::move(*co));
      }
      Subspace e_in_b = Subspace::span_vectors(rows, split->b.dim());
      CartanComplement cc = cartan_complement(b_alg, e_in_b);
      doc["cartan"] = {
          {"note", "coordinates are relative to the echelon basis of b"},
          {"h", subspace_json(cc.h)},
          {"v", subspace_json(cc.v)},
      };

      OexpDescriptor d = oexp_descriptor(g, *split);
      json weights = json::array();
      for (auto w : d.factor_BE.weights) weights.push_back(w);
      doc["descriptor"] = {
          {"factor_E",
           {{"kind", "polynomial algebra R(E)"},
            {"dim", d.dim_E},
            {"generators", d.factor_E_generators}}},
          {"factor_BE",
           {{"kind", "holomorphic functions of exponential type on B/E"},
            {"dim", d.factor_BE.dim()},
            {"coordinates", d.factor_BE.coordinate_names},
            {"weights", weights},
            {"growth_bound",
             d.factor_BE.dim() == 0
                 ? ""
                 : "|f| <= C * exp(r * " + d.growth_bound + ") for some C > 0, r >= 0"}}},
          {"factor_L", {{"kind", "regular functions on the reductive part"},
                        {"label", d.factor_L},
                        {"dim", d.dim_L}}},
          {"tensor_form", d.render()},
          {"coordinate_map", d.coordinate_map},
      };
      LengthProfile prof = length_profile(d);
      doc["length_profile"] = {
          {"log_term", prof.log_term},
          {"nilpotent_term", prof.nilpotent_term},
          {"reductive_term", prof.reductive_term},
          {"profile", prof.render()},
          {"equivalence_note", prof.equivalence_note},
      };
      out.descriptor_emitted = true;
    }
  }
  doc["notes"] = notes;

  out.json = doc.dump(2) + "\n";

  // Text rendering.
  std::ostringstream text;
  text << "algebra: " << input.file.name << " (dim " << g.dim() << ")\n";
  text << "flags: abelian=" << flags.is_abelian << " nilpotent=" << flags.is_nilpotent
       << " solvable=" << flags.is_solvable << " semisimple=" << flags.is_semisimple
       << " reductive=" << flags.is_reductive << "\n";
  text << "radical: " << subspace_display(erad.r, names) << "\n";
  text << "levi: " << subspace_display(erad.s, names) << "\n";
  text << "lower central series dims:";
  for (const auto& t : lcs.terms) text << " " << t.dim();
  text << "\nderived series dims:";
  for (const auto& t : der.terms) text << " " << t.dim();
  text << "\nexponential radical e: " << subspace_display(erad.e, names) << "\n";
  text << "R-decomposed: " << (erad.e.dim() == 0 ? "yes" : "no") << "\n";
  if (doc["descriptor"].is_null()) {
    text << "descriptor: skipped ("
         << (out.split_validation_passed ? "no split available" : "split validation failed")
         << ")\n";
  } else {
    text << "descriptor: " << doc["descriptor"]["tensor_form"].get<std::string>() << "\n";
    text << "profile: " << doc["length_profile"]["profile"].get<std::string>() << "\n";
  }
  out.text = text.str();
  return out;
}

}  // namespace oexp
