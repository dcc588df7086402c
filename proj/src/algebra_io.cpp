#include "oexp/algebra_io.hpp"

#include <map>
#include <set>

#include "json.hpp"
#include "oexp/error.hpp"

namespace oexp {

using json = nlohmann::ordered_json;

AlgebraFile parse_algebra_text(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw InputError(std::string("algebra file is not valid JSON: ") + e.what());
  }
  AlgebraFile f;
  try {
    if (!doc.is_object()) throw InputError("algebra file: top level must be an object");
    f.name = doc.at("name").get<std::string>();
    f.dim = doc.at("dim").get<std::size_t>();
    f.basis = doc.at("basis").get<std::vector<std::string>>();
    if (doc.contains("brackets")) {
      for (const auto& b : doc.at("brackets")) {
        BracketEntry e;
        e.lhs = b.at("lhs").get<std::string>();
        e.rhs = b.at("rhs").get<std::string>();
        for (const auto& term : b.at("value")) {
          if (!term.is_array() || term.size() != 3)
            throw InputError("algebra file: bracket value terms must be [name, re, im]");
          e.value.push_back({term.at(0).get<std::string>(),
                             term.at(1).get<std::string>(),
                             term.at(2).get<std::string>()});
        }
        f.brackets.push_back(std::move(e));
      }
    }
    if (doc.contains("split")) {
      SplitNames s;
      s.b = doc.at("split").at("b").get<std::vector<std::string>>();
      s.l = doc.at("split").at("l").get<std::vector<std::string>>();
      s.l_label = doc.at("split").at("l_label").get<std::string>();
      f.split = std::move(s);
    }
  } catch (const json::exception& e) {
    throw InputError(std::string("algebra file: missing or mistyped field: ") + e.what());
  }
  return f;
}

std::string render_algebra_file(const AlgebraFile& f) {
  json doc;
  doc["name"] = f.name;
  doc["dim"] = f.dim;
  doc["basis"] = f.basis;
  doc["brackets"] = json::array();
  for (const auto& b : f.brackets) {
    json e;
    e["lhs"] = b.lhs;
    e["rhs"] = b.rhs;
    e["value"] = json::array();
    for (const auto& t : b.value) e["value"].push_back({t.basis_name, t.re, t.im});
    doc["brackets"].push_back(std::move(e));
  }
  if (f.split) {
    doc["split"] = {{"b", f.split->b}, {"l", f.split->l}, {"l_label", f.split->l_label}};
  }
  return doc.dump(2) + "\n";
}

ParsedAlgebra build_algebra(const AlgebraFile& f) {
  if (f.basis.size() != f.dim)
    throw InputError("algebra '" + f.name + "': dim = " + std::to_string(f.dim) +
                     " but basis has " + std::to_string(f.basis.size()) + " names");
  std::map<std::string, std::size_t> index;
  for (std::size_t k = 0; k < f.basis.size(); ++k) {
    if (index.count(f.basis[k]))
      throw InputError("algebra '" + f.name + "': duplicate basis name '" + f.basis[k] + "'");
    index[f.basis[k]] = k;
  }
  auto resolve = [&](const std::string& name, const std::string& where) {
    auto it = index.find(name);
    if (it == index.end())
      throw InputError("algebra '" + f.name + "': unknown basis name '" + name +
                       "' in " + where);
    return it->second;
  };

  const std::size_t n = f.dim;
  std::vector<std::vector<Vec>> upper(n);
  for (std::size_t i = 0; i < n; ++i) upper[i].assign(n - i - 1, Vec(n));

  std::set<std::pair<std::size_t, std::size_t>> seen;
  for (const auto& b : f.brackets) {
    std::size_t i = resolve(b.lhs, "bracket lhs");
    std::size_t j = resolve(b.rhs, "bracket rhs");
    if (i >= j)
      throw InputError("algebra '" + f.name + "': bracket pair (" + b.lhs + ", " + b.rhs +
                       ") must have lhs before rhs in basis order");
    if (!seen.insert({i, j}).second)
      throw InputError("algebra '" + f.name + "': duplicate bracket pair (" + b.lhs +
                       ", " + b.rhs + ")");
    Vec v(n);
    for (const auto& term : b.value) {
      std::size_t k = resolve(term.basis_name, "bracket value");
      v[k] += GR(parse_rational(term.re), parse_rational(term.im));
    }
    upper[i][j - i - 1] = std::move(v);
  }

  ParsedAlgebra out{f, LieAlgebra::make(f.basis, std::move(upper)), std::nullopt};

  if (f.split) {
    auto span_of_names = [&](const std::vector<std::string>& names) {
      std::vector<Vec> rows;
      for (const auto& name : names) {
        Vec v(n);
        v[resolve(name, "split")] = GR(1);
        rows.push_back(std::move(v));
      }
      return Subspace::span_vectors(rows, n);
    };
    SplitData s;
    s.b = span_of_names(f.split->b);
    s.l = span_of_names(f.split->l);
    s.l_label = f.split->l_label;
    out.split = std::move(s);
  }
  return out;
}

ParsedAlgebra parse_algebra_file(const std::string& text) {
  return build_algebra(parse_algebra_text(text));
}

}  // namespace oexp
