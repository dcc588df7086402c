#include "oexp/catalog.hpp"

#include "oexp/error.hpp"

namespace oexp {

namespace {

// Serializes a constructed algebra into the sparse file form (only nonzero
// pairs, lhs before rhs).
AlgebraFile algebra_to_file(const std::string& name, const LieAlgebra& g,
                            std::optional<SplitNames> split) {
  AlgebraFile f;
  f.name = name;
  f.dim = g.dim();
  f.basis = g.basis_names();
  for (std::size_t i = 0; i < g.dim(); ++i)
    for (std::size_t j = i + 1; j < g.dim(); ++j) {
      Vec v = g.basis_bracket(i, j);
      BracketEntry e;
      e.lhs = f.basis[i];
      e.rhs = f.basis[j];
      for (std::size_t k = 0; k < g.dim(); ++k)
        if (!v[k].is_zero())
          e.value.push_back({f.basis[k], rational_str(v[k].re()), rational_str(v[k].im())});
      if (!e.value.empty()) f.brackets.push_back(std::move(e));
    }
  f.split = std::move(split);
  return f;
}

LieAlgebra dim2_solvable_algebra() {
  // [e1, e2] = e2
  std::vector<std::vector<Vec>> upper(2);
  upper[0] = {Vec{GR(0), GR(1)}};
  upper[1] = {};
  return LieAlgebra::make({"e1", "e2"}, std::move(upper));
}

LieAlgebra heisenberg3_algebra() {
  // [e1, e2] = e3
  std::vector<std::vector<Vec>> upper(3);
  upper[0] = {Vec{GR(0), GR(0), GR(1)}, Vec(3)};
  upper[1] = {Vec(3)};
  upper[2] = {};
  return LieAlgebra::make({"e1", "e2", "e3"}, std::move(upper));
}

LieAlgebra example6dim_algebra() {
  // Six-dimensional solvable algebra, an iterated semidirect sum
  // span{e1} ⋉ (span{e2,e3} ⋉ heisenberg{f1,f2,f3}):
  //   [e1,e2] = e3,
  //   [e1,f1] = f1, [e1,f2] = -f2,
  //   [e2,f1] = f1, [e2,f2] = f2, [e2,f3] = 2 f3,
  //   [f1,f2] = f3.
  const std::size_t n = 6;
  auto unit = [&](std::size_t k, long v = 1) {
    Vec x(n);
    x[k] = GR(v);
    return x;
  };
  std::vector<std::vector<Vec>> upper(n);
  for (std::size_t i = 0; i < n; ++i) upper[i].assign(n - i - 1, Vec(n));
  auto set = [&](std::size_t i, std::size_t j, Vec v) { upper[i][j - i - 1] = std::move(v); };
  set(0, 1, unit(2));        // [e1,e2] = e3
  set(0, 3, unit(3));        // [e1,f1] = f1
  set(0, 4, unit(4, -1));    // [e1,f2] = -f2
  set(1, 3, unit(3));        // [e2,f1] = f1
  set(1, 4, unit(4));        // [e2,f2] = f2
  set(1, 5, unit(5, 2));     // [e2,f3] = 2 f3
  set(3, 4, unit(5));        // [f1,f2] = f3
  return LieAlgebra::make({"e1", "e2", "e3", "f1", "f2", "f3"}, std::move(upper));
}

}  // namespace

LieAlgebra sl_algebra(std::size_t n) {
  if (n < 2) throw InputError("sl_n needs n >= 2");
  const std::size_t dim = n * n - 1;
  // Basis matrices: h1..h_{n-1} then e_{ij} for i != j in lex order.
  struct BasisMat {
    std::string name;
    std::vector<long> m;  // n x n entries
  };
  std::vector<BasisMat> basis;
  auto mat = [&](auto fill) {
    std::vector<long> m(n * n, 0);
    fill(m);
    return m;
  };
  for (std::size_t k = 0; k + 1 < n; ++k)
    basis.push_back({"h" + std::to_string(k + 1), mat([&](auto& m) {
                       m[k * n + k] = 1;
                       m[(k + 1) * n + (k + 1)] = -1;
                     })});
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (i != j)
        basis.push_back({"e" + std::to_string(i + 1) + std::to_string(j + 1),
                         mat([&](auto& m) { m[i * n + j] = 1; })});

  // Expresses a traceless matrix in the chosen basis: off-diagonal entries
  // map to the e_{ij}; the diagonal maps to partial sums on the h's.
  auto coords_of = [&](const std::vector<long>& m) {
    Vec v(dim);
    long running = 0;
    for (std::size_t k = 0; k + 1 < n; ++k) {
      running += m[k * n + k];
      v[k] = GR(running);
    }
    std::size_t idx = n - 1;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (i != j) v[idx++] = GR(m[i * n + j]);
    return v;
  };
  auto commutator = [&](const std::vector<long>& x, const std::vector<long>& y) {
    std::vector<long> c(n * n, 0);
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t s = 0; s < n; ++s) {
        long acc = 0;
        for (std::size_t k = 0; k < n; ++k)
          acc += x[r * n + k] * y[k * n + s] - y[r * n + k] * x[k * n + s];
        c[r * n + s] = acc;
      }
    return c;
  };

  std::vector<std::string> names;
  for (const auto& b : basis) names.push_back(b.name);
  std::vector<std::vector<Vec>> upper(dim);
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = i + 1; j < dim; ++j)
      upper[i].push_back(coords_of(commutator(basis[i].m, basis[j].m)));
  return LieAlgebra::make(std::move(names), std::move(upper));
}

namespace {

LieAlgebra cn_sln_algebra(std::size_t n) {
  LieAlgebra translations = LieAlgebra::abelian(n, "v");
  LieAlgebra sl = sl_algebra(n);
  // Standard action: each sl basis element acts on C^n by its own matrix.
  std::vector<Matrix> action;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    Matrix d(n, n);
    d.at(k, k) = GR(1);
    d.at(k + 1, k + 1) = GR(-1);
    action.push_back(std::move(d));
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (i != j) {
        Matrix d(n, n);
        d.at(i, j) = GR(1);
        action.push_back(std::move(d));
      }
  return semidirect(translations, sl, action);
}

}  // namespace

std::vector<std::string> catalog_names() {
  return {"dim2_solvable", "heisenberg3", "example6dim", "cn_sln", "abelian"};
}

bool catalog_requires_param(const std::string& name) {
  return name == "cn_sln" || name == "abelian";
}

AlgebraFile catalog_entry(const std::string& name, std::optional<std::size_t> param) {
  if (catalog_requires_param(name) && !param)
    throw InputError("catalog entry '" + name + "' needs --param n");
  if (!catalog_requires_param(name) && param)
    throw InputError("catalog entry '" + name + "' takes no parameter");

  if (name == "dim2_solvable")
    return algebra_to_file(name, dim2_solvable_algebra(), std::nullopt);
  if (name == "heisenberg3")
    return algebra_to_file(name, heisenberg3_algebra(), std::nullopt);
  if (name == "example6dim")
    return algebra_to_file(name, example6dim_algebra(), std::nullopt);
  if (name == "abelian") {
    if (*param < 1) throw InputError("abelian needs m >= 1");
    return algebra_to_file("abelian" + std::to_string(*param),
                           LieAlgebra::abelian(*param, "a"), std::nullopt);
  }
  if (name == "cn_sln") {
    std::size_t n = *param;
    if (n < 2 || n > 5) throw InputError("cn_sln supports 2 <= n <= 5");
    LieAlgebra g = cn_sln_algebra(n);
    SplitNames split;
    for (std::size_t k = 0; k < n; ++k) split.b.push_back("v" + std::to_string(k + 1));
    for (std::size_t k = n; k < g.dim(); ++k) split.l.push_back(g.basis_names()[k]);
    split.l_label = "SL_" + std::to_string(n);
    return algebra_to_file("cn_sln" + std::to_string(n), g, std::move(split));
  }
  std::string available;
  for (const auto& s : catalog_names()) available += (available.empty() ? "" : ", ") + s;
  throw InputError("unknown catalog entry '" + name + "'; available: " + available);
}

}  // namespace oexp
