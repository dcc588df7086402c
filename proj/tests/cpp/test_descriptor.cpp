#include "doctest.h"
#include "oexp/catalog.hpp"
#include "oexp/descriptor.hpp"
#include "oexp/error.hpp"

using namespace oexp;

namespace {

LieAlgebra from_catalog(const std::string& name,
                        std::optional<std::size_t> param = std::nullopt) {
  return build_algebra(catalog_entry(name, param)).algebra;
}

Vec unit(std::size_t n, std::size_t k, long v = 1) {
  Vec x(n);
  x[k] = GR(v);
  return x;
}

Subspace span_units(std::size_t n, std::initializer_list<std::size_t> idx) {
  std::vector<Vec> rows;
  for (std::size_t k : idx) rows.push_back(unit(n, k));
  return Subspace::span_vectors(rows, n);
}

std::vector<std::size_t> weights_of(const LieAlgebra& g) {
  return weighted_basis(g).weights;
}

}  // namespace

TEST_CASE("weighted basis") {
  using W = std::vector<std::size_t>;
  CHECK(weights_of(from_catalog("heisenberg3")) == W{1, 1, 2});
  CHECK(weights_of(from_catalog("abelian", 4)) == W{1, 1, 1, 1});

  // 4-dim filiform [e1,e2]=e3, [e1,e3]=e4: series dims 4,2,1,0 by hand
  std::vector<std::vector<Vec>> upper(4);
  upper[0] = {unit(4, 2), unit(4, 3), Vec(4)};
  upper[1] = {Vec(4), Vec(4)};
  upper[2] = {Vec(4)};
  upper[3] = {};
  LieAlgebra filiform = LieAlgebra::make({"e1", "e2", "e3", "e4"}, std::move(upper));
  CHECK(weights_of(filiform) == W{1, 1, 2, 3});

  CHECK_THROWS_AS(weighted_basis(from_catalog("dim2_solvable")), ValidationError);
}

TEST_CASE("weighted basis reconstruction and weight sum") {
  for (const char* name : {"heisenberg3", "abelian"}) {
    LieAlgebra g = name == std::string("abelian") ? from_catalog("abelian", 3)
                                                  : from_catalog(name);
    WeightedBasis wb = weighted_basis(g);
    SeriesChain lcs = series(g, g.full_space(), SeriesKind::lower_central);
    // span{vectors with weight >= k} = g_k, exactly
    for (std::size_t k = 1; k + 1 <= lcs.terms.size(); ++k) {
      std::vector<Vec> rows;
      for (std::size_t i = 0; i < wb.dim(); ++i)
        if (wb.weights[i] >= k) rows.push_back(wb.vectors[i]);
      CHECK(Subspace::span_vectors(rows, g.dim()) == lcs.terms[k - 1]);
    }
    // sum of weights = sum of series dims
    std::size_t wsum = 0, dsum = 0;
    for (auto w : wb.weights) wsum += w;
    for (const auto& t : lcs.terms) dsum += t.dim();
    CHECK(wsum == dsum);
  }
}

TEST_CASE("weights are stable under basis permutation") {
  // relabel example6dim/e with the f-block first; the weight multiset of the
  // quotient must not change
  LieAlgebra g6 = from_catalog("example6dim");
  Subspace e = span_units(6, {3, 4, 5});
  QuotientResult q = quotient(g6, e);
  std::vector<std::size_t> w1 = weighted_basis(q.algebra).weights;

  // permuted copy: basis order (f1,f2,f3,e1,e2,e3)
  std::vector<std::size_t> perm = {3, 4, 5, 0, 1, 2};  // new index -> old index
  std::vector<std::size_t> inv(6);
  for (std::size_t k = 0; k < 6; ++k) inv[perm[k]] = k;
  std::vector<std::vector<Vec>> upper(6);
  for (std::size_t i = 0; i < 6; ++i)
    for (std::size_t j = i + 1; j < 6; ++j) {
      Vec old = g6.basis_bracket(perm[i], perm[j]);
      Vec moved(6);
      for (std::size_t k = 0; k < 6; ++k) moved[inv[k]] = old[k];
      upper[i].push_back(std::move(moved));
    }
  std::vector<std::string> names = {"f1", "f2", "f3", "e1", "e2", "e3"};
  LieAlgebra permuted = LieAlgebra::make(names, std::move(upper));
  Subspace e_perm = span_units(6, {0, 1, 2});
  QuotientResult qp = quotient(permuted, e_perm);
  std::vector<std::size_t> w2 = weighted_basis(qp.algebra).weights;

  auto sorted = [](std::vector<std::size_t> v) {
    std::sort(v.begin(), v.end());
    return v;
  };
  CHECK(sorted(w1) == sorted(w2));
  CHECK(w1 == std::vector<std::size_t>{1, 1, 2});
}

TEST_CASE("cartan complement") {
  // nilpotent b with e = 0: h = v = b
  LieAlgebra h3 = from_catalog("heisenberg3");
  CartanComplement c0 = cartan_complement(h3, h3.zero_space());
  CHECK(c0.h.is_full());
  CHECK(c0.v.is_full());

  // 2-dim solvable: h = span{e1}, v = span{e1}, e = span{e2}
  LieAlgebra g2 = from_catalog("dim2_solvable");
  CartanComplement c2 = cartan_complement(g2, span_units(2, {1}));
  CHECK(c2.h == span_units(2, {0}));
  CHECK(c2.v == span_units(2, {0}));

  // example6dim (b = g): dim v = 3 and e (+) v = g, exactly
  LieAlgebra g6 = from_catalog("example6dim");
  Subspace e6 = span_units(6, {3, 4, 5});
  CartanComplement c6 = cartan_complement(g6, e6);
  CHECK(c6.v.dim() == 3);
  CHECK(subspace_sum(e6, c6.v).dim() == 6);
  CHECK(subspace_intersect(e6, c6.v).dim() == 0);
  // (h cap e) (+) v = h
  Subspace he = subspace_intersect(c6.h, e6);
  CHECK(subspace_sum(he, c6.v) == c6.h);
  CHECK(subspace_intersect(he, c6.v).dim() == 0);
}

TEST_CASE("descriptor for the two-dimensional solvable algebra") {
  LieAlgebra g2 = from_catalog("dim2_solvable");
  SplitData split{g2.full_space(), g2.zero_space(), "trivial"};
  OexpDescriptor d = oexp_descriptor(g2, split);
  CHECK(d.dim_E == 1);
  CHECK(d.factor_E_generators == std::vector<std::string>{"t1"});
  CHECK(d.factor_BE.dim() == 1);
  CHECK(d.factor_BE.weights == std::vector<std::size_t>{1});
  CHECK(d.factor_L == "trivial");
  CHECK(d.dim_L == 0);

  LengthProfile p = length_profile(d);
  CHECK(p.log_term == "log(1 + |t1|)");
  CHECK(p.nilpotent_term == "|s1|");
  CHECK(p.reductive_term.empty());
  CHECK(p.render() == "ell(exp(eta) exp(xi) l) ~ log(1 + |t1|) + |s1|");
}

TEST_CASE("descriptor for C^n x| sl_n") {
  for (std::size_t n : {2, 3}) {
    ParsedAlgebra parsed = build_algebra(catalog_entry("cn_sln", n));
    OexpDescriptor d = oexp_descriptor(parsed.algebra, *parsed.split);
    CHECK(d.dim_E == n);
    CHECK(d.factor_BE.dim() == 0);  // B/E is trivial
    CHECK(d.factor_L == "R(SL_" + std::to_string(n) + ")");
    CHECK(d.dim_L == n * n - 1);

    LengthProfile p = length_profile(d);
    CHECK(p.nilpotent_term.empty());
    CHECK(p.reductive_term == "ell_SL_" + std::to_string(n) + "(l)");
  }
}

TEST_CASE("descriptor for example6dim") {
  LieAlgebra g6 = from_catalog("example6dim");
  SplitData split{g6.full_space(), g6.zero_space(), "trivial"};
  OexpDescriptor d = oexp_descriptor(g6, split);
  CHECK(d.dim_E == 3);
  CHECK(d.factor_E_generators == std::vector<std::string>{"t1", "t2", "t3"});
  CHECK(d.factor_BE.weights == std::vector<std::size_t>{1, 1, 2});
  CHECK(d.growth_bound == "max{|s1|,|s2|,|s3|^(1/2)}");

  LengthProfile p = length_profile(d);
  CHECK(p.log_term == "log(1 + max{|t1|,|t2|,|t3|})");
  CHECK(p.nilpotent_term == "max{|s1|,|s2|,|s3|^(1/2)}");
  CHECK(p.reductive_term.empty());
}

TEST_CASE("descriptor for abelian C^m: only the nilpotent term") {
  LieAlgebra ab = from_catalog("abelian", 3);
  SplitData split{ab.full_space(), ab.zero_space(), "trivial"};
  OexpDescriptor d = oexp_descriptor(ab, split);
  CHECK(d.dim_E == 0);
  CHECK(d.factor_BE.dim() == 3);
  LengthProfile p = length_profile(d);
  CHECK(p.log_term.empty());
  CHECK(p.reductive_term.empty());
  CHECK(p.nilpotent_term == "max{|s1|,|s2|,|s3|}");
}

TEST_CASE("descriptor dimension bookkeeping") {
  for (std::size_t n : {2, 3}) {
    ParsedAlgebra parsed = build_algebra(catalog_entry("cn_sln", n));
    OexpDescriptor d = oexp_descriptor(parsed.algebra, *parsed.split);
    CHECK(d.dim_E + d.factor_BE.dim() + d.dim_L == parsed.algebra.dim());
  }
}

TEST_CASE("descriptor rejects an invalid split") {
  LieAlgebra g2 = from_catalog("dim2_solvable");
  Subspace e1_only = Subspace::span_vectors({unit(2, 0)}, 2);
  SplitData bad{e1_only, Subspace::span_vectors({unit(2, 1)}, 2), "x"};
  CHECK_THROWS_AS(oexp_descriptor(g2, bad), ValidationError);
}
