#include <random>

#include "doctest.h"
#include "oexp/catalog.hpp"
#include "oexp/error.hpp"
#include "oexp/structure.hpp"
#include "support/random_algebras.hpp"

using namespace oexp;

namespace {

LieAlgebra from_catalog(const std::string& name,
                        std::optional<std::size_t> param = std::nullopt) {
  return build_algebra(catalog_entry(name, param)).algebra;
}

Vec unit(std::size_t n, std::size_t k) {
  Vec x(n);
  x[k] = GR(1);
  return x;
}

Subspace span_units(std::size_t n, std::initializer_list<std::size_t> idx) {
  std::vector<Vec> rows;
  for (std::size_t k : idx) rows.push_back(unit(n, k));
  return Subspace::span_vectors(rows, n);
}

bool solvable(const LieAlgebra& g) {
  return g.dim() == 0 ||
         series(g, g.full_space(), SeriesKind::derived).stable_term().dim() == 0;
}

}  // namespace

TEST_CASE("killing form") {
  CHECK(killing_form(from_catalog("abelian", 3)) == Matrix::zero(3, 3));
  // products of the Heisenberg ad matrices are strictly triangular
  CHECK(killing_form(from_catalog("heisenberg3")) == Matrix::zero(3, 3));

  // sl2 in the basis (h, e, f) = (h1, e12, e21): kappa(h,h) = 8,
  // kappa(e,f) = 4, everything else 0 (hand trace computation)
  Matrix k = killing_form(sl_algebra(2));
  Matrix expect(3, 3);
  expect.at(0, 0) = GR(8);
  expect.at(1, 2) = GR(4);
  expect.at(2, 1) = GR(4);
  CHECK(k == expect);
}

TEST_CASE("classify") {
  ClassifyFlags h = classify(from_catalog("heisenberg3"));
  CHECK(h.is_nilpotent);
  CHECK(h.is_solvable);
  CHECK_FALSE(h.is_semisimple);
  CHECK_FALSE(h.is_abelian);
  CHECK_FALSE(h.is_reductive);

  ClassifyFlags sl2 = classify(sl_algebra(2));
  CHECK(sl2.is_semisimple);
  CHECK(sl2.is_reductive);
  CHECK_FALSE(sl2.is_solvable);
  CHECK_FALSE(sl2.is_nilpotent);

  ClassifyFlags g2 = classify(from_catalog("dim2_solvable"));
  CHECK(g2.is_solvable);
  CHECK_FALSE(g2.is_nilpotent);
  CHECK_FALSE(g2.is_semisimple);
  CHECK_FALSE(g2.is_reductive);

  ClassifyFlags ab = classify(from_catalog("abelian", 2));
  CHECK(ab.is_abelian);
  CHECK(ab.is_nilpotent);
  CHECK(ab.is_reductive);  // center is everything, derived algebra zero
  CHECK_FALSE(ab.is_semisimple);
}

TEST_CASE("radical") {
  LieAlgebra g2 = from_catalog("dim2_solvable");
  CHECK(radical(g2).is_full());

  CHECK(radical(sl_algebra(2)).is_zero());
  CHECK(radical(sl_algebra(3)).is_zero());

  // C^n x| sl_n: the radical is the translation part
  for (std::size_t n : {2, 3}) {
    LieAlgebra g = from_catalog("cn_sln", n);
    Subspace expected(g.dim());
    {
      std::vector<Vec> rows;
      for (std::size_t k = 0; k < n; ++k) rows.push_back(unit(g.dim(), k));
      expected = Subspace::span_vectors(rows, g.dim());
    }
    CHECK(radical(g) == expected);
  }
}

TEST_CASE("levi decomposition") {
  LeviDecomposition semi = levi_subalgebra(sl_algebra(2));
  CHECK(semi.levi.is_full());
  CHECK(semi.radical.is_zero());

  LeviDecomposition solv = levi_subalgebra(from_catalog("example6dim"));
  CHECK(solv.levi.is_zero());
  CHECK(solv.radical.is_full());

  // C^2 x| sl_2: a Levi complement, validated by the invariants (it need not
  // equal the input sl2 copy, though any complement here is conjugate to it)
  LieAlgebra g = from_catalog("cn_sln", 2);
  LeviDecomposition levi = levi_subalgebra(g);
  CHECK(levi.radical.dim() == 2);
  CHECK(levi.levi.dim() == 3);
  CHECK(g.is_subalgebra(levi.levi));
  LieAlgebra s = restrict_to(g, levi.levi);
  CHECK(classify(s).is_semisimple);
  CHECK(subspace_sum(levi.radical, levi.levi).dim() == g.dim());
}

TEST_CASE("levi on an algebra whose radical needs a nontrivial lift") {
  // (heisenberg (+) C^2) x| sl2 with sl2 acting on the C^2 block: the
  // recursion must lift through two abelian layers.
  std::mt19937 rng(5);
  for (int iter = 0; iter < 5; ++iter) {
    LieAlgebra g = testsupport::random_algebra(rng, 10);
    LeviDecomposition levi = levi_subalgebra(g);
    CHECK(levi.radical.dim() + levi.levi.dim() == g.dim());
    CHECK(subspace_intersect(levi.radical, levi.levi).dim() == 0);
    if (levi.levi.dim() > 0)
      CHECK(classify(restrict_to(g, levi.levi)).is_semisimple);
    if (levi.radical.dim() > 0)
      CHECK(solvable(restrict_to(g, levi.radical)));
  }
}

TEST_CASE("cartan subalgebra") {
  // nilpotent algebra: h = the whole algebra
  LieAlgebra h3 = from_catalog("heisenberg3");
  CHECK(cartan_subalgebra(h3).cartan.is_full());

  // 2-dim solvable: h = span{e1} (generalized nullspace of ad e1)
  LieAlgebra g2 = from_catalog("dim2_solvable");
  CHECK(cartan_subalgebra(g2).cartan == span_units(2, {0}));

  // example6dim: dim h = 3, h + g_inf = g, h cap g_inf = 0
  LieAlgebra g6 = from_catalog("example6dim");
  CartanData cd = cartan_subalgebra(g6);
  CHECK(cd.cartan.dim() == 3);
  Subspace ginf = series(g6, g6.full_space(), SeriesKind::lower_central).stable_term();
  CHECK(subspace_sum(cd.cartan, ginf).dim() == 6);
  CHECK(subspace_intersect(cd.cartan, ginf).dim() == 0);
  // defining invariants
  CHECK(normalizer(g6, cd.cartan) == cd.cartan);
  LieAlgebra hc = restrict_to(g6, cd.cartan);
  CHECK(series(hc, hc.full_space(), SeriesKind::lower_central).stable_term().is_zero());

  CHECK_THROWS_AS(cartan_subalgebra(sl_algebra(2)), ValidationError);
}

TEST_CASE("classify consistency on catalog and random inputs") {
  std::mt19937 rng(11);
  std::vector<LieAlgebra> inputs;
  inputs.push_back(from_catalog("dim2_solvable"));
  inputs.push_back(from_catalog("heisenberg3"));
  inputs.push_back(from_catalog("example6dim"));
  inputs.push_back(from_catalog("cn_sln", 2));
  inputs.push_back(from_catalog("abelian", 3));
  inputs.push_back(sl_algebra(2));
  for (int k = 0; k < 10; ++k) inputs.push_back(testsupport::random_algebra(rng, 9));

  for (const LieAlgebra& g : inputs) {
    ClassifyFlags f = classify(g);
    if (f.is_semisimple) CHECK(radical(g).is_zero());
    if (f.is_nilpotent) CHECK(f.is_solvable);
    // radical: solvable ideal whose quotient is semisimple or zero
    Subspace rad = radical(g);
    CHECK(g.is_ideal(rad));
    if (rad.dim() > 0) CHECK(solvable(restrict_to(g, rad)));
    if (rad.dim() < g.dim()) {
      QuotientResult q = quotient(g, rad);
      CHECK(classify(q.algebra).is_semisimple);
    }
    // cartan of the solvable part: nilpotent, self-normalizing, h + b_inf = b
    if (rad.dim() > 0) {
      LieAlgebra b = restrict_to(g, rad);
      CartanData cd = cartan_subalgebra(b);
      LieAlgebra hh = restrict_to(b, cd.cartan);
      CHECK(series(hh, hh.full_space(), SeriesKind::lower_central).stable_term().is_zero());
      CHECK(normalizer(b, cd.cartan) == cd.cartan);
      Subspace binf = series(b, b.full_space(), SeriesKind::lower_central).stable_term();
      CHECK(subspace_sum(cd.cartan, binf).dim() == b.dim());
    }
  }
}
