#include <cmath>
#include <map>
#include <sstream>

#include "doctest.h"
#include "oexp/error.hpp"
#include "oexp/wordmetric.hpp"

using namespace oexp;

namespace {

// Independent word-length oracle: enumerate every generator sequence of each
// length by an explicit odometer and take the minimum length per element.
std::map<IntMatrix, std::uint32_t> enumerate_words(const MatrixGroupPresentation& p,
                                                   std::uint32_t max_len) {
  std::map<IntMatrix, std::uint32_t> best;
  best[IntMatrix::identity(p.matrix_size)] = 0;
  const std::size_t g = p.generators.size();
  for (std::uint32_t len = 1; len <= max_len; ++len) {
    std::vector<std::size_t> odo(len, 0);
    while (true) {
      IntMatrix m = IntMatrix::identity(p.matrix_size);
      for (std::size_t k = 0; k < len; ++k) m = m * p.generators[odo[k]];
      auto it = best.find(m);
      if (it == best.end()) best[m] = len;
      // advance odometer
      std::size_t pos = 0;
      while (pos < len && ++odo[pos] == g) odo[pos++] = 0;
      if (pos == len) break;
    }
  }
  return best;
}

IntMatrix heis(std::int64_t a, std::int64_t b, std::int64_t c) {
  IntMatrix m = IntMatrix::identity(3);
  m.at(0, 1) = a;
  m.at(0, 2) = b;
  m.at(1, 2) = c;
  return m;
}

}  // namespace

TEST_CASE("presets") {
  MatrixGroupPresentation h = preset("heisenberg_Z");
  CHECK(h.generators.size() == 4);
  CHECK(h.matrix_size == 3);

  MatrixGroupPresentation fa = preset("free_abelian_2");
  CHECK(fa.generators.size() == 4);
  for (const auto& a : fa.generators)
    for (const auto& b : fa.generators) CHECK(a * b == b * a);

  MatrixGroupPresentation sol = preset("sol_lattice");
  CHECK(sol.generators.size() == 6);
  CHECK(sol.matrix_size == 3);
  for (const auto& g : sol.generators) {
    // integer determinant +-1 for 3x3
    std::int64_t det =
        g.at(0, 0) * (g.at(1, 1) * g.at(2, 2) - g.at(1, 2) * g.at(2, 1)) -
        g.at(0, 1) * (g.at(1, 0) * g.at(2, 2) - g.at(1, 2) * g.at(2, 0)) +
        g.at(0, 2) * (g.at(1, 0) * g.at(2, 1) - g.at(1, 1) * g.at(2, 0));
    CHECK((det == 1 || det == -1));
  }
  // inverse closure: every generator's inverse is among the generators
  for (const auto& name : preset_names()) {
    MatrixGroupPresentation p = preset(name);
    for (const auto& g : p.generators) {
      bool found = false;
      for (const auto& h2 : p.generators)
        if (g * h2 == IntMatrix::identity(p.matrix_size)) found = true;
      CHECK(found);
    }
  }
  CHECK_THROWS_AS(preset("nope"), InputError);
}

TEST_CASE("bfs radius 0 and small balls") {
  for (const auto& name : preset_names()) {
    BallTable t0 = bfs_ball(preset(name), 0);
    CHECK(t0.lengths.size() == 1);
    CHECK(t0.length_of(IntMatrix::identity(3)) == 0);
  }

  // free_abelian_2 radius 2: ell^1 ball of 13 elements; ell(e1+e2) = 2
  BallTable t = bfs_ball(preset("free_abelian_2"), 2);
  CHECK(t.lengths.size() == 13);
  IntMatrix e1e2 = IntMatrix::identity(3);
  e1e2.at(0, 2) = 1;
  e1e2.at(1, 2) = 1;
  CHECK(t.length_of(e1e2) == 2);
}

TEST_CASE("bfs agrees with exhaustive word enumeration up to radius 4") {
  for (const auto& name : preset_names()) {
    MatrixGroupPresentation p = preset(name);
    BallTable table = bfs_ball(p, 4);
    auto oracle = enumerate_words(p, 4);
    REQUIRE(table.lengths.size() == oracle.size());
    for (const auto& [m, len] : oracle) {
      auto got = table.length_of(m);
      REQUIRE(got.has_value());
      CHECK(*got == len);
    }
  }
}

TEST_CASE("heisenberg commutator has length 4") {
  MatrixGroupPresentation p = preset("heisenberg_Z");
  BallTable t = bfs_ball(p, 4);
  // z = E12(1) E23(1) E12(-1) E23(-1)
  IntMatrix z = p.generators[0] * p.generators[2] * p.generators[1] * p.generators[3];
  CHECK(z == heis(0, 1, 0));
  CHECK(t.length_of(z) == 4);
}

TEST_CASE("table properties: subadditivity and symmetry") {
  MatrixGroupPresentation p = preset("heisenberg_Z");
  BallTable t = bfs_ball(p, 6);
  // spot-check subadditivity over a deterministic sample of pairs
  std::vector<IntMatrix> elems;
  for (const auto& [m, len] : t.lengths)
    if (elems.size() < 40) elems.push_back(m);
  for (const auto& g : elems)
    for (const auto& h2 : elems) {
      auto lg = t.length_of(g), lh = t.length_of(h2), lgh = t.length_of(g * h2);
      if (lg && lh && lgh) CHECK(*lgh <= *lg + *lh);
    }
  // symmetry: with inverse-closed generators, ell(g) = ell(g^{-1});
  // for upper unitriangular g the inverse is computable directly
  for (const auto& [m, len] : t.lengths) {
    IntMatrix inv = heis(-m.at(0, 1), m.at(0, 1) * m.at(1, 2) - m.at(0, 2), -m.at(1, 2));
    CHECK(m * inv == IntMatrix::identity(3));
    auto linv = t.length_of(inv);
    if (linv) CHECK(*linv == len);
  }
}

TEST_CASE("bfs determinism across worker counts") {
  for (const auto& name : preset_names()) {
    BallTable a = bfs_ball(preset(name), 6, 5000000, 1);
    BallTable b = bfs_ball(preset(name), 6, 5000000, 4);
    BallTable c = bfs_ball(preset(name), 6, 5000000, 3);
    std::ostringstream sa, sb, sc;
    a.write_text(sa);
    b.write_text(sb);
    c.write_text(sc);
    CHECK(sa.str() == sb.str());
    CHECK(sa.str() == sc.str());
  }
}

TEST_CASE("state budget aborts cleanly with a valid partial table") {
  MatrixGroupPresentation p = preset("heisenberg_Z");
  BallTable full = bfs_ball(p, 4);
  std::size_t budget = full.lengths.size() - 1;  // one short of level 4 completion
  BallTable part = bfs_ball(p, 4, budget);
  CHECK(part.budget_exhausted);
  CHECK(part.completed_radius < 4);
  // the partial table agrees with the full one on its completed radius
  for (const auto& [m, len] : part.lengths) {
    CHECK(len <= part.completed_radius);
    CHECK(full.length_of(m) == len);
  }
}

TEST_CASE("sample_lengths families") {
  MatrixGroupPresentation p = preset("heisenberg_Z");
  BallTable t = bfs_ball(p, 8);
  SampleSet center = sample_lengths(t, p, Family::center_power, {1, 2, 3, 4, 100});
  REQUIRE(center.samples.size() == 4);  // z^100 missing at radius 8
  CHECK(center.missing == std::vector<std::int64_t>{100});
  CHECK(center.samples[0].length == 4);  // ell(z) = 4

  MatrixGroupPresentation fa = preset("free_abelian_2");
  BallTable tf = bfs_ball(fa, 6);
  SampleSet axis = sample_lengths(tf, fa, Family::axis_power, {1, 2, 3, 4, 5, 6});
  REQUIRE(axis.samples.size() == 6);
  for (const auto& s : axis.samples) CHECK(s.length == s.x);  // ell(n e1) = n

  MatrixGroupPresentation sol = preset("sol_lattice");
  BallTable ts = bfs_ball(sol, 9);
  SampleSet sub = sample_lengths(ts, sol, Family::subgroup_vector, {1, 2, 3, 4});
  for (const auto& s : sub.samples)
    CHECK(s.length <= 2 * s.param + 1);  // constructive word t^k a t^{-k}
  CHECK(sub.samples.size() >= 3);
}

TEST_CASE("fit_asymptotics on synthetic data") {
  SampleSet linear, sqrt_set, tiny;
  for (int n = 1; n <= 64; ++n) {
    linear.samples.push_back({double(n), double(n), n});
    sqrt_set.samples.push_back({double(n), std::ceil(std::sqrt(double(n))), n});
  }
  FitResult f1 = fit_asymptotics(linear, FitModel::power);
  CHECK(f1.beta == doctest::Approx(1.0).epsilon(0.01));
  FitResult f2 = fit_asymptotics(sqrt_set, FitModel::power);
  CHECK(f2.beta >= 0.45);
  CHECK(f2.beta <= 0.55);

  // log model on exact logarithmic data
  SampleSet logset;
  for (int n = 1; n <= 64; ++n)
    logset.samples.push_back({double(n), 3.0 * std::log1p(double(n)) + 0.5, n});
  FitResult f3 = fit_asymptotics(logset, FitModel::log);
  CHECK(f3.alpha == doctest::Approx(3.0).epsilon(0.01));
  CHECK(f3.gamma == doctest::Approx(0.5).epsilon(0.05));
  CHECK(f3.residual_rms < 1e-9);

  tiny.samples = {{1, 1, 1}, {2, 2, 2}};
  CHECK_THROWS_AS(fit_asymptotics(tiny, FitModel::power), ValidationError);
}

TEST_CASE("semidirect additivity") {
  // free_abelian_2 as Z x Z: exact additivity, C = 1, D = 0
  MatrixGroupPresentation fa = preset("free_abelian_2");
  BallTable tf = bfs_ball(fa, 8);
  AdditivityReport rep = check_semidirect_additivity(fa, preset_split("free_abelian_2"), tf);
  CHECK(rep.c == 1.0);
  CHECK(rep.d == 0.0);
  CHECK(rep.max_additive_gap == 0);
  CHECK(rep.pairs_checked > 0);

  // heisenberg with N = center: finite sandwich constants on a small ball
  MatrixGroupPresentation h = preset("heisenberg_Z");
  BallTable th = bfs_ball(h, 8);
  AdditivityReport hrep = check_semidirect_additivity(h, preset_split("heisenberg_Z"), th);
  CHECK(hrep.pairs_checked > 0);
  CHECK(hrep.c < 4.0);

  // sol_lattice with N = Z^2
  MatrixGroupPresentation sol = preset("sol_lattice");
  BallTable tsol = bfs_ball(sol, 8);
  AdditivityReport srep =
      check_semidirect_additivity(sol, preset_split("sol_lattice"), tsol);
  CHECK(srep.pairs_checked > 0);
  CHECK(srep.c >= 1.0);
}
