#include "oexp/wordmetric.hpp"

#include <algorithm>
#include <cmath>
#include <thread>

#include "oexp/error.hpp"

namespace oexp {

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m;
  m.n = n;
  m.a.assign(n * n, 0);
  for (std::size_t k = 0; k < n; ++k) m.at(k, k) = 1;
  return m;
}

IntMatrix operator*(const IntMatrix& x, const IntMatrix& y) {
  IntMatrix p;
  p.n = x.n;
  p.a.assign(x.n * x.n, 0);
  for (std::size_t r = 0; r < x.n; ++r)
    for (std::size_t k = 0; k < x.n; ++k) {
      std::int64_t v = x.at(r, k);
      if (v == 0) continue;
      for (std::size_t c = 0; c < x.n; ++c) p.at(r, c) += v * y.at(k, c);
    }
  return p;
}

std::string IntMatrix::key() const {
  std::string s;
  for (std::size_t k = 0; k < a.size(); ++k) {
    if (k) s += ' ';
    s += std::to_string(a[k]);
  }
  return s;
}

std::size_t IntMatrixHash::operator()(const IntMatrix& m) const {
  // FNV-1a over the raw entries.
  std::uint64_t h = 1469598103934665603ull;
  for (std::int64_t v : m.a) {
    std::uint64_t u = static_cast<std::uint64_t>(v);
    for (int b = 0; b < 8; ++b) {
      h ^= (u >> (8 * b)) & 0xff;
      h *= 1099511628211ull;
    }
  }
  return static_cast<std::size_t>(h);
}

namespace {

IntMatrix elem3(std::size_t r, std::size_t c, std::int64_t v) {
  IntMatrix m = IntMatrix::identity(3);
  m.at(r, c) = v;
  return m;
}

IntMatrix sol_element(std::int64_t v1, std::int64_t v2, std::int64_t k) {
  // (v, k) -> [[A^k, v], [0, 1]] with A = [[2,1],[1,1]].
  IntMatrix m = IntMatrix::identity(3);
  std::int64_t a = 1, b = 0, c = 0, d = 1;  // A^0
  std::int64_t steps = k >= 0 ? k : -k;
  for (std::int64_t t = 0; t < steps; ++t) {
    std::int64_t na, nb, nc, nd;
    if (k >= 0) {  // multiply by A
      na = 2 * a + c; nb = 2 * b + d; nc = a; nd = b;
    } else {       // multiply by A^{-1} = [[1,-1],[-1,2]]
      na = a - c; nb = b - d; nc = -a + 2 * c; nd = -b + 2 * d;
    }
    a = na; b = nb; c = nc; d = nd;
  }
  m.at(0, 0) = a; m.at(0, 1) = b; m.at(1, 0) = c; m.at(1, 1) = d;
  m.at(0, 2) = v1; m.at(1, 2) = v2;
  return m;
}

}  // namespace

MatrixGroupPresentation preset(const std::string& name) {
  MatrixGroupPresentation p;
  p.name = name;
  p.matrix_size = 3;
  if (name == "heisenberg_Z") {
    p.generators = {elem3(0, 1, 1), elem3(0, 1, -1), elem3(1, 2, 1), elem3(1, 2, -1)};
  } else if (name == "free_abelian_2") {
    p.generators = {elem3(0, 2, 1), elem3(0, 2, -1), elem3(1, 2, 1), elem3(1, 2, -1)};
  } else if (name == "sol_lattice") {
    p.generators = {sol_element(1, 0, 0),  sol_element(-1, 0, 0),
                    sol_element(0, 1, 0),  sol_element(0, -1, 0),
                    sol_element(0, 0, 1),  sol_element(0, 0, -1)};
  } else {
    throw InputError("unknown preset '" + name + "'; available: heisenberg_Z, sol_lattice, free_abelian_2");
  }
  return p;
}

std::vector<std::string> preset_names() {
  return {"heisenberg_Z", "sol_lattice", "free_abelian_2"};
}

std::optional<std::uint32_t> BallTable::length_of(const IntMatrix& m) const {
  auto it = lengths.find(m);
  if (it == lengths.end()) return std::nullopt;
  return it->second;
}

void BallTable::write_text(std::ostream& os) const {
  std::vector<const std::pair<const IntMatrix, std::uint32_t>*> items;
  items.reserve(lengths.size());
  for (const auto& kv : lengths) items.push_back(&kv);
  std::sort(items.begin(), items.end(), [](const auto* x, const auto* y) {
    if (x->second != y->second) return x->second < y->second;
    return x->first < y->first;
  });
  for (const auto* kv : items)
    os << kv->first.key() << '\t' << kv->second << '\n';
}

BallTable bfs_ball(const MatrixGroupPresentation& p, std::size_t radius,
                   std::size_t max_states, unsigned workers) {
  if (max_states == 0) throw ValidationError("bfs_ball: max_states must be positive");
  if (workers == 0) workers = 1;
  BallTable table;
  table.preset_name = p.name;
  table.requested_radius = radius;

  IntMatrix id = IntMatrix::identity(p.matrix_size);
  table.lengths.emplace(id, 0);
  table.sphere_sizes.push_back(1);
  std::vector<IntMatrix> frontier{id};

  for (std::size_t level = 1; level <= radius && !frontier.empty(); ++level) {
    // Expand the frontier; workers split it into chunks. Candidate sets are
    // merged into one deduplicated level set, so the table contents do not
    // depend on the worker count.
    std::vector<std::vector<IntMatrix>> chunks(workers);
    if (workers == 1) {
      auto& out = chunks[0];
      for (const IntMatrix& g : frontier)
        for (const IntMatrix& s : p.generators) out.push_back(g * s);
    } else {
      std::vector<std::thread> pool;
      std::size_t per = (frontier.size() + workers - 1) / workers;
      for (unsigned w = 0; w < workers; ++w) {
        std::size_t lo = std::min(frontier.size(), w * per);
        std::size_t hi = std::min(frontier.size(), (w + 1) * per);
        pool.emplace_back([&, lo, hi, w] {
          auto& out = chunks[w];
          for (std::size_t k = lo; k < hi; ++k)
            for (const IntMatrix& s : p.generators) out.push_back(frontier[k] * s);
        });
      }
      for (auto& t : pool) t.join();
    }

    std::vector<IntMatrix> next;
    std::unordered_map<IntMatrix, bool, IntMatrixHash> seen_this_level;
    for (const auto& chunk : chunks)
      for (const IntMatrix& g : chunk) {
        if (table.lengths.count(g)) continue;
        auto [it, fresh] = seen_this_level.emplace(g, true);
        if (fresh) next.push_back(g);
      }

    if (table.lengths.size() + next.size() > max_states) {
      table.budget_exhausted = true;
      table.completed_radius = level - 1;
      return table;
    }
    for (const IntMatrix& g : next) table.lengths.emplace(g, static_cast<std::uint32_t>(level));
    table.sphere_sizes.push_back(next.size());
    frontier = std::move(next);
    table.completed_radius = level;
  }
  if (table.completed_radius < radius && !table.budget_exhausted)
    table.completed_radius = radius;  // group exhausted before the radius
  return table;
}

namespace {

IntMatrix heisenberg_entry(std::int64_t a, std::int64_t b, std::int64_t c) {
  IntMatrix m = IntMatrix::identity(3);
  m.at(0, 1) = a;
  m.at(0, 2) = b;
  m.at(1, 2) = c;
  return m;
}

}  // namespace

SampleSet sample_lengths(const BallTable& table, const MatrixGroupPresentation& p,
                         Family family, const std::vector<std::int64_t>& n_values) {
  SampleSet out;
  for (std::int64_t n : n_values) {
    IntMatrix g;
    double x = static_cast<double>(n);
    if (family == Family::center_power) {
      if (p.name != "heisenberg_Z")
        throw ValidationError("center_power family is defined for heisenberg_Z");
      g = heisenberg_entry(0, n, 0);
    } else if (family == Family::axis_power) {
      g = IntMatrix::identity(p.matrix_size);
      g.at(0, p.matrix_size - 1) = n;
    } else {  // subgroup_vector: (A^n e1, 0) in sol_lattice
      if (p.name != "sol_lattice")
        throw ValidationError("subgroup_vector family is defined for sol_lattice");
      IntMatrix an = sol_element(0, 0, n);
      g = sol_element(an.at(0, 0), an.at(1, 0), 0);
      x = static_cast<double>(std::max(std::llabs(an.at(0, 0)), std::llabs(an.at(1, 0))));
    }
    auto len = table.length_of(g);
    if (!len) {
      out.missing.push_back(n);
      continue;
    }
    out.samples.push_back({x, static_cast<double>(*len), n});
  }
  return out;
}

SampleSet subgroup_samples_all(const BallTable& table) {
  SampleSet out;
  std::vector<Sample> samples;
  for (const auto& [m, len] : table.lengths) {
    // Pure translations (v, 0): the 2x2 block is the identity.
    if (m.at(0, 0) != 1 || m.at(1, 1) != 1 || m.at(0, 1) != 0 || m.at(1, 0) != 0)
      continue;
    std::int64_t v1 = m.at(0, 2), v2 = m.at(1, 2);
    if (v1 == 0 && v2 == 0) continue;
    double x = static_cast<double>(std::max(std::llabs(v1), std::llabs(v2)));
    samples.push_back({x, static_cast<double>(len), 0});
  }
  std::sort(samples.begin(), samples.end(), [](const Sample& a, const Sample& b) {
    if (a.x != b.x) return a.x < b.x;
    return a.length < b.length;
  });
  out.samples = std::move(samples);
  return out;
}

FitResult fit_asymptotics(const SampleSet& set, FitModel model) {
  std::vector<std::pair<double, double>> pts;  // linearized (u, y)
  for (const Sample& s : set.samples) {
    if (model == FitModel::power) {
      if (s.x < 1 || s.length < 1) continue;  // log-log needs positive values
      pts.push_back({std::log(s.x), std::log(s.length)});
    } else {
      pts.push_back({std::log1p(s.x), s.length});
    }
  }
  if (pts.size() < 8)
    throw ValidationError("fit_asymptotics: need at least 8 usable samples, have " +
                          std::to_string(pts.size()));
  double umin = pts.front().first, umax = pts.front().first;
  for (auto& [u, y] : pts) {
    umin = std::min(umin, u);
    umax = std::max(umax, u);
  }
  if (umax <= umin)
    throw ValidationError("fit_asymptotics: samples do not span an x range");

  double su = 0, sy = 0, suu = 0, suy = 0;
  const double n = static_cast<double>(pts.size());
  for (auto& [u, y] : pts) {
    su += u;
    sy += y;
    suu += u * u;
    suy += u * y;
  }
  double slope = (n * suy - su * sy) / (n * suu - su * su);
  double intercept = (sy - slope * su) / n;
  double rss = 0;
  for (auto& [u, y] : pts) {
    double r = y - (slope * u + intercept);
    rss += r * r;
  }
  FitResult fit;
  fit.model = model;
  fit.sample_count = pts.size();
  fit.residual_rms = std::sqrt(rss / n);
  if (model == FitModel::power) {
    fit.beta = slope;
    fit.alpha = std::exp(intercept);
  } else {
    fit.alpha = slope;
    fit.gamma = intercept;
  }
  return fit;
}

SemidirectSplit preset_split(const std::string& preset_name) {
  SemidirectSplit s;
  if (preset_name == "free_abelian_2") {
    s.description = "Z x Z with N the first axis and the section the second axis";
    s.decompose = [](const IntMatrix& g) {
      IntMatrix n = heisenberg_entry(0, g.at(0, 2), 0);
      IntMatrix h = heisenberg_entry(0, 0, g.at(1, 2));
      return std::make_pair(n, h);
    };
    s.quotient_length = [](const IntMatrix& h) {
      return static_cast<std::uint32_t>(std::llabs(h.at(1, 2)));
    };
  } else if (preset_name == "heisenberg_Z") {
    s.description = "N = center, section (a,c) -> E12(a) E23(c), quotient Z^2";
    s.decompose = [](const IntMatrix& g) {
      std::int64_t a = g.at(0, 1), b = g.at(0, 2), c = g.at(1, 2);
      IntMatrix h = heisenberg_entry(a, a * c, c);  // E12(a) E23(c)
      IntMatrix n = heisenberg_entry(0, b - a * c, 0);
      return std::make_pair(n, h);
    };
    s.quotient_length = [](const IntMatrix& h) {
      return static_cast<std::uint32_t>(std::llabs(h.at(0, 1)) + std::llabs(h.at(1, 2)));
    };
  } else if (preset_name == "sol_lattice") {
    s.description = "N = Z^2 translations, section = powers of the A generator";
    s.decompose = [](const IntMatrix& g) {
      IntMatrix n = sol_element(g.at(0, 2), g.at(1, 2), 0);
      IntMatrix h = g;
      h.at(0, 2) = 0;
      h.at(1, 2) = 0;
      return std::make_pair(n, h);
    };
    s.quotient_length = [](const IntMatrix& h) {
      // The quotient is Z; recover |k| by matching the 2x2 block against
      // powers of A in both directions.
      auto block_is = [&](const IntMatrix& m) {
        return h.at(0, 0) == m.at(0, 0) && h.at(0, 1) == m.at(0, 1) &&
               h.at(1, 0) == m.at(1, 0) && h.at(1, 1) == m.at(1, 1);
      };
      for (std::int64_t k = 0; k <= 128; ++k) {
        if (block_is(sol_element(0, 0, k)) || block_is(sol_element(0, 0, -k)))
          return static_cast<std::uint32_t>(k);
      }
      throw InternalError("sol quotient length: block is not a power of A");
    };
  } else {
    throw InputError("no declared split for preset '" + preset_name + "'");
  }
  return s;
}

AdditivityReport check_semidirect_additivity(const MatrixGroupPresentation& p,
                                             const SemidirectSplit& split,
                                             const BallTable& table) {
  AdditivityReport rep;
  double worst_up = 1.0, worst_down = 1.0;
  std::int64_t max_gap = 0;
  for (const auto& [g, len] : table.lengths) {
    auto [n, h] = split.decompose(g);
    IntMatrix recombined = n * h;
    if (!(recombined == g))
      throw ValidationError("additivity: split classifier is inconsistent (n*h != g)");
    auto ln = table.length_of(n);
    if (!ln) {
      ++rep.pairs_skipped;
      continue;
    }
    std::uint32_t lh = split.quotient_length(h);
    double sum = static_cast<double>(*ln) + static_cast<double>(lh);
    double whole = static_cast<double>(len);
    worst_up = std::max(worst_up, whole / std::max(1.0, sum));
    worst_down = std::max(worst_down, sum / std::max(1.0, whole));
    max_gap = std::max<std::int64_t>(
        max_gap, std::llabs(static_cast<std::int64_t>(len) -
                            static_cast<std::int64_t>(*ln) - static_cast<std::int64_t>(lh)));
    ++rep.pairs_checked;
  }
  rep.c_upper = worst_up;
  rep.c_lower = worst_down;
  rep.c = std::max(worst_up, worst_down);
  rep.max_additive_gap = max_gap;
  // Residual slack once the multiplicative constant is applied.
  double d = 0;
  for (const auto& [g, len] : table.lengths) {
    auto [n, h] = split.decompose(g);
    auto ln = table.length_of(n);
    if (!ln) continue;
    double sum = static_cast<double>(*ln) + static_cast<double>(split.quotient_length(h));
    double whole = static_cast<double>(len);
    d = std::max(d, whole - rep.c * sum);
    d = std::max(d, sum / rep.c - whole);
  }
  rep.d = std::max(0.0, d);
  return rep;
}

std::string lattice_analogue_caveat() {
  return "word metrics are computed on discrete cocompact lattice analogues of "
         "the continuous groups; finite balls exhibit the asymptotic shape "
         "only, and constants are reported, not asserted";
}

}  // namespace oexp
