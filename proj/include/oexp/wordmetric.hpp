#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <unordered_map>
#include <vector>

namespace oexp {

// Square integer matrix, row-major; the exact element representation used as
// the canonical key (no hashing collisions possible).
struct IntMatrix {
  std::size_t n = 0;
  std::vector<std::int64_t> a;

  static IntMatrix identity(std::size_t n);
  std::int64_t at(std::size_t r, std::size_t c) const { return a[r * n + c]; }
  std::int64_t& at(std::size_t r, std::size_t c) { return a[r * n + c]; }
  friend IntMatrix operator*(const IntMatrix& x, const IntMatrix& y);
  friend bool operator==(const IntMatrix& x, const IntMatrix& y) {
    return x.n == y.n && x.a == y.a;
  }
  friend bool operator<(const IntMatrix& x, const IntMatrix& y) {
    if (x.n != y.n) return x.n < y.n;
    return x.a < y.a;
  }
  std::string key() const;  // entries space-separated, row-major
};

struct IntMatrixHash {
  std::size_t operator()(const IntMatrix& m) const;
};

// Finitely generated integer matrix group: generators closed under inversion,
// each of determinant +-1.
struct MatrixGroupPresentation {
  std::string name;
  std::size_t matrix_size = 0;
  std::vector<IntMatrix> generators;
};

// Built-in presets: heisenberg_Z (discrete Heisenberg), sol_lattice
// (Z^2 ⋊_A Z with A = [[2,1],[1,1]] as 3x3 matrices), free_abelian_2.
MatrixGroupPresentation preset(const std::string& name);
std::vector<std::string> preset_names();

// Exact word lengths out to a BFS radius. When the state budget is hit the
// search stops cleanly and the table is valid up to completed_radius.
struct BallTable {
  std::string preset_name;
  std::size_t requested_radius = 0;
  std::size_t completed_radius = 0;
  bool budget_exhausted = false;
  std::unordered_map<IntMatrix, std::uint32_t, IntMatrixHash> lengths;
  std::vector<std::size_t> sphere_sizes;  // sphere_sizes[r] = #elements at length r

  std::optional<std::uint32_t> length_of(const IntMatrix& m) const;
  // Line-oriented export "matrix-key TAB length", sorted by (length, key);
  // byte-identical across runs and worker counts.
  void write_text(std::ostream& os) const;
};

// Level-synchronous breadth-first search from the identity; `workers` splits
// each frontier, and the resulting table is byte-identical to the sequential
// run for any worker count.
BallTable bfs_ball(const MatrixGroupPresentation& p, std::size_t radius,
                   std::size_t max_states = 5000000, unsigned workers = 1);

struct Sample {
  double x = 0;
  double length = 0;
  std::int64_t param = 0;  // the family parameter n
};

struct SampleSet {
  std::vector<Sample> samples;
  std::vector<std::int64_t> missing;  // family parameters not present in the table
};

// Element families probed against a ball table. x is family-specific: n for
// central powers, max-norm of the translation vector for subgroup elements.
enum class Family { center_power, subgroup_vector, axis_power };

SampleSet sample_lengths(const BallTable& table, const MatrixGroupPresentation& p,
                         Family family, const std::vector<std::int64_t>& n_values);

// All tabled pure-translation subgroup elements (v, 0) of sol_lattice, with
// x = max-norm of v; used for the distortion fit over the whole ball.
SampleSet subgroup_samples_all(const BallTable& table);

enum class FitModel { power, log };

struct FitResult {
  FitModel model = FitModel::power;
  // power: length ~ alpha * x^beta; log: length ~ alpha * log(1+x) + gamma.
  double alpha = 0, beta = 0, gamma = 0;
  double residual_rms = 0;  // in the model's linearizing coordinates
  std::size_t sample_count = 0;
};

// Least squares in the model's linearizing coordinates. Requires >= 8 usable
// samples spanning more than one x value.
FitResult fit_asymptotics(const SampleSet& samples, FitModel model);

// Declared normal/quotient split of a preset for the additivity check:
// classify(g) = (n, h) with n in N and h in the chosen section, plus the
// intrinsic word length of the quotient part.
struct SemidirectSplit {
  std::string description;
  std::function<std::pair<IntMatrix, IntMatrix>(const IntMatrix&)> decompose;
  std::function<std::uint32_t(const IntMatrix&)> quotient_length;
};

SemidirectSplit preset_split(const std::string& preset_name);

struct AdditivityReport {
  std::size_t pairs_checked = 0;
  std::size_t pairs_skipped = 0;  // normal part not in the table
  double c_upper = 1;  // max ell(nh) / max(1, ell(n)+ell1(h))
  double c_lower = 1;  // max (ell(n)+ell1(h)) / max(1, ell(nh))
  double c = 1;        // max of the two
  double d = 0;        // residual additive slack at the reported c
  std::int64_t max_additive_gap = 0;  // max |ell(nh) - ell(n) - ell1(h)|
};

AdditivityReport check_semidirect_additivity(const MatrixGroupPresentation& p,
                                             const SemidirectSplit& split,
                                             const BallTable& table);

// Caveat attached to every word-metric report: the continuous groups are
// replaced by cocompact lattice analogues, so only asymptotic shape is
// checked and constants are reported, not asserted.
std::string lattice_analogue_caveat();

}  // namespace oexp
