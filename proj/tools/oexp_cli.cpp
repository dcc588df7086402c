// Command line front end: structural analysis of algebras given by structure
// constants, the built-in example catalog, and the word-metric BFS harness.

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "oexp/analyze.hpp"
#include "oexp/catalog.hpp"
#include "oexp/error.hpp"
#include "oexp/wordmetric.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitValidation = 1;
constexpr int kExitInput = 2;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw oexp::InputError("cannot open file '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_output(const std::string& content, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << content;
    return;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) throw oexp::InputError("cannot write to '" + out_path + "'");
  out << content;
}

int run_analyze(const std::string& path, bool json_out, const std::string& out_path) {
  oexp::ParsedAlgebra parsed = oexp::parse_algebra_file(read_file(path));
  oexp::AnalysisReport report = oexp::analyze(parsed);
  write_output(json_out ? report.json : report.text, out_path);
  if (!report.split_validation_passed) {
    std::cerr << "split validation failed; see report\n";
    return kExitValidation;
  }
  return kExitOk;
}

int run_catalog(const std::string& action, const std::string& name,
                std::optional<std::size_t> param, const std::string& out_path) {
  if (action == "list") {
    std::string out;
    for (const auto& n : oexp::catalog_names())
      out += n + (oexp::catalog_requires_param(n) ? " (parameterized)" : "") + "\n";
    write_output(out, out_path);
    return kExitOk;
  }
  if (action == "show") {
    if (name.empty()) throw oexp::InputError("catalog show needs a name");
    write_output(oexp::render_algebra_file(oexp::catalog_entry(name, param)), out_path);
    return kExitOk;
  }
  throw oexp::InputError("catalog action must be list or show");
}

int run_wordmetric(const std::string& preset_name, std::size_t radius,
                   std::size_t max_states, unsigned workers,
                   const std::string& family, const std::string& fit_model,
                   const std::string& out_path) {
  oexp::MatrixGroupPresentation p = oexp::preset(preset_name);
  oexp::BallTable table = oexp::bfs_ball(p, radius, max_states, workers);

  std::ostringstream report;
  report << "preset: " << p.name << " (" << p.generators.size() << " generators, size "
         << p.matrix_size << ")\n";
  report << "note: " << oexp::lattice_analogue_caveat() << "\n";
  report << "completed radius: " << table.completed_radius
         << (table.budget_exhausted ? " (state budget exhausted)" : "") << "\n";
  report << "ball size: " << table.lengths.size() << "\n";
  report << "sphere sizes:";
  for (std::size_t r = 0; r < table.sphere_sizes.size(); ++r)
    report << " " << table.sphere_sizes[r];
  report << "\n";

  if (!family.empty()) {
    oexp::SampleSet samples;
    if (family == "center") {
      std::vector<std::int64_t> ns;
      for (std::int64_t n = 1; n <= 4096; ++n) ns.push_back(n);
      samples = oexp::sample_lengths(table, p, oexp::Family::center_power, ns);
    } else if (family == "subgroup") {
      if (preset_name == "sol_lattice") {
        samples = oexp::subgroup_samples_all(table);
      } else {
        std::vector<std::int64_t> ns;
        for (std::int64_t n = 1; n <= static_cast<std::int64_t>(radius); ++n) ns.push_back(n);
        samples = oexp::sample_lengths(table, p, oexp::Family::axis_power, ns);
      }
    } else {
      throw oexp::InputError("family must be center or subgroup");
    }
    report << "family " << family << ": " << samples.samples.size() << " samples";
    if (!samples.missing.empty())
      report << " (" << samples.missing.size() << " family members outside the table, skipped)";
    report << "\n";
    if (!fit_model.empty()) {
      oexp::FitModel model;
      if (fit_model == "power") model = oexp::FitModel::power;
      else if (fit_model == "log") model = oexp::FitModel::log;
      else throw oexp::InputError("fit model must be power or log");
      oexp::FitResult fit = oexp::fit_asymptotics(samples, model);
      if (model == oexp::FitModel::power)
        report << "power fit: length ~ " << fit.alpha << " * x^" << fit.beta
               << " (rms residual " << fit.residual_rms << " in log scale, "
               << fit.sample_count << " samples)\n";
      else
        report << "log fit: length ~ " << fit.alpha << " * log(1+x) + " << fit.gamma
               << " (rms residual " << fit.residual_rms << ", " << fit.sample_count
               << " samples)\n";
    }
  }
  std::cout << report.str();
  if (!out_path.empty()) {
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw oexp::InputError("cannot write to '" + out_path + "'");
    table.write_text(out);
    std::cout << "table written to " << out_path << "\n";
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact structural decompositions of complex Lie algebras and "
               "word-metric experiments on lattice analogues"};
  app.require_subcommand(1);

  auto* analyze_cmd = app.add_subcommand("analyze", "analyze an algebra file");
  std::string analyze_path, analyze_out;
  bool analyze_json = false;
  analyze_cmd->add_option("file", analyze_path, "algebra file (JSON)")->required();
  analyze_cmd->add_flag("--json", analyze_json, "emit the structured JSON report");
  analyze_cmd->add_option("--out", analyze_out, "write the report to a file");

  auto* catalog_cmd = app.add_subcommand("catalog", "list or show built-in examples");
  std::string catalog_action, catalog_name, catalog_out;
  std::size_t catalog_param = 0;
  bool has_param = false;
  catalog_cmd->add_option("action", catalog_action, "list | show")->required();
  catalog_cmd->add_option("name", catalog_name, "entry name (for show)");
  catalog_cmd->add_option("--param", catalog_param, "family parameter n")
      ->each([&](const std::string&) { has_param = true; });
  catalog_cmd->add_option("--out", catalog_out, "write to a file");

  auto* wm_cmd = app.add_subcommand("wordmetric", "BFS word lengths on a preset group");
  std::string wm_preset, wm_family, wm_fit, wm_out;
  std::size_t wm_radius = 0, wm_max_states = 5000000;
  unsigned wm_workers = 1;
  wm_cmd->add_option("preset", wm_preset, "heisenberg_Z | sol_lattice | free_abelian_2")
      ->required();
  wm_cmd->add_option("--radius", wm_radius, "BFS radius")->required();
  wm_cmd->add_option("--max-states", wm_max_states, "state budget (default 5e6)");
  wm_cmd->add_option("--workers", wm_workers, "frontier workers (deterministic)");
  wm_cmd->add_option("--family", wm_family, "center | subgroup");
  wm_cmd->add_option("--fit", wm_fit, "power | log");
  wm_cmd->add_option("--out", wm_out, "export the ball table (key TAB length)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    app.exit(e);
    return kExitInput;
  }

  try {
    if (*analyze_cmd) return run_analyze(analyze_path, analyze_json, analyze_out);
    if (*catalog_cmd)
      return run_catalog(catalog_action, catalog_name,
                         has_param ? std::optional<std::size_t>(catalog_param)
                                   : std::nullopt,
                         catalog_out);
    if (*wm_cmd)
      return run_wordmetric(wm_preset, wm_radius, wm_max_states, wm_workers, wm_family,
                            wm_fit, wm_out);
  } catch (const oexp::InputError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kExitInput;
  } catch (const oexp::ValidationError& e) {
    std::cerr << "validation error: " << e.what() << "\n";
    return kExitValidation;
  } catch (const oexp::InternalError& e) {
    std::cerr << "internal validation failure (bug): " << e.what() << "\n";
    return kExitValidation;
  }
  return kExitInput;
}
