#include <exception>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "fourbox/commands.hpp"
#include "fourbox/report.hpp"

namespace {

using namespace fourbox;

enum ExitCode { kOk = 0, kFailure = 1, kConfig = 2, kEmptyBasis = 3, kBracket = 4, kShortTail = 5 };

void emit(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream os(path, std::ios::binary);
  if (!os) throw ConfigError("cannot open " + path + " for writing");
  os << text;
  if (!os) throw ConfigError("failed writing " + path);
}

std::string zoom_path(const std::string& plot) {
  std::filesystem::path p(plot);
  return (p.parent_path() / (p.stem().string() + "_zoom" + p.extension().string())).string();
}

const std::map<std::string, Spacing> kSpacings{{"linear", Spacing::Linear}, {"geometric", Spacing::Geometric}};

std::vector<std::string> irrep_names() {
  std::vector<std::string> out;
  for (Irrep s : kAllIrreps) out.emplace_back(name(s));
  return out;
}

void add_grid(CLI::App* sub, LambdaGrid& grid) {
  sub->add_option("--lambda-start", grid.start, "first lambda")->capture_default_str();
  sub->add_option("--lambda-stop", grid.stop, "last lambda")->capture_default_str();
  sub->add_option("--count", grid.count, "number of lambda points")->capture_default_str();
  sub->add_option("--spacing", grid.spacing, "linear or geometric")
      ->transform(CLI::CheckedTransformer(kSpacings, CLI::ignore_case));
}

void add_common(CLI::App* sub, std::string& out, std::string& config) {
  sub->add_option("--out", out, "output path (stdout when omitted)");
  sub->add_option("--config", config, "flat key=value file; command-line flags take precedence")
      ->check(CLI::ExistingFile);
}

// Fills options that were not given on the command line from a flat
// key=value file, keys being long option names without the dashes.
void apply_config(CLI::App* sub, const std::string& path) {
  for (const CLI::ConfigItem& item : CLI::ConfigINI().from_file(path)) {
    const std::string key = item.fullname();
    if (key == "config") throw ConfigError("config files cannot nest");
    CLI::Option* opt = sub->get_option_no_throw("--" + key);
    if (opt == nullptr) throw ConfigError("unknown key '" + key + "' for " + sub->get_name());
    if (opt->count() > 0) continue;
    try {
      opt->add_result(item.inputs);
      opt->run_callback();
    } catch (const CLI::Error& e) {
      throw ConfigError(key + ": " + e.what());
    }
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Four particles in a box: symmetry, perturbation and variational analyses"};
  app.require_subcommand(1);

  std::string out;
  std::string plot;
  std::string config;

  int decompose_cutoff = 22;
  auto* decompose = app.add_subcommand("decompose", "irrep content of every multiplet up to a shell cutoff");
  decompose->add_option("--shell-cutoff", decompose_cutoff, "largest n1^2+n2^2+n3^2+n4^2")->capture_default_str();
  add_common(decompose, out, config);

  int pt_cutoff = 18;
  LambdaGrid pt_grid{0.0, 1.0, 11, Spacing::Linear};
  auto* pt = app.add_subcommand("pt", "first-order degenerate perturbation theory");
  pt->add_option("--shell-cutoff", pt_cutoff, "largest n1^2+n2^2+n3^2+n4^2")->capture_default_str();
  add_grid(pt, pt_grid);
  add_common(pt, out, config);

  RitzConfig ritz_config;
  auto* ritz = app.add_subcommand("ritz", "Rayleigh-Ritz energies in symmetry-adapted blocks");
  std::vector<std::string> irreps{"A1g", "T2g"};
  ritz->add_option("--irrep", irreps, "irrep block (repeatable)")->check(CLI::IsMember(irrep_names()));
  ritz->add_option("--shells", ritz_config.shells, "comma-separated shells")->delimiter(',');
  add_grid(ritz, ritz_config.grid);
  ritz->add_option("--plot", plot, "SVG path; a zoomed panel goes next to it");
  add_common(ritz, out, config);

  VarConfig var_config;
  bool no_pt = false;
  auto* var = app.add_subcommand("var", "one-parameter variational estimates of 1A1g, 1A1u and 1T2u");
  add_grid(var, var_config.grid);
  var->add_flag("--no-compare-pt", no_pt, "skip the first-order comparison and crossover search");
  var->add_option("--crossover-stop", var_config.crossover_stop, "upper end of the crossover scan")
      ->capture_default_str();
  var->add_option("--plot", plot, "SVG path");
  add_common(var, out, config);

  LimitConfig limit_config;
  auto* limit = app.add_subcommand("limit", "large-box scaled limits and symmetry");
  add_grid(limit, limit_config.tail);
  limit->add_option("--max-quanta", limit_config.max_quanta, "largest oscillator shell listed")
      ->capture_default_str();
  add_common(limit, out, config);

  double mass = 0.0, half_length = 0.0, spring = 0.0, hbar = 1.0;
  auto* lambda = app.add_subcommand("lambda", "dimensionless coupling m a^2 k / hbar^2");
  lambda->add_option("--mass", mass);
  lambda->add_option("--half-length", half_length);
  lambda->add_option("--spring", spring);
  lambda->add_option("--hbar", hbar)->capture_default_str();
  lambda->add_option("--config", config, "flat key=value file")->check(CLI::ExistingFile);

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kConfig;
  }

  try {
    for (CLI::App* sub : app.get_subcommands())
      if (!config.empty()) apply_config(sub, config);

    if (*decompose) {
      emit(out, decompose_csv(decompose_cutoff));
    } else if (*pt) {
      emit(out, pt_csv(pt_cutoff, pt_grid));
    } else if (*ritz) {
      ritz_config.irreps.clear();
      for (const std::string& text : irreps) ritz_config.irreps.push_back(*parse_irrep(text));
      const auto curves = run_ritz(ritz_config);
      emit(out, ritz_csv(curves));
      if (!plot.empty()) {
        emit(plot, ritz_svg(curves));
        const std::string zoom = ritz_zoom_svg(curves);
        if (!zoom.empty()) emit(zoom_path(plot), zoom);
      }
    } else if (*var) {
      var_config.compare_pt = !no_pt;
      const VarRun run = run_var(var_config);
      emit(out, var_csv(run, var_config.compare_pt));
      if (!plot.empty()) emit(plot, var_svg(run, var_config.compare_pt));
    } else if (*limit) {
      emit(out, limit_report(limit_config));
    } else if (*lambda) {
      std::cout << format_double(lambda_from_physical(mass, half_length, spring, hbar)) << '\n';
    }
  } catch (const EmptyBasis& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kEmptyBasis;
  } catch (const BracketFailure& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kBracket;
  } catch (const InsufficientTail& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kShortTail;
  } catch (const ConfigError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kConfig;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kConfig;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kConfig;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kFailure;
  }
  return kOk;
}
