#ifndef FOURBOX_COMMANDS_HPP
#define FOURBOX_COMMANDS_HPP

// Analyses behind the command-line subcommands. Each returns its output as text
// so it can be written to a file or checked directly.

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "fourbox/largebox.hpp"
#include "fourbox/perturb.hpp"
#include "fourbox/ritz.hpp"
#include "fourbox/symgroup.hpp"
#include "fourbox/vartrial.hpp"

namespace fourbox {

class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class Spacing { Linear, Geometric };

struct LambdaGrid {
  double start = 0.0;
  double stop = 1.0;
  int count = 51;
  Spacing spacing = Spacing::Linear;

  /// Throws ConfigError unless the grid is nonnegative and strictly ascending.
  std::vector<double> values() const;
};

/// m a^2 k / hbar^2; throws std::domain_error on nonpositive input.
double lambda_from_physical(double mass, double half_length, double spring, double hbar);

// decompose

/// Columns: multiset, count, E0_over_pi2, decomposition, labels, reference_check.
std::string decompose_csv(int shell_cutoff);

// pt

/// Columns: label, irrep, e0, e1, then E@<lambda> per grid point.
std::string pt_csv(int shell_cutoff, const LambdaGrid& grid);

// ritz

struct RitzConfig {
  std::vector<Irrep> irreps{Irrep::A1g, Irrep::T2g};
  std::vector<int> shells{4, 10, 12};
  LambdaGrid grid{0.0, 1.0, 51, Spacing::Linear};
};

std::vector<EnergyCurve> run_ritz(const RitzConfig& config);

/// Columns: irrep, level, label, lambda, E.
std::string ritz_csv(const std::vector<EnergyCurve>& curves);

/// Curves with first-order lines for the matching levels.
std::string ritz_svg(const std::vector<EnergyCurve>& curves);

/// Only the curves from different irreps that share an energy at lambda = 0;
/// empty when there are none.
std::string ritz_zoom_svg(const std::vector<EnergyCurve>& curves);

// var

struct VarConfig {
  LambdaGrid grid{0.0, 10.0, 21, Spacing::Linear};
  bool compare_pt = true;
  double crossover_stop = 10.0;
};

struct VarRow {
  std::string label;
  Irrep irrep = Irrep::A1g;
  double lambda = 0.0;
  double a_star = 0.0;
  double e_var = 0.0;
  double e_pt = 0.0;
};

struct VarRun {
  std::vector<VarRow> rows;
  /// label -> crossover over (0, crossover_stop]
  std::vector<std::pair<std::string, Crossover>> crossovers;
};

/// The three trial levels 1A1g, 1A1u, 1T2u with their first-order partners.
std::vector<std::pair<TrialSpec, PTLevel>> trial_levels();

VarRun run_var(const VarConfig& config);

/// Columns: label, irrep, lambda, a_star, E_var, E_PT, lambda_c.
std::string var_csv(const VarRun& run, bool compare_pt);
std::string var_svg(const VarRun& run, bool compare_pt);

// limit

struct LimitConfig {
  LambdaGrid tail{1e4, 1e6, 3, Spacing::Geometric};
  int max_quanta = 2;
};

/// Smallest oscillator shell N whose free-factor product contains irrep s.
int lowest_quanta(Irrep s, FreeFactor* free_factor = nullptr);

std::string limit_report(const LimitConfig& config);

}  // namespace fourbox

#endif  // FOURBOX_COMMANDS_HPP
