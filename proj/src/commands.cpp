#include "fourbox/commands.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>
#include <set>
#include <sstream>

#include "fourbox/largebox.hpp"
#include "fourbox/reference_table.hpp"
#include "fourbox/report.hpp"

namespace fourbox {

namespace {

std::string multiset_text(const std::array<int, 4>& m) {
  return "{" + std::to_string(m[0]) + "," + std::to_string(m[1]) + "," + std::to_string(m[2]) + "," +
         std::to_string(m[3]) + "}";
}

// shell / 4 as a reduced fraction
std::string quarter_text(int shell) {
  const Rational r(shell, 4);
  if (r.denominator() == 1) return std::to_string(r.numerator());
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

std::string curve_label(const EnergyCurve& c) { return std::to_string(c.level_index) + std::string(name(c.irrep)); }

}  // namespace

std::vector<double> LambdaGrid::values() const {
  if (count < 1) throw ConfigError("lambda grid needs at least one point");
  if (!std::isfinite(start) || !std::isfinite(stop)) throw ConfigError("lambda grid bounds must be finite");
  if (start < 0.0) throw ConfigError("lambda values must be nonnegative");
  if (count == 1) return {start};
  if (!(stop > start)) throw ConfigError("lambda grid must be strictly ascending");
  if (spacing == Spacing::Geometric && !(start > 0.0)) throw ConfigError("geometric spacing needs a positive start");
  std::vector<double> out(static_cast<std::size_t>(count));
  for (int i = 0; i < count; ++i) {
    const double t = static_cast<double>(i) / (count - 1);
    out[static_cast<std::size_t>(i)] =
        spacing == Spacing::Linear ? start + (stop - start) * t : start * std::pow(stop / start, t);
  }
  out.back() = stop;
  return out;
}

double lambda_from_physical(double mass, double half_length, double spring, double hbar) {
  if (!(mass > 0.0) || !(half_length > 0.0) || !(spring > 0.0) || !(hbar > 0.0))
    throw std::domain_error("physical parameters must be positive");
  return mass * half_length * half_length * spring / (hbar * hbar);
}

std::string decompose_csv(int shell_cutoff) {
  if (shell_cutoff < 4) throw ConfigError("shell cutoff must be at least 4");
  const auto levels = first_order_spectrum(shell_cutoff);
  std::ostringstream os;
  os << "multiset,count,E0_over_pi2,decomposition,labels,reference_check\n";
  for (const DegenerateMultiplet& m : enumerate_multiplets(shell_cutoff)) {
    const auto multisets = multisets_of(m);
    std::string labels;
    if (multisets.size() == 1) {
      for (const PTLevel& level : levels) {
        if (level.shell != m.shell) continue;
        for (int k = 0; k < level.multiplicity; ++k) {
          if (!labels.empty()) labels += ' ';
          labels += std::to_string(level.sequence_index + k) + std::string(name(level.irrep));
        }
      }
    }
    for (const auto& multiset : multisets) {
      const MultisetCheck check = check_multiset(multiset);
      std::string verdict = "not tabulated";
      if (check.reference) {
        verdict = "match";
        if (check.flagged()) {
          verdict = "DISCREPANCY: ";
          for (std::size_t i = 0; i < check.discrepancies.size(); ++i)
            verdict += (i ? "; " : "") + check.discrepancies[i];
        }
      }
      os << csv_field(multiset_text(check.multiset)) << ',' << check.computed_count << ','
         << quarter_text(check.shell) << ',' << csv_field(to_string(check.computed)) << ',' << csv_field(labels)
         << ',' << csv_field(verdict) << '\n';
    }
  }
  return os.str();
}

std::string pt_csv(int shell_cutoff, const LambdaGrid& grid) {
  if (shell_cutoff < 4) throw ConfigError("shell cutoff must be at least 4");
  const std::vector<double> lambdas = grid.values();
  std::ostringstream os;
  os << "label,irrep,e0,e1";
  for (double lambda : lambdas) os << ",E@" << format_double(lambda);
  os << '\n';
  for (const PTLevel& level : first_order_spectrum(shell_cutoff)) {
    os << level.label() << ',' << name(level.irrep) << ',' << format_double(level.e0) << ','
       << format_significant(level.e1, 12);
    for (double lambda : lambdas) os << ',' << format_double(pt_energy(level, lambda));
    os << '\n';
  }
  return os.str();
}

std::vector<EnergyCurve> run_ritz(const RitzConfig& config) {
  if (config.irreps.empty()) throw ConfigError("no irreps selected");
  if (config.shells.empty()) throw ConfigError("no shells selected");
  for (int shell : config.shells) {
    if (shell < 4) throw ConfigError("shells start at 4");
    if (multiplet_for_shell(shell).members.empty())
      throw ConfigError("no product state has shell " + std::to_string(shell));
  }
  const std::vector<double> lambdas = config.grid.values();
  std::vector<EnergyCurve> out;
  for (Irrep s : config.irreps) {
    const SymmetrizedBasis basis = build_symmetrized_basis(s, config.shells);
    auto curves = sweep(basis, lambdas);
    out.insert(out.end(), curves.begin(), curves.end());
  }
  return out;
}

std::string ritz_csv(const std::vector<EnergyCurve>& curves) {
  std::ostringstream os;
  os << "irrep,level,label,lambda,E\n";
  for (const EnergyCurve& c : curves)
    for (const auto& [lambda, e] : c.samples)
      os << name(c.irrep) << ',' << c.level_index << ',' << curve_label(c) << ',' << format_double(lambda) << ','
         << format_double(e) << '\n';
  return os.str();
}

std::string ritz_svg(const std::vector<EnergyCurve>& curves) {
  int max_shell = 4;
  for (const EnergyCurve& c : curves)
    if (!c.samples.empty())
      max_shell = std::max(max_shell, static_cast<int>(std::lround(c.samples.front().second * 4.0 /
                                                                   (std::numbers::pi * std::numbers::pi))));
  const auto levels = first_order_spectrum(max_shell);
  std::vector<PlotSeries> series;
  for (const EnergyCurve& c : curves) series.push_back({"RR " + curve_label(c), c.samples, false});
  for (const EnergyCurve& c : curves) {
    for (const PTLevel& level : levels) {
      if (level.label() != curve_label(c)) continue;
      PlotSeries pt{"PT " + level.label(), {}, true};
      for (const auto& sample : c.samples) pt.points.emplace_back(sample.first, pt_energy(level, sample.first));
      series.push_back(std::move(pt));
    }
  }
  return render_svg(series, {"Rayleigh-Ritz and first-order energies", "lambda", "E", std::nullopt});
}

std::string ritz_zoom_svg(const std::vector<EnergyCurve>& curves) {
  std::vector<const EnergyCurve*> picked;
  for (const EnergyCurve& a : curves) {
    if (a.samples.empty()) continue;
    for (const EnergyCurve& b : curves) {
      if (&a == &b || b.samples.empty() || a.irrep == b.irrep) continue;
      if (a.samples.front().first == 0.0 && b.samples.front().first == 0.0 &&
          std::abs(a.samples.front().second - b.samples.front().second) < 1e-9) {
        picked.push_back(&a);
        break;
      }
    }
  }
  if (picked.empty()) return {};
  std::vector<PlotSeries> series;
  for (const EnergyCurve* c : picked) series.push_back({"RR " + curve_label(*c), c->samples, false});
  return render_svg(series, {"Splitting of levels degenerate at lambda = 0", "lambda", "E", std::nullopt});
}

std::vector<std::pair<TrialSpec, PTLevel>> trial_levels() {
  const auto levels = first_order_spectrum(7);
  return {{TrialSpec::a1g(), find_level(levels, "1A1g")},
          {TrialSpec::a1u(), find_level(levels, "1A1u")},
          {TrialSpec::t2u(1), find_level(levels, "1T2u")}};
}

VarRun run_var(const VarConfig& config) {
  const std::vector<double> lambdas = config.grid.values();
  if (!(config.crossover_stop > 0.0)) throw ConfigError("crossover range must be positive");
  VarRun run;
  for (const auto& [spec, level] : trial_levels()) {
    for (double lambda : lambdas) {
      const VariationalResult r = minimize(spec, lambda);
      run.rows.push_back({level.label(), spec.irrep, lambda, r.a_star, r.energy, pt_energy(level, lambda)});
    }
    if (config.compare_pt) run.crossovers.emplace_back(level.label(), crossover(spec, level, 0.0, config.crossover_stop));
  }
  return run;
}

std::string var_csv(const VarRun& run, bool compare_pt) {
  std::map<std::string, std::string> lambda_c;
  for (const auto& [label, c] : run.crossovers)
    lambda_c[label] = c.lambda_c ? format_significant(*c.lambda_c, 6) : "";
  std::ostringstream os;
  os << "label,irrep,lambda,a_star,E_var";
  if (compare_pt) os << ",E_PT,lambda_c";
  os << '\n';
  for (const VarRow& r : run.rows) {
    os << r.label << ',' << name(r.irrep) << ',' << format_double(r.lambda) << ',' << format_double(r.a_star) << ','
       << format_double(r.e_var);
    if (compare_pt) os << ',' << format_double(r.e_pt) << ',' << lambda_c[r.label];
    os << '\n';
  }
  return os.str();
}

std::string var_svg(const VarRun& run, bool compare_pt) {
  std::vector<PlotSeries> series;
  std::map<std::string, std::size_t> var_index;
  std::map<std::string, std::size_t> pt_index;
  for (const VarRow& r : run.rows) {
    if (!var_index.count(r.label)) {
      var_index[r.label] = series.size();
      series.push_back({"var " + r.label, {}, true});
    }
    series[var_index[r.label]].points.emplace_back(r.lambda, r.e_var);
  }
  if (compare_pt) {
    for (const VarRow& r : run.rows) {
      if (!pt_index.count(r.label)) {
        pt_index[r.label] = series.size();
        series.push_back({"PT " + r.label, {}, false});
      }
      series[pt_index[r.label]].points.emplace_back(r.lambda, r.e_pt);
    }
  }
  return render_svg(series, {"First-order and variational energies", "lambda", "E", std::nullopt});
}

int lowest_quanta(Irrep s, FreeFactor* free_factor) {
  for (int n = 0; n <= 12; ++n) {
    for (FreeFactor cs : {FreeFactor::Cosine, FreeFactor::Sine}) {
      const Decomposition d = largebox_irrep({0.0, {n, 0, 0}, cs});
      if (d.count(s)) {
        if (free_factor) *free_factor = cs;
        return n;
      }
    }
  }
  throw std::logic_error("irrep not found in low oscillator shells");
}

std::string limit_report(const LimitConfig& config) {
  if (config.max_quanta < 0) throw ConfigError("max quanta must be nonnegative");
  std::vector<double> tail = config.tail.values();
  if (tail.size() < 3) throw InsufficientTail("need at least 3 tail samples, got " + std::to_string(tail.size()));

  std::ostringstream os;
  os << "# oscillator ladder: lim lambda^-1/2 E = 2(2N+3)\n";
  os << "N,ladder,cos,sin\n";
  for (int n = 0; n <= config.max_quanta; ++n) {
    os << n << ',' << format_double(oscillator_ladder(n)) << ','
       << csv_field(to_string(largebox_irrep({0.0, {n, 0, 0}, FreeFactor::Cosine}))) << ','
       << csv_field(to_string(largebox_irrep({0.0, {n, 0, 0}, FreeFactor::Sine}))) << '\n';
  }

  os << "# variational tails\n";
  os << "label,estimate,two_term,indicator,target,verdict\n";
  for (const auto& [spec, level] : trial_levels()) {
    std::vector<std::pair<double, double>> samples;
    for (double lambda : tail) samples.emplace_back(lambda, minimize(spec, lambda).energy);
    const ScaledLimit limit = scaled_limit(samples);
    FreeFactor cs = FreeFactor::Cosine;
    const int n = lowest_quanta(spec.irrep, &cs);
    const double target = oscillator_ladder(n);
    std::string verdict = "consistent";
    if (limit.estimate > target * 1.01)
      verdict = "exceeds " + format_double(target) + ": envelope exp(-a sum q^2) has the wrong large-box width";
    os << level.label() << ',' << format_significant(limit.estimate, 8) << ','
       << format_significant(limit.two_term, 8) << ',' << format_significant(limit.indicator, 3) << ','
       << format_double(target) << ',' << csv_field(verdict) << '\n';
  }
  return os.str();
}

}  // namespace fourbox
