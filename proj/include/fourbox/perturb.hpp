#ifndef FOURBOX_PERTURB_HPP
#define FOURBOX_PERTURB_HPP

// Degenerate first-order perturbation theory on box multiplets.

#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Core>

#include "fourbox/boxbasis.hpp"
#include "fourbox/symgroup.hpp"

namespace fourbox {

/// Relative width of an eigenvalue cluster that is labeled jointly.
inline constexpr double kClusterTolerance = 1e-9;

class UnlabeledRoot : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// E(lambda) = e0 + e1 lambda for `multiplicity` copies of `irrep` in one shell.
struct PTLevel {
  int shell = 0;
  double e0 = 0.0;
  double e1 = 0.0;
  Irrep irrep = Irrep::A1g;
  int multiplicity = 1;
  /// k in kA1g; 0 until assigned by first_order_spectrum.
  int sequence_index = 0;

  std::string label() const;
};

/// H'_ij = <member_i| sum_{i<j} (q_i - q_j)^2 |member_j>.
Eigen::MatrixXd secular_matrix(const DegenerateMultiplet& m);

/// Roots of the secular problem labeled by projecting eigenvectors, sorted by e1.
/// Roots within kClusterTolerance are labeled jointly. Throws UnlabeledRoot if
/// a cluster's eigenspace is not a sum of whole irreps.
std::vector<PTLevel> first_order(const DegenerateMultiplet& m);

/// first_order over every multiplet up to the cutoff, with sequence indices
/// assigned by ascending e0, then ascending e1, per irrep name.
std::vector<PTLevel> first_order_spectrum(int shell_cutoff);

inline double pt_energy(const PTLevel& level, double lambda) { return level.e0 + level.e1 * lambda; }

/// Same shell and e1 equal within kClusterTolerance.
bool first_order_degenerate(const PTLevel& a, const PTLevel& b);

/// Finds a level by label such as "3T2u"; throws std::out_of_range if absent.
const PTLevel& find_level(const std::vector<PTLevel>& levels, const std::string& label);

}  // namespace fourbox

#endif  // FOURBOX_PERTURB_HPP
