#ifndef FOURBOX_RITZ_HPP
#define FOURBOX_RITZ_HPP

// Rayleigh-Ritz diagonalization in symmetry-adapted blocks of the box basis.

#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include <Eigen/Core>

#include "fourbox/boxbasis.hpp"
#include "fourbox/symgroup.hpp"

namespace fourbox {

class EmptyBasis : public std::runtime_error {
 public:
  explicit EmptyBasis(Irrep s);
  Irrep irrep() const { return irrep_; }

 private:
  Irrep irrep_;
};

/// Orthonormal vectors (columns of `vectors`) over the product states in `states`.
/// Partner functions of multidimensional irreps are separate columns.
struct SymmetrizedBasis {
  Irrep irrep = Irrep::A1g;
  std::vector<ProductState> states;
  Eigen::MatrixXd vectors;
  std::vector<int> source_shells;

  Eigen::Index size() const { return vectors.cols(); }
};

SymmetrizedBasis build_symmetrized_basis(Irrep irrep, std::span<const DegenerateMultiplet> shells);
SymmetrizedBasis build_symmetrized_basis(Irrep irrep, std::span<const int> shells);

/// Kinetic (diagonal) and pair-potential matrices over a list of product states.
Eigen::MatrixXd kinetic_matrix(std::span<const ProductState> states);
Eigen::MatrixXd potential_matrix(std::span<const ProductState> states);

/// C^T (T + lambda V) C for the basis coefficient matrix C.
Eigen::MatrixXd assemble_hamiltonian(const SymmetrizedBasis& basis, double lambda);

/// Ascending eigenvalues of the block, one representative per dim(irrep)-fold cluster.
Eigen::VectorXd block_levels(const SymmetrizedBasis& basis, double lambda);

struct EnergyCurve {
  Irrep irrep = Irrep::A1g;
  int level_index = 0;  // 1-based within the block
  std::vector<std::pair<double, double>> samples;
};

/// Energies along an ascending, nonnegative lambda grid, tracked by sorted index.
std::vector<EnergyCurve> sweep(const SymmetrizedBasis& basis, std::span<const double> lambda_grid);

}  // namespace fourbox

#endif  // FOURBOX_RITZ_HPP
