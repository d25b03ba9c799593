#pragma once

// Internal raw-matrix paths shared by the measure implementations. Public
// entry points validate their DensityMatrix results; these helpers skip the
// wrapper so hot loops (the decomposition optimizer, bulk sweeps) do not pay
// for repeated validation eigendecompositions.

#include "mre/complex_matrix.hpp"
#include "mre/entropy.hpp"
#include "mre/states.hpp"

#include <array>
#include <vector>

namespace mre::detail {

ComplexMatrix reduced_matrix(const StateVector& psi, const std::vector<int>& keep);

struct RawPairBasis {
  double q1 = 0.0;
  double q2 = 0.0;
  double xi = 0.0;
  std::array<double, 3> eta_x{};
  std::array<double, 3> eta_y{};
  ComplexMatrix bx1, bx2, by1, by2;  // 2x2 projectors
};

RawPairBasis raw_pair_basis(const StateVector& psi);

ComplexMatrix relative_density_pair_matrix(const StateVector& psi);
ComplexMatrix mixed_pair_rdm_matrix(const PairDecomposition& decomposition);
ComplexMatrix relative_density_matrix_three(const StateVector& psi);
ComplexMatrix relative_density_matrix_n(const StateVector& psi);

// sum(lambda log2 lambda) over the support of a PSD matrix.
double tr_log_self(const ComplexMatrix& rho);

// S(rho || sigma) given Tr(rho log2 rho) precomputed (0 for pure states).
RelEntropyResult relative_entropy_core(const ComplexMatrix& rho, double tr_rho_log_rho,
                                       const ComplexMatrix& sigma, double support_tol);

}  // namespace mre::detail
