#pragma once

#include "mre/states.hpp"

#include <array>

namespace mre {

// Below this Bloch norm a two-qubit pure state is treated as maximally
// entangled and the basis is taken from a Schmidt decomposition instead of
// the unstable direction xi_X / xi.
inline constexpr double kXiTol = 1e-9;

// Mixing data for the two-qubit relative density matrix
//   R = q1 * basis_x[0] (x) basis_y[0] + q2 * basis_x[1] (x) basis_y[1].
// basis_*[0] is the projector 1/2 (sigma_0 - eta . sigma), basis_*[1] its
// complement; q1 = (1 - xi) / 2.
struct PairBasis {
  double q1 = 0.0;
  double q2 = 0.0;
  double xi = 0.0;                        // common Bloch norm of the reduced states
  std::array<double, 3> eta_x{};          // unit directions (defined for xi = 0 too,
  std::array<double, 3> eta_y{};          // via the Schmidt fallback)
  std::array<DensityMatrix, 2> basis_x;
  std::array<DensityMatrix, 2> basis_y;
};

// Throws "invalid-dimension" unless psi is a two-qubit state.
PairBasis pair_basis(const StateVector& psi);

DensityMatrix relative_density_pair(const StateVector& psi);

// S(|psi><psi| || R(psi)). Finite for every normalized input; an infinite
// result signals a construction bug and raises "support-anomaly".
double mre_pair_pure(const StateVector& psi);

}  // namespace mre
