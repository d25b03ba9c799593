#pragma once

#include "mre/states.hpp"

#include <cstdint>
#include <random>

namespace mre {

// Deterministic random source. Gaussians come from a hand-rolled Box-Muller
// transform so the stream depends only on the mt19937_64 sequence, not on
// the standard library's distribution internals.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  double uniform();   // [0, 1)
  double gaussian();  // standard normal
  Complex complex_gaussian();

 private:
  std::mt19937_64 engine_;
  bool has_spare_ = false;
  double spare_ = 0.0;
};

// Haar-like random pure state: normalized vector of i.i.d. complex Gaussians.
StateVector random_state(int n_qubits, Rng& rng);

// Tensor product of independent random single-qubit states.
StateVector random_product_state(int n_parties, Rng& rng);

// rho = G G^dagger / Tr(G G^dagger) with G a dim x rank complex Gaussian.
DensityMatrix random_density(int n_qubits, int rank, Rng& rng);

// Gram-Schmidt orthonormalization of a square complex Gaussian matrix.
ComplexMatrix random_unitary(std::size_t dim, Rng& rng);

}  // namespace mre
