#pragma once

#include "mre/multi_rdm.hpp"
#include "mre/random.hpp"
#include "mre/states.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace mre {

// Rectangular matrix with orthonormal columns, row-major. Parameterizes a
// pure-state decomposition of a density matrix: with rho = sum(lambda_j
// |e_j><e_j|) over the support, the unnormalized members are
// |psi_i~> = sum_j W(i,j) sqrt(lambda_j) |e_j> and the weights their norms.
struct Isometry {
  int rows = 0;
  int cols = 0;
  std::vector<Complex> entries;

  static Isometry identity(int n);
  Complex& at(int i, int j) { return entries[static_cast<std::size_t>(i) * cols + j]; }
  const Complex& at(int i, int j) const { return entries[static_cast<std::size_t>(i) * cols + j]; }
  // max entrywise |W^dagger W - I|
  double orthonormality_defect() const;
};

Isometry random_isometry(int rows, int cols, Rng& rng);

struct DecompositionTerm {
  double weight;
  StateVector pure_state;
};

enum class DecompositionSource { spectral, isometry, user };

struct Decomposition {
  std::vector<DecompositionTerm> terms;
  DecompositionSource source = DecompositionSource::user;

  double weight_sum() const;
  ComplexMatrix reconstruct() const;  // sum(weight * |psi><psi|)
};

// Maps an isometry to the decomposition it parameterizes. Zero-weight terms
// are dropped. Throws "not-isometry" when W's columns are not orthonormal or
// do not match the numerical rank of rho.
Decomposition decomposition_from_isometry(const DensityMatrix& rho, const Isometry& w,
                                          double rank_tol = 1e-10);

struct OptimizerConfig {
  // Decomposition sizes tried per restart; when unset the batch is
  // {r, r+1, r*r} for r the numerical rank.
  std::optional<int> term_count;
  int restarts = 32;
  int max_iters = 500;  // plane-rotation line searches per restart
  double step_tolerance = 1e-7;
  double value_tolerance = 1e-9;
  std::uint64_t seed = 0;
};

struct MixedResult {
  double value = 0.0;             // k_n * best relative entropy
  double relative_entropy = 0.0;  // best S(rho || R^M) found
  double spectral_value = 0.0;    // k_n * relative entropy at the spectral decomposition
  Decomposition best;
  int best_restart = -1;
  long long evaluations = 0;
};

// Measure of a mixed state: minimizes S(rho || sum p_i R(psi_i)) over
// explored pure-state decompositions via random isometry restarts refined by
// sequential two-parameter plane rotations with golden-section line search.
// Deterministic for a fixed seed and config; the result never exceeds the
// spectral-decomposition baseline. Supports 2 <= n <= 4.
MixedResult mre_mixed(const DensityMatrix& rho, const OptimizerConfig& config = {},
                      Convention convention = Convention::pairing_count);

}  // namespace mre
