#pragma once

#include "mre/complex_matrix.hpp"

#include <array>
#include <vector>

namespace mre {

inline constexpr double kStateNormTol = 1e-10;
// Conditional blocks lighter than this are dropped instead of normalized.
inline constexpr double kWeightDropTol = 1e-14;

// Pure state of n qubits. amplitudes[i] is the coefficient of the basis state
// whose label is the n-bit binary expansion of i with qubit 0 leftmost, i.e.
// qubit 0 is the most significant bit.
class StateVector {
 public:
  StateVector(int n_qubits, std::vector<Complex> amplitudes);
  // Rescales the amplitudes to unit norm before constructing.
  static StateVector normalized(int n_qubits, std::vector<Complex> amplitudes);

  int n_qubits() const noexcept { return n_qubits_; }
  const std::vector<Complex>& amplitudes() const noexcept { return amplitudes_; }
  Complex amplitude(std::size_t basis_index) const { return amplitudes_[basis_index]; }
  std::size_t dim() const noexcept { return amplitudes_.size(); }

 private:
  int n_qubits_;
  std::vector<Complex> amplitudes_;
};

// Hermitian, positive semidefinite, unit-trace operator on n qubits.
// Construction validates all three properties (tolerance 1e-10 each).
class DensityMatrix {
 public:
  explicit DensityMatrix(ComplexMatrix m);

  int n_qubits() const noexcept { return n_qubits_; }
  const ComplexMatrix& matrix() const noexcept { return matrix_; }
  std::size_t dim() const noexcept { return matrix_.dim(); }

 private:
  int n_qubits_;
  ComplexMatrix matrix_;
};

struct PairDecompositionTerm {
  double weight;          // in (0, 1]
  StateVector pure_state; // two-qubit state
};

// Weighted pure-state decomposition of a reduced two-qubit state.
struct PairDecomposition {
  std::vector<PairDecompositionTerm> terms;

  int term_count() const { return static_cast<int>(terms.size()); }
  double weight_sum() const;
  // Mixture sum(weight * |psi><psi|) as a plain matrix.
  ComplexMatrix reconstruct() const;
};

const ComplexMatrix& pauli(int k);  // k = 0 (identity), 1, 2, 3

DensityMatrix density_from_state(const StateVector& psi);

// Polarized (Bloch) vector xi_k = Tr(rho sigma_k) of a single-qubit state.
// Throws "invalid-dimension" unless dim == 2.
std::array<double, 3> bloch_vector(const DensityMatrix& rho);

// Decomposition of the reduced state of qubits (s, t) obtained by expanding
// the global pure state over computational-basis outcomes of the remaining
// n-2 qubits. Terms are ordered by outcome; blocks of weight <= 1e-14 are
// dropped. For n == 2 the decomposition is the single term (1, psi).
// Throws "invalid-pair" when s == t or either index is out of range.
PairDecomposition pair_conditional_decomposition(const StateVector& psi, int s, int t);

DensityMatrix reduced_density(const StateVector& psi, const std::vector<int>& keep);
DensityMatrix reduced_density(const DensityMatrix& rho, const std::vector<int>& keep);

// Relabels qubits: qubit k of the input becomes qubit new_position[k].
StateVector permute_qubits(const StateVector& psi, const std::vector<int>& new_position);

}  // namespace mre
