#include "mre/states.hpp"

#include "mre/eig.hpp"
#include "mre/error.hpp"

#include <bit>
#include <cmath>
#include <string>
#include <utility>

namespace mre {

namespace {

constexpr double kHermTol = 1e-10;
constexpr double kTraceTol = 1e-10;
constexpr double kPsdTol = 1e-10;

void check_qubit_count(int n_qubits, std::size_t size) {
  if (n_qubits < 1 || n_qubits > 62 || size != (std::size_t{1} << n_qubits)) {
    throw Error("invalid-dimension", "amplitude count must be 2^n_qubits");
  }
}

double norm_squared(const std::vector<Complex>& amps) {
  double s = 0.0;
  for (const auto& a : amps) s += std::norm(a);
  return s;
}

}  // namespace

StateVector::StateVector(int n_qubits, std::vector<Complex> amplitudes)
    : n_qubits_(n_qubits), amplitudes_(std::move(amplitudes)) {
  check_qubit_count(n_qubits_, amplitudes_.size());
  const double n2 = norm_squared(amplitudes_);
  if (std::abs(n2 - 1.0) > kStateNormTol) {
    throw Error("not-normalized",
                "squared norm " + std::to_string(n2) + " deviates from 1 beyond tolerance");
  }
}

StateVector StateVector::normalized(int n_qubits, std::vector<Complex> amplitudes) {
  check_qubit_count(n_qubits, amplitudes.size());
  const double n2 = norm_squared(amplitudes);
  if (n2 <= 0.0) throw Error("not-normalized", "cannot normalize the zero vector");
  const double inv = 1.0 / std::sqrt(n2);
  for (auto& a : amplitudes) a *= inv;
  return StateVector(n_qubits, std::move(amplitudes));
}

DensityMatrix::DensityMatrix(ComplexMatrix m) : n_qubits_(std::countr_zero(m.dim())), matrix_(std::move(m)) {
  if (matrix_.dim() < 2) throw Error("invalid-dimension", "density matrix needs at least one qubit");
  const double herm = matrix_.hermiticity_defect();
  if (herm > kHermTol) {
    throw Error("not-hermitian", "hermiticity defect " + std::to_string(herm));
  }
  const Complex tr = matrix_.trace();
  if (std::abs(tr - Complex{1.0, 0.0}) > kTraceTol) {
    throw Error("not-unit-trace", "trace deviates from 1 by " + std::to_string(std::abs(tr - 1.0)));
  }
  const EigenSystem sys = eig_hermitian(matrix_, kHermTol);
  if (sys.eigenvalues.back() < -kPsdTol) {
    throw Error("not-psd", "minimum eigenvalue " + std::to_string(sys.eigenvalues.back()));
  }
}

double PairDecomposition::weight_sum() const {
  double s = 0.0;
  for (const auto& t : terms) s += t.weight;
  return s;
}

ComplexMatrix PairDecomposition::reconstruct() const {
  ComplexMatrix out(4);
  for (const auto& t : terms) out.add_scaled_outer(t.weight, t.pure_state.amplitudes());
  return out;
}

const ComplexMatrix& pauli(int k) {
  static const ComplexMatrix sigma[4] = {
      ComplexMatrix::identity(2),
      ComplexMatrix::from_rows({{0.0, 1.0}, {1.0, 0.0}}),
      ComplexMatrix::from_rows({{0.0, Complex{0.0, -1.0}}, {Complex{0.0, 1.0}, 0.0}}),
      ComplexMatrix::from_rows({{1.0, 0.0}, {0.0, -1.0}}),
  };
  if (k < 0 || k > 3) throw Error("invalid-dimension", "pauli index must be 0..3");
  return sigma[k];
}

DensityMatrix density_from_state(const StateVector& psi) {
  ComplexMatrix m(psi.dim());
  m.add_scaled_outer(1.0, psi.amplitudes());
  return DensityMatrix(std::move(m));
}

std::array<double, 3> bloch_vector(const DensityMatrix& rho) {
  if (rho.dim() != 2) {
    throw Error("invalid-dimension", "bloch_vector expects a single-qubit density matrix");
  }
  const ComplexMatrix& m = rho.matrix();
  return {2.0 * std::real(m(0, 1)), -2.0 * std::imag(m(0, 1)),
          std::real(m(0, 0)) - std::real(m(1, 1))};
}

PairDecomposition pair_conditional_decomposition(const StateVector& psi, int s, int t) {
  const int n = psi.n_qubits();
  if (s == t || s < 0 || t < 0 || s >= n || t >= n) {
    throw Error("invalid-pair", "pair indices must be distinct qubits of the state");
  }
  if (s > t) std::swap(s, t);

  if (n == 2) {
    return PairDecomposition{{{1.0, psi}}};
  }

  std::vector<int> rest;
  for (int q = 0; q < n; ++q)
    if (q != s && q != t) rest.push_back(q);

  const std::size_t blocks = std::size_t{1} << rest.size();
  PairDecomposition decomposition;
  for (std::size_t outcome = 0; outcome < blocks; ++outcome) {
    // Global index with the conditioned qubits fixed to this outcome.
    std::size_t base = 0;
    for (std::size_t k = 0; k < rest.size(); ++k) {
      const std::size_t bit = (outcome >> (rest.size() - 1 - k)) & 1u;
      base |= bit << (n - 1 - rest[k]);
    }
    std::vector<Complex> block(4);
    double weight = 0.0;
    for (std::size_t bs = 0; bs < 2; ++bs)
      for (std::size_t bt = 0; bt < 2; ++bt) {
        const std::size_t idx = base | (bs << (n - 1 - s)) | (bt << (n - 1 - t));
        const Complex amp = psi.amplitude(idx);
        block[bs * 2 + bt] = amp;
        weight += std::norm(amp);
      }
    if (weight <= kWeightDropTol) continue;
    const double inv = 1.0 / std::sqrt(weight);
    for (auto& a : block) a *= inv;
    decomposition.terms.push_back({weight, StateVector(2, std::move(block))});
  }
  return decomposition;
}

DensityMatrix reduced_density(const StateVector& psi, const std::vector<int>& keep) {
  ComplexMatrix full(psi.dim());
  full.add_scaled_outer(1.0, psi.amplitudes());
  return DensityMatrix(partial_trace(full, keep));
}

DensityMatrix reduced_density(const DensityMatrix& rho, const std::vector<int>& keep) {
  return DensityMatrix(partial_trace(rho.matrix(), keep));
}

StateVector permute_qubits(const StateVector& psi, const std::vector<int>& new_position) {
  const int n = psi.n_qubits();
  if (new_position.size() != static_cast<std::size_t>(n)) {
    throw Error("invalid-dimension", "permutation length must equal the qubit count");
  }
  std::vector<bool> seen(n, false);
  for (int p : new_position) {
    if (p < 0 || p >= n || seen[p]) throw Error("invalid-dimension", "not a permutation");
    seen[p] = true;
  }
  std::vector<Complex> out(psi.dim());
  for (std::size_t i = 0; i < psi.dim(); ++i) {
    std::size_t j = 0;
    for (int q = 0; q < n; ++q) {
      const std::size_t bit = (i >> (n - 1 - q)) & 1u;
      j |= bit << (n - 1 - new_position[q]);
    }
    out[j] = psi.amplitude(i);
  }
  return StateVector(n, std::move(out));
}

}  // namespace mre
