#pragma once

#include "mre/complex_matrix.hpp"
#include "mre/random.hpp"
#include "mre/states.hpp"

#include <cmath>
#include <cstddef>
#include <vector>

namespace mre::testing {

inline const double kInvSqrt2 = 1.0 / std::sqrt(2.0);

// ---- independent oracles (kept free of the library's index machinery) ----

// Entrywise Kronecker product straight from the index formula.
inline ComplexMatrix kron_oracle(const ComplexMatrix& a, const ComplexMatrix& b) {
  const std::size_t da = a.dim(), db = b.dim();
  ComplexMatrix out(da * db);
  for (std::size_t i = 0; i < da; ++i)
    for (std::size_t j = 0; j < da; ++j)
      for (std::size_t k = 0; k < db; ++k)
        for (std::size_t l = 0; l < db; ++l) out(i * db + k, j * db + l) = a(i, j) * b(k, l);
  return out;
}

// Partial trace by explicit summation over the traced indices. Assembles
// every global index bit by bit, independently of the library routine.
inline ComplexMatrix partial_trace_oracle(const ComplexMatrix& m, int n,
                                          const std::vector<int>& keep) {
  std::vector<int> traced;
  for (int q = 0; q < n; ++q) {
    bool is_kept = false;
    for (int k : keep) is_kept |= (k == q);
    if (!is_kept) traced.push_back(q);
  }
  const std::size_t dk = std::size_t{1} << keep.size();
  const std::size_t dt = std::size_t{1} << traced.size();
  ComplexMatrix out(dk);
  for (std::size_t r = 0; r < dk; ++r)
    for (std::size_t c = 0; c < dk; ++c)
      for (std::size_t s = 0; s < dt; ++s) {
        std::size_t row = 0, col = 0;
        for (std::size_t k = 0; k < keep.size(); ++k) {
          row |= ((r >> (keep.size() - 1 - k)) & 1u) << (n - 1 - keep[k]);
          col |= ((c >> (keep.size() - 1 - k)) & 1u) << (n - 1 - keep[k]);
        }
        for (std::size_t k = 0; k < traced.size(); ++k) {
          const std::size_t bit = (s >> (traced.size() - 1 - k)) & 1u;
          row |= bit << (n - 1 - traced[k]);
          col |= bit << (n - 1 - traced[k]);
        }
        out(r, c) += m(row, col);
      }
  return out;
}

// Conjugates a matrix by a qubit relabeling (qubit k -> new_position[k]).
inline ComplexMatrix permute_matrix_qubits(const ComplexMatrix& m, int n,
                                           const std::vector<int>& new_position) {
  auto relabel = [&](std::size_t idx) {
    std::size_t out = 0;
    for (int q = 0; q < n; ++q) out |= ((idx >> (n - 1 - q)) & 1u) << (n - 1 - new_position[q]);
    return out;
  };
  ComplexMatrix out(m.dim());
  for (std::size_t i = 0; i < m.dim(); ++i)
    for (std::size_t j = 0; j < m.dim(); ++j) out(relabel(i), relabel(j)) = m(i, j);
  return out;
}

// ---- state builders ----

inline StateVector basis_state(int n, std::size_t index) {
  std::vector<Complex> amps(std::size_t{1} << n, Complex{});
  amps[index] = 1.0;
  return StateVector(n, std::move(amps));
}

inline StateVector two_term_state(int n, std::size_t i, std::size_t j, Complex ci, Complex cj) {
  std::vector<Complex> amps(std::size_t{1} << n, Complex{});
  amps[i] = ci;
  amps[j] = cj;
  return StateVector::normalized(n, std::move(amps));
}

inline StateVector ghz3() { return two_term_state(3, 0, 7, 1.0, 1.0); }

inline StateVector ghz_cat(std::size_t half, double sign) {
  return two_term_state(3, half, 7 - half, 1.0, sign);
}

// bell 0..3 = Phi+, Phi-, Psi+, Psi-
inline StateVector bell_state(int bell) {
  const std::size_t i = bell < 2 ? 0 : 1;
  const std::size_t j = bell < 2 ? 3 : 2;
  return two_term_state(2, i, j, 1.0, bell % 2 == 0 ? 1.0 : -1.0);
}

// Bell pair at qubit slots (s, t) of three qubits, spectator state chi at the
// remaining slot.
inline StateVector extended_bell(int s, int t, int bell, const std::vector<Complex>& chi) {
  const int m = 3 - s - t;
  const int pair_bits[2] = {bell < 2 ? 0b00 : 0b01, bell < 2 ? 0b11 : 0b10};
  const double signs[2] = {1.0, bell % 2 == 0 ? 1.0 : -1.0};
  std::vector<Complex> amps(8, Complex{});
  for (int which = 0; which < 2; ++which) {
    for (std::size_t cm = 0; cm < 2; ++cm) {
      std::size_t idx = 0;
      idx |= static_cast<std::size_t>((pair_bits[which] >> 1) & 1) << (2 - s);
      idx |= static_cast<std::size_t>(pair_bits[which] & 1) << (2 - t);
      idx |= cm << (2 - m);
      amps[idx] += signs[which] * kInvSqrt2 * chi[cm];
    }
  }
  return StateVector::normalized(3, std::move(amps));
}

// family 0..3: weight on |000>,|001>,|010>,|011> paired with the complement.
inline StateVector ghz_like(int family, double weight) {
  std::vector<Complex> amps(8, Complex{});
  amps[family] = std::sqrt(weight);
  amps[7 - family] = std::sqrt(1.0 - weight);
  return StateVector::normalized(3, std::move(amps));
}

inline StateVector w_state() {
  std::vector<Complex> amps(8, Complex{});
  amps[1] = amps[2] = amps[4] = 1.0;
  return StateVector::normalized(3, std::move(amps));
}

inline std::vector<Complex> random_qubit(Rng& rng) {
  std::vector<Complex> chi{rng.complex_gaussian(), rng.complex_gaussian()};
  const double nrm = std::sqrt(std::norm(chi[0]) + std::norm(chi[1]));
  chi[0] /= nrm;
  chi[1] /= nrm;
  return chi;
}

// Random single-qubit unitary via Gram-Schmidt of a Gaussian 2x2.
inline ComplexMatrix random_local_unitary(Rng& rng) { return random_unitary(2, rng); }

}  // namespace mre::testing
