#pragma once

#include "mre/pair_rdm.hpp"
#include "mre/states.hpp"

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace mre {

// Counting convention for the combinatorial coefficients of the n-party
// construction. `pairing_count` weighs each set of disjoint pairs once
// (n! / (alpha! 2^alpha (n-2alpha)!) terms per alpha); `printed` keeps the
// factor-2^alpha overcount of ordered pairs. The two agree for n <= 3.
enum class Convention { pairing_count, printed };

const char* to_string(Convention c);

struct Rational {
  long long num = 0;
  long long den = 1;
  double value() const { return static_cast<double>(num) / static_cast<double>(den); }
};

// A set of alpha disjoint qubit pairs plus the unpaired spectators.
// Pairs satisfy s < t and are listed with ascending s.
struct PairingTerm {
  std::vector<std::pair<int, int>> pairs;
  std::vector<int> spectators;
};

// All partial pairings of n qubits, alpha = 1 .. floor(n/2), enumerated in a
// fixed order (alpha ascending, then lexicographic). Throws
// "unsupported-size" outside 2 <= n <= 6.
std::vector<PairingTerm> enumerate_pairings(int n);

// Exact count of partial pairings with a given number of pairs.
long long pairing_count_for_alpha(int n, int alpha);

// Prefactor k_n relating the relative entropy to the reported measure.
// k_2 = 1 and k_3 = 1/2 under both conventions.
Rational kn(int n, Convention convention);

// Mixture sum(w_i R(psi_i)) over a two-qubit pure-state decomposition.
ComplexMatrix mixed_pair_relative_density(const PairDecomposition& decomposition);

// Three-qubit relative density matrix: the average over the three qubit
// pairs of (conditional pair decomposition) x (pair basis) products tensored
// with the spectator's reduced state.
DensityMatrix relative_density_three(const StateVector& psi);

// General n-party relative density matrix: the average over all partial
// pairings of products of mixed pair relative densities at paired slots and
// reduced single-qubit states at spectator slots. Normalization is the
// number of enumerated pairing terms, which makes the trace exactly one.
// Supports 2 <= n <= 6.
DensityMatrix relative_density_n(const StateVector& psi);

struct MeasureReport {
  int n_qubits = 0;
  Convention convention = Convention::pairing_count;
  Rational kn;
  double relative_entropy = 0.0;  // S(rho || R)
  double mre = 0.0;               // k_n * relative_entropy
};

// Measure of a pure n-qubit state. Throws "support-anomaly" if the relative
// entropy comes out infinite (cannot happen for a valid construction).
MeasureReport mre_pure(const StateVector& psi,
                       Convention convention = Convention::pairing_count);

}  // namespace mre
