#pragma once

#include "mre/mixed_opt.hpp"
#include "mre/multi_rdm.hpp"
#include "mre/states.hpp"

#include <vector>

namespace mre {

// How the two-qubit measure of a reduced (mixed) pair is evaluated inside
// the assistant bound: either from the conditional decomposition the global
// construction already uses (deterministic, the quantity the convexity
// argument produces) or from the decomposition minimizer.
enum class SurrogateMode { conditional_decomposition, minimized };

const char* to_string(SurrogateMode m);

struct BoundReport {
  int n_qubits = 0;
  Convention convention = Convention::pairing_count;
  SurrogateMode surrogate = SurrogateMode::conditional_decomposition;
  double e_air = 0.0;

  struct PairTerm {
    int a = 0, b = 0;
    double e_pair = 0.0;  // two-qubit measure (or surrogate) of the reduced pair
    double s_pair = 0.0;  // von Neumann entropy of the reduced pair
  };
  std::vector<PairTerm> pair_terms;
  std::vector<double> single_entropies;  // S(rho_m) per party

  // e_air rebuilt from the recorded terms; equals e_air within 1e-12.
  double recompute() const;
};

// Assistant upper bound on the pure-state measure, built from pairwise
// measures and subsystem entropies. Supports 2 <= n <= 6. The optimizer
// config only matters in minimized surrogate mode.
BoundReport assistant_air(const StateVector& psi,
                          Convention convention = Convention::pairing_count,
                          SurrogateMode surrogate = SurrogateMode::conditional_decomposition,
                          const OptimizerConfig& minimizer_config = {});

// The closed-form three-qubit bound. The `literal` reading adds the first
// party's entropy a second time, reproducing the bound as printed with its
// duplicated term; the default reading counts each party once and coincides
// with assistant_air at n = 3.
enum class BoundReading { corrected, literal };
double three_party_bound(const StateVector& psi, BoundReading reading = BoundReading::corrected);

struct UpperBoundCheck {
  double margin = 0.0;  // e_air - mre
  bool holds = false;   // margin >= -1e-9
};

// Evaluates the upper-bound inequality e_air >= mre for a pure state.
UpperBoundCheck check_upper_bound(const StateVector& psi,
                                  Convention convention = Convention::pairing_count);

}  // namespace mre
