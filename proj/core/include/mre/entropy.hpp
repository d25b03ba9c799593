#pragma once

#include "mre/states.hpp"

#include <limits>

namespace mre {

// Overlap with the null space of the second argument above which the
// relative entropy is reported as infinite.
inline constexpr double kDefaultSupportTol = 1e-10;

// Outcome of a quantum relative entropy evaluation. Infinite distance is a
// legitimate result (disjoint supports), not an error: callers that rank
// candidates need to order it after every finite value.
struct RelEntropyResult {
  double value = 0.0;  // meaningful when !infinite; >= 0 up to rounding
  bool infinite = false;
  double support_violation_mass = 0.0;  // Tr(rho * null-projector(sigma))

  double as_double() const {
    return infinite ? std::numeric_limits<double>::infinity() : value;
  }
};

// H(x) = -x log2 x - (1-x) log2(1-x) with 0 log2 0 == 0.
// Throws "domain-error" when x is outside [0, 1] by more than 1e-12.
double binary_entropy(double x);

// -sum(lambda log2 lambda) over eigenvalues above the support threshold.
double von_neumann_entropy(const DensityMatrix& rho);

// S(rho || sigma) = Tr rho (log2 rho - log2 sigma), evaluated on supports.
// Throws "dim-mismatch" when dimensions differ.
RelEntropyResult relative_entropy(const DensityMatrix& rho, const DensityMatrix& sigma,
                                  double support_tol = kDefaultSupportTol);

}  // namespace mre
