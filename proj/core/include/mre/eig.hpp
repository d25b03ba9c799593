#pragma once

#include "mre/complex_matrix.hpp"

#include <vector>

namespace mre {

// Eigenvalues below this are treated as zero when deciding supports.
inline constexpr double kDefaultZeroTol = 1e-10;
inline constexpr double kDefaultHermiticityTol = 1e-10;

// Result of a Hermitian eigendecomposition. Eigenvalues are sorted
// descending; column k of `eigenvectors` pairs with eigenvalues[k]. Each
// eigenvector has its largest-magnitude component made real and positive, so
// the output is reproducible run to run.
struct EigenSystem {
  std::vector<double> eigenvalues;
  ComplexMatrix eigenvectors;

  ComplexMatrix reconstruct() const;  // V diag(lambda) V^dagger
};

// Cyclic Jacobi diagonalization for complex Hermitian matrices. Throws
// "not-hermitian" when the input's hermiticity defect exceeds the tolerance.
EigenSystem eig_hermitian(const ComplexMatrix& m,
                          double hermiticity_tol = kDefaultHermiticityTol);

struct SupportLog {
  ComplexMatrix log2_matrix;        // sum over lambda > zero_tol of log2(lambda) P_lambda
  ComplexMatrix support_projector;  // sum of the retained eigenprojectors
  int support_rank = 0;
};

// Matrix log base 2 restricted to the support. Eigenvalues <= zero_tol are
// excluded; an eigenvalue below -zero_tol raises "not-psd".
SupportLog log2_on_support(const ComplexMatrix& m, double zero_tol = kDefaultZeroTol);

}  // namespace mre
