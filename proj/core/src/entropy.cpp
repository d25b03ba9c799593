#include "mre/entropy.hpp"

#include "detail.hpp"
#include "mre/eig.hpp"
#include "mre/error.hpp"

#include <algorithm>
#include <cmath>

namespace mre {

namespace detail {

double tr_log_self(const ComplexMatrix& rho) {
  const EigenSystem sys = eig_hermitian(rho);
  double t = 0.0;
  for (double lambda : sys.eigenvalues) {
    if (lambda > kDefaultZeroTol) t += lambda * std::log2(lambda);
  }
  return t;
}

RelEntropyResult relative_entropy_core(const ComplexMatrix& rho, double tr_rho_log_rho,
                                       const ComplexMatrix& sigma, double support_tol) {
  const SupportLog sigma_log = log2_on_support(sigma);

  // Mass of rho outside sigma's support decides finiteness.
  const double on_support = std::real(trace_product(rho, sigma_log.support_projector));
  const double violation = std::max(0.0, 1.0 - on_support);
  if (violation > support_tol) {
    return RelEntropyResult{0.0, true, violation};
  }

  const double tr_rho_log_sigma = std::real(trace_product(rho, sigma_log.log2_matrix));
  double value = tr_rho_log_rho - tr_rho_log_sigma;
  if (value < 0.0 && value >= -1e-10) value = 0.0;
  return RelEntropyResult{value, false, violation};
}

}  // namespace detail

double binary_entropy(double x) {
  if (x < -1e-12 || x > 1.0 + 1e-12) {
    throw Error("domain-error", "binary_entropy argument " + std::to_string(x));
  }
  x = std::clamp(x, 0.0, 1.0);
  double h = 0.0;
  if (x > 0.0) h -= x * std::log2(x);
  if (x < 1.0) h -= (1.0 - x) * std::log2(1.0 - x);
  return h;
}

double von_neumann_entropy(const DensityMatrix& rho) {
  const EigenSystem sys = eig_hermitian(rho.matrix());
  double s = 0.0;
  for (double lambda : sys.eigenvalues) {
    if (lambda > kDefaultZeroTol) s -= lambda * std::log2(lambda);
  }
  return s < 0.0 && s > -1e-12 ? 0.0 : s;
}

RelEntropyResult relative_entropy(const DensityMatrix& rho, const DensityMatrix& sigma,
                                  double support_tol) {
  if (rho.dim() != sigma.dim()) {
    throw Error("dim-mismatch", "relative_entropy arguments must share a dimension");
  }
  return detail::relative_entropy_core(rho.matrix(), detail::tr_log_self(rho.matrix()),
                                       sigma.matrix(), support_tol);
}

}  // namespace mre
