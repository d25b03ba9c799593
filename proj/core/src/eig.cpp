#include "mre/eig.hpp"

#include "mre/error.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

namespace mre {

ComplexMatrix EigenSystem::reconstruct() const {
  const std::size_t d = eigenvectors.dim();
  ComplexMatrix out(d);
  std::vector<Complex> v(d);
  for (std::size_t k = 0; k < eigenvalues.size(); ++k) {
    for (std::size_t i = 0; i < d; ++i) v[i] = eigenvectors(i, k);
    out.add_scaled_outer(eigenvalues[k], v);
  }
  return out;
}

// Cyclic Jacobi sweeps. Each rotation annihilates one off-diagonal entry
// a_pq = beta * u (beta = |a_pq|, |u| = 1) with the unitary
//   U = [[c, s*u], [-s*conj(u), c]]
// embedded at rows/columns (p, q); c and s come from the classical real
// Jacobi formulas applied to the phase-stripped 2x2 block.
EigenSystem eig_hermitian(const ComplexMatrix& m, double hermiticity_tol) {
  const double defect = m.hermiticity_defect();
  if (defect > hermiticity_tol) {
    throw Error("not-hermitian",
                "hermiticity defect " + std::to_string(defect) + " exceeds tolerance");
  }

  const std::size_t d = m.dim();
  // Work on the exactly Hermitian average of M and M^dagger.
  ComplexMatrix a(d);
  for (std::size_t i = 0; i < d; ++i) {
    a(i, i) = std::real(m(i, i));
    for (std::size_t j = i + 1; j < d; ++j) {
      const Complex avg = 0.5 * (m(i, j) + std::conj(m(j, i)));
      a(i, j) = avg;
      a(j, i) = std::conj(avg);
    }
  }
  ComplexMatrix v = ComplexMatrix::identity(d);

  const double fro = a.frobenius_norm();
  const double stop = std::numeric_limits<double>::epsilon() * std::max(fro, 1e-300) * 0.1;
  constexpr int kMaxSweeps = 60;

  for (int sweep = 0; sweep < kMaxSweeps && d > 1; ++sweep) {
    double off = 0.0;
    for (std::size_t p = 0; p < d; ++p)
      for (std::size_t q = p + 1; q < d; ++q) off += std::norm(a(p, q));
    if (std::sqrt(2.0 * off) <= stop) break;

    for (std::size_t p = 0; p < d; ++p) {
      for (std::size_t q = p + 1; q < d; ++q) {
        const Complex apq = a(p, q);
        const double beta = std::abs(apq);
        if (beta == 0.0) continue;
        const Complex u = apq / beta;

        const double alpha = std::real(a(p, p));
        const double gamma = std::real(a(q, q));
        const double tau = (gamma - alpha) / (2.0 * beta);
        const double t = (tau >= 0.0 ? 1.0 : -1.0) / (std::abs(tau) + std::hypot(1.0, tau));
        const double c = 1.0 / std::hypot(1.0, t);
        const double s = t * c;

        a(p, p) = alpha - t * beta;
        a(q, q) = gamma + t * beta;
        a(p, q) = 0.0;
        a(q, p) = 0.0;

        for (std::size_t r = 0; r < d; ++r) {
          if (r == p || r == q) continue;
          const Complex arp = a(r, p);
          const Complex arq = a(r, q);
          a(r, p) = c * arp - s * std::conj(u) * arq;
          a(r, q) = s * u * arp + c * arq;
          a(p, r) = std::conj(a(r, p));
          a(q, r) = std::conj(a(r, q));
        }
        for (std::size_t r = 0; r < d; ++r) {
          const Complex vrp = v(r, p);
          const Complex vrq = v(r, q);
          v(r, p) = c * vrp - s * std::conj(u) * vrq;
          v(r, q) = s * u * vrp + c * vrq;
        }
      }
    }
  }

  std::vector<std::size_t> order(d);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
    return std::real(a(x, x)) > std::real(a(y, y));
  });

  EigenSystem sys{std::vector<double>(d), ComplexMatrix(d)};
  for (std::size_t k = 0; k < d; ++k) {
    const std::size_t src = order[k];
    sys.eigenvalues[k] = std::real(a(src, src));
    // Phase fix: rotate so the largest-magnitude component is real positive.
    std::size_t imax = 0;
    double best = -1.0;
    for (std::size_t i = 0; i < d; ++i) {
      const double mag = std::abs(v(i, src));
      if (mag > best) {
        best = mag;
        imax = i;
      }
    }
    Complex phase{1.0, 0.0};
    if (best > 0.0) phase = std::conj(v(imax, src)) / best;
    for (std::size_t i = 0; i < d; ++i) sys.eigenvectors(i, k) = phase * v(i, src);
  }
  return sys;
}

SupportLog log2_on_support(const ComplexMatrix& m, double zero_tol) {
  const EigenSystem sys = eig_hermitian(m, std::max(zero_tol, kDefaultHermiticityTol));
  const std::size_t d = m.dim();
  SupportLog out{ComplexMatrix(d), ComplexMatrix(d), 0};
  std::vector<Complex> v(d);
  for (std::size_t k = 0; k < d; ++k) {
    const double lambda = sys.eigenvalues[k];
    if (lambda < -zero_tol) {
      throw Error("not-psd", "eigenvalue " + std::to_string(lambda) + " below -zero_tol");
    }
    if (lambda <= zero_tol) continue;
    for (std::size_t i = 0; i < d; ++i) v[i] = sys.eigenvectors(i, k);
    out.log2_matrix.add_scaled_outer(std::log2(lambda), v);
    out.support_projector.add_scaled_outer(1.0, v);
    ++out.support_rank;
  }
  return out;
}

}  // namespace mre
