#include "mre/pair_rdm.hpp"

#include "detail.hpp"
#include "mre/eig.hpp"
#include "mre/entropy.hpp"
#include "mre/error.hpp"

#include <array>
#include <cmath>

namespace mre {

namespace {

ComplexMatrix direction_projector_minus(const std::array<double, 3>& eta) {
  // 1/2 (sigma_0 - eta . sigma)
  ComplexMatrix m = ComplexMatrix::identity(2);
  for (int k = 0; k < 3; ++k) {
    ComplexMatrix term = pauli(k + 1);
    term *= Complex{-eta[k], 0.0};
    m += term;
  }
  m *= 0.5;
  return m;
}

std::array<double, 3> bloch_of(const ComplexMatrix& m) {
  return {2.0 * std::real(m(0, 1)), -2.0 * std::imag(m(0, 1)),
          std::real(m(0, 0)) - std::real(m(1, 1))};
}

}  // namespace

namespace detail {

ComplexMatrix reduced_matrix(const StateVector& psi, const std::vector<int>& keep) {
  ComplexMatrix full(psi.dim());
  full.add_scaled_outer(1.0, psi.amplitudes());
  return partial_trace(full, keep);
}

RawPairBasis raw_pair_basis(const StateVector& psi) {
  if (psi.n_qubits() != 2) {
    throw Error("invalid-dimension", "pair_basis expects a two-qubit state");
  }
  const ComplexMatrix rho_x = reduced_matrix(psi, {0});
  const ComplexMatrix rho_y = reduced_matrix(psi, {1});
  const std::array<double, 3> xi_x = bloch_of(rho_x);
  const std::array<double, 3> xi_y = bloch_of(rho_y);
  double xi = std::sqrt(xi_x[0] * xi_x[0] + xi_x[1] * xi_x[1] + xi_x[2] * xi_x[2]);
  xi = std::min(xi, 1.0);  // rounding guard

  if (xi > kXiTol) {
    RawPairBasis basis;
    basis.q1 = (1.0 - xi) / 2.0;
    basis.q2 = (1.0 + xi) / 2.0;
    basis.xi = xi;
    for (int k = 0; k < 3; ++k) {
      basis.eta_x[k] = xi_x[k] / xi;
      basis.eta_y[k] = xi_y[k] / xi;
    }
    basis.bx1 = direction_projector_minus(basis.eta_x);
    basis.by1 = direction_projector_minus(basis.eta_y);
    basis.bx2 = ComplexMatrix::identity(2) - basis.bx1;
    basis.by2 = ComplexMatrix::identity(2) - basis.by1;
    return basis;
  }

  // Maximally entangled: any Schmidt decomposition |psi> = (|u0 v0> + |u1 v1>)/sqrt(2)
  // supplies the basis, with the second Schmidt pair in the "minus eta" role.
  // This reproduces the standard assignments on all four Bell states, and the
  // measure does not depend on the basis choice.
  const EigenSystem ux = eig_hermitian(rho_x);
  std::array<std::vector<Complex>, 2> u, v;
  for (int i = 0; i < 2; ++i) {
    u[i] = {ux.eigenvectors(0, i), ux.eigenvectors(1, i)};
    // Conditional block of psi on <u_i| at the first slot.
    std::vector<Complex> w(2);
    for (std::size_t y = 0; y < 2; ++y) {
      w[y] = std::conj(u[i][0]) * psi.amplitude(y) + std::conj(u[i][1]) * psi.amplitude(2 + y);
    }
    const double nrm = std::sqrt(std::norm(w[0]) + std::norm(w[1]));
    for (auto& c : w) c /= nrm;
    v[i] = std::move(w);
  }

  auto projector = [](const std::vector<Complex>& vec) {
    ComplexMatrix m(2);
    m.add_scaled_outer(1.0, vec);
    return m;
  };
  RawPairBasis basis;
  basis.q1 = 0.5;
  basis.q2 = 0.5;
  basis.xi = 0.0;
  basis.bx1 = projector(u[1]);
  basis.by1 = projector(v[1]);
  basis.bx2 = projector(u[0]);
  basis.by2 = projector(v[0]);
  basis.eta_x = bloch_of(basis.bx2);
  basis.eta_y = bloch_of(basis.by2);
  return basis;
}

ComplexMatrix relative_density_pair_matrix(const StateVector& psi) {
  const RawPairBasis basis = raw_pair_basis(psi);
  ComplexMatrix r = kron(basis.bx1, basis.by1);
  r *= basis.q1;
  ComplexMatrix second = kron(basis.bx2, basis.by2);
  second *= basis.q2;
  r += second;
  return r;
}

}  // namespace detail

PairBasis pair_basis(const StateVector& psi) {
  detail::RawPairBasis raw = detail::raw_pair_basis(psi);
  return PairBasis{raw.q1,
                   raw.q2,
                   raw.xi,
                   raw.eta_x,
                   raw.eta_y,
                   {DensityMatrix(std::move(raw.bx1)), DensityMatrix(std::move(raw.bx2))},
                   {DensityMatrix(std::move(raw.by1)), DensityMatrix(std::move(raw.by2))}};
}

DensityMatrix relative_density_pair(const StateVector& psi) {
  return DensityMatrix(detail::relative_density_pair_matrix(psi));
}

double mre_pair_pure(const StateVector& psi) {
  ComplexMatrix rho(psi.dim());
  rho.add_scaled_outer(1.0, psi.amplitudes());
  const RelEntropyResult rel = detail::relative_entropy_core(
      rho, 0.0, detail::relative_density_pair_matrix(psi), kDefaultSupportTol);
  if (rel.infinite) {
    throw Error("support-anomaly", "pure-state relative density lost the state's support");
  }
  return rel.value;
}

}  // namespace mre
