#include "mre/random.hpp"

#include "mre/error.hpp"

#include <cmath>
#include <numbers>

namespace mre {

double Rng::uniform() {
  // 53-bit mantissa fraction in [0, 1).
  return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
}

double Rng::gaussian() {
  if (has_spare_) {
    has_spare_ = false;
    return spare_;
  }
  double u1 = uniform();
  while (u1 <= 0.0) u1 = uniform();
  const double u2 = uniform();
  const double radius = std::sqrt(-2.0 * std::log(u1));
  const double angle = 2.0 * std::numbers::pi * u2;
  spare_ = radius * std::sin(angle);
  has_spare_ = true;
  return radius * std::cos(angle);
}

Complex Rng::complex_gaussian() {
  const double re = gaussian();
  const double im = gaussian();
  return Complex{re, im};
}

StateVector random_state(int n_qubits, Rng& rng) {
  std::vector<Complex> amps(std::size_t{1} << n_qubits);
  for (auto& a : amps) a = rng.complex_gaussian();
  return StateVector::normalized(n_qubits, std::move(amps));
}

StateVector random_product_state(int n_parties, Rng& rng) {
  std::vector<Complex> amps{1.0};
  for (int q = 0; q < n_parties; ++q) {
    Complex q0 = rng.complex_gaussian();
    Complex q1 = rng.complex_gaussian();
    const double nrm = std::sqrt(std::norm(q0) + std::norm(q1));
    q0 /= nrm;
    q1 /= nrm;
    std::vector<Complex> next(amps.size() * 2);
    for (std::size_t i = 0; i < amps.size(); ++i) {
      next[2 * i] = amps[i] * q0;
      next[2 * i + 1] = amps[i] * q1;
    }
    amps = std::move(next);
  }
  return StateVector::normalized(n_parties, std::move(amps));
}

DensityMatrix random_density(int n_qubits, int rank, Rng& rng) {
  const std::size_t dim = std::size_t{1} << n_qubits;
  if (rank < 1 || static_cast<std::size_t>(rank) > dim) {
    throw Error("invalid-dimension", "rank must lie in 1..dim");
  }
  // Columns of G are unnormalized pure states; rho = G G^dagger normalized.
  ComplexMatrix rho(dim);
  std::vector<Complex> column(dim);
  for (int k = 0; k < rank; ++k) {
    for (auto& c : column) c = rng.complex_gaussian();
    rho.add_scaled_outer(1.0, column);
  }
  const double tr = std::real(rho.trace());
  rho *= 1.0 / tr;
  return DensityMatrix(std::move(rho));
}

ComplexMatrix random_unitary(std::size_t dim, Rng& rng) {
  ComplexMatrix g(dim);
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = 0; j < dim; ++j) g(i, j) = rng.complex_gaussian();

  // Modified Gram-Schmidt on columns.
  for (std::size_t k = 0; k < dim; ++k) {
    for (std::size_t prev = 0; prev < k; ++prev) {
      Complex overlap = 0.0;
      for (std::size_t i = 0; i < dim; ++i) overlap += std::conj(g(i, prev)) * g(i, k);
      for (std::size_t i = 0; i < dim; ++i) g(i, k) -= overlap * g(i, prev);
    }
    double nrm = 0.0;
    for (std::size_t i = 0; i < dim; ++i) nrm += std::norm(g(i, k));
    nrm = std::sqrt(nrm);
    for (std::size_t i = 0; i < dim; ++i) g(i, k) /= nrm;
  }
  return g;
}

}  // namespace mre
