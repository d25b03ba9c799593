#include "mre/multi_rdm.hpp"

#include "detail.hpp"
#include "mre/entropy.hpp"
#include "mre/error.hpp"

#include <numeric>
#include <string>

namespace mre {

namespace {

void check_party_count(int n) {
  if (n < 2 || n > 6) {
    throw Error("unsupported-size", "party count " + std::to_string(n) + " outside 2..6");
  }
}

long long factorial(int n) {
  long long f = 1;
  for (int k = 2; k <= n; ++k) f *= k;
  return f;
}

void extend_pairings(int n, int alpha_left, int min_start, std::vector<std::pair<int, int>>& acc,
                     std::vector<bool>& used, std::vector<PairingTerm>& out) {
  if (alpha_left == 0) {
    PairingTerm term{acc, {}};
    for (int q = 0; q < n; ++q)
      if (!used[q]) term.spectators.push_back(q);
    out.push_back(std::move(term));
    return;
  }
  // Pair openers ascend (s_1 < s_2 < ...), which makes each pairing unique.
  for (int s = min_start; s < n; ++s) {
    if (used[s]) continue;
    used[s] = true;
    for (int t = s + 1; t < n; ++t) {
      if (used[t]) continue;
      used[t] = true;
      acc.emplace_back(s, t);
      extend_pairings(n, alpha_left - 1, s + 1, acc, used, out);
      acc.pop_back();
      used[t] = false;
    }
    used[s] = false;
  }
}

struct SlotFactor {
  std::vector<int> slots;
  const ComplexMatrix* matrix;
};

// out += product over factors of factor(bits of row at slots, bits of col at slots).
// The factors' slot sets partition the n qubits.
void accumulate_composed(ComplexMatrix& out, int n, const std::vector<SlotFactor>& factors) {
  const std::size_t dim = std::size_t{1} << n;
  auto extract = [n](std::size_t index, const std::vector<int>& slots) {
    std::size_t packed = 0;
    for (int q : slots) packed = (packed << 1) | ((index >> (n - 1 - q)) & 1u);
    return packed;
  };
  for (std::size_t i = 0; i < dim; ++i) {
    for (std::size_t j = 0; j < dim; ++j) {
      Complex v{1.0, 0.0};
      for (const auto& f : factors) {
        v *= (*f.matrix)(extract(i, f.slots), extract(j, f.slots));
        if (v == Complex{}) break;
      }
      out(i, j) += v;
    }
  }
}

}  // namespace

const char* to_string(Convention c) {
  return c == Convention::pairing_count ? "pairing" : "printed";
}

std::vector<PairingTerm> enumerate_pairings(int n) {
  check_party_count(n);
  std::vector<PairingTerm> out;
  for (int alpha = 1; alpha <= n / 2; ++alpha) {
    std::vector<std::pair<int, int>> acc;
    std::vector<bool> used(n, false);
    extend_pairings(n, alpha, 0, acc, used, out);
  }
  return out;
}

long long pairing_count_for_alpha(int n, int alpha) {
  return factorial(n) / (factorial(alpha) * (1LL << alpha) * factorial(n - 2 * alpha));
}

Rational kn(int n, Convention convention) {
  check_party_count(n);
  long long num = 0, den = 0;
  for (int alpha = 1; alpha <= n / 2; ++alpha) {
    long long c = convention == Convention::pairing_count
                      ? pairing_count_for_alpha(n, alpha)
                      : factorial(n) / (factorial(alpha) * factorial(n - 2 * alpha));
    num += c;
    den += c * (n - alpha);
  }
  const long long g = std::gcd(num, den);
  return Rational{num / g, den / g};
}

ComplexMatrix mixed_pair_relative_density(const PairDecomposition& decomposition) {
  return detail::mixed_pair_rdm_matrix(decomposition);
}

namespace detail {

ComplexMatrix mixed_pair_rdm_matrix(const PairDecomposition& decomposition) {
  ComplexMatrix out(4);
  for (const auto& term : decomposition.terms) {
    ComplexMatrix r = relative_density_pair_matrix(term.pure_state);
    r *= term.weight;
    out += r;
  }
  return out;
}

ComplexMatrix relative_density_matrix_three(const StateVector& psi) {
  if (psi.n_qubits() != 3) {
    throw Error("invalid-dimension", "relative_density_three expects a three-qubit state");
  }
  ComplexMatrix sum(8);
  // Pair (A,B) with spectator C, then (A,C) with B, then (B,C) with A.
  const int pairs[3][2] = {{0, 1}, {0, 2}, {1, 2}};
  const int spectators[3] = {2, 1, 0};
  for (int k = 0; k < 3; ++k) {
    const int s = pairs[k][0], t = pairs[k][1], m = spectators[k];
    const ComplexMatrix rho_m = reduced_matrix(psi, {m});
    const PairDecomposition decomposition = pair_conditional_decomposition(psi, s, t);
    for (const auto& term : decomposition.terms) {
      const RawPairBasis basis = raw_pair_basis(term.pure_state);
      const double q[2] = {basis.q1, basis.q2};
      const ComplexMatrix* bx[2] = {&basis.bx1, &basis.bx2};
      const ComplexMatrix* by[2] = {&basis.by1, &basis.by2};
      for (int j = 0; j < 2; ++j) {
        if (q[j] == 0.0) continue;
        ComplexMatrix product = m == 2   ? kron(kron(*bx[j], *by[j]), rho_m)
                                : m == 1 ? kron(kron(*bx[j], rho_m), *by[j])
                                         : kron(kron(rho_m, *bx[j]), *by[j]);
        product *= term.weight * q[j];
        sum += product;
      }
    }
  }
  sum *= 1.0 / 3.0;
  return sum;
}

ComplexMatrix relative_density_matrix_n(const StateVector& psi) {
  const int n = psi.n_qubits();
  check_party_count(n);

  // Cache the mixed pair relative density of every qubit pair and the
  // reduced state of every party; pairings only recombine these factors.
  std::vector<std::vector<ComplexMatrix>> pair_rdm(n);
  for (int s = 0; s < n; ++s) {
    pair_rdm[s].resize(n, ComplexMatrix(1));
    for (int t = s + 1; t < n; ++t) {
      pair_rdm[s][t] = mixed_pair_rdm_matrix(pair_conditional_decomposition(psi, s, t));
    }
  }
  std::vector<ComplexMatrix> singles;
  singles.reserve(n);
  for (int m = 0; m < n; ++m) singles.push_back(reduced_matrix(psi, {m}));

  const std::vector<PairingTerm> pairings = enumerate_pairings(n);
  ComplexMatrix sum(std::size_t{1} << n);
  for (const auto& pairing : pairings) {
    std::vector<SlotFactor> factors;
    factors.reserve(pairing.pairs.size() + pairing.spectators.size());
    for (const auto& [s, t] : pairing.pairs) factors.push_back({{s, t}, &pair_rdm[s][t]});
    for (int m : pairing.spectators) factors.push_back({{m}, &singles[m]});
    accumulate_composed(sum, n, factors);
  }
  sum *= 1.0 / static_cast<double>(pairings.size());
  return sum;
}

}  // namespace detail

DensityMatrix relative_density_three(const StateVector& psi) {
  return DensityMatrix(detail::relative_density_matrix_three(psi));
}

DensityMatrix relative_density_n(const StateVector& psi) {
  return DensityMatrix(detail::relative_density_matrix_n(psi));
}

MeasureReport mre_pure(const StateVector& psi, Convention convention) {
  const int n = psi.n_qubits();
  check_party_count(n);
  ComplexMatrix rho(psi.dim());
  rho.add_scaled_outer(1.0, psi.amplitudes());
  // Tr(rho log2 rho) vanishes exactly for a projector.
  const RelEntropyResult rel = detail::relative_entropy_core(
      rho, 0.0, detail::relative_density_matrix_n(psi), kDefaultSupportTol);
  if (rel.infinite) {
    throw Error("support-anomaly", "pure-state relative density lost the state's support");
  }
  const Rational k = kn(n, convention);
  return MeasureReport{n, convention, k, rel.value, k.value() * rel.value};
}

}  // namespace mre
