#include "mre/bounds.hpp"

#include "mre/entropy.hpp"
#include "mre/error.hpp"
#include "mre/mixed_opt.hpp"

#include <string>

namespace mre {

namespace {

long long factorial(int n) {
  long long f = 1;
  for (int k = 2; k <= n; ++k) f *= k;
  return f;
}

struct Coefficients {
  double pair_weight;    // applied to sum over pairs of (e_pair + s_pair)
  double single_weight;  // applied to sum over parties of s_m
};

// Accumulated per-alpha weights of the assistant bound. Under pairing_count
// each coefficient counts unordered pairings; under printed the ordered
// 2^alpha variants are kept.
Coefficients bound_coefficients(int n, Convention convention) {
  double sum_a = 0.0, sum_b = 0.0, denom = 0.0;
  for (int alpha = 1; alpha <= n / 2; ++alpha) {
    const long long two_alpha = 1LL << alpha;
    long long c, a, b;
    if (convention == Convention::pairing_count) {
      c = factorial(n) / (factorial(alpha) * two_alpha * factorial(n - 2 * alpha));
      a = factorial(n - 2) / (factorial(alpha - 1) * (two_alpha / 2) * factorial(n - 2 * alpha));
      b = n - 2 * alpha == 0
              ? 0
              : factorial(n - 1) / (factorial(alpha) * two_alpha * factorial(n - 2 * alpha - 1));
    } else {
      c = factorial(n) / (factorial(alpha) * factorial(n - 2 * alpha));
      a = factorial(n - 2) / (factorial(alpha - 1) * factorial(n - 2 * alpha));
      b = n - 2 * alpha == 0
              ? 0
              : factorial(n - 1) / (factorial(alpha) * factorial(n - 2 * alpha - 1));
    }
    sum_a += static_cast<double>(a);
    sum_b += static_cast<double>(b);
    denom += static_cast<double>(c * (n - alpha));
  }
  return Coefficients{sum_a / denom, sum_b / denom};
}

}  // namespace

const char* to_string(SurrogateMode m) {
  return m == SurrogateMode::conditional_decomposition ? "theorem1" : "minimized";
}

double BoundReport::recompute() const {
  const Coefficients coeff = bound_coefficients(n_qubits, convention);
  double pair_sum = 0.0;
  for (const auto& term : pair_terms) pair_sum += term.e_pair + term.s_pair;
  double single_sum = 0.0;
  for (double s : single_entropies) single_sum += s;
  return coeff.pair_weight * pair_sum + coeff.single_weight * single_sum;
}

BoundReport assistant_air(const StateVector& psi, Convention convention, SurrogateMode surrogate,
                          const OptimizerConfig& minimizer_config) {
  const int n = psi.n_qubits();
  if (n < 2 || n > 6) {
    throw Error("unsupported-size", "party count " + std::to_string(n) + " outside 2..6");
  }

  BoundReport report;
  report.n_qubits = n;
  report.convention = convention;
  report.surrogate = surrogate;

  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) {
      // For n == 2 the "pair" is the whole (pure) state.
      const DensityMatrix rho_pair =
          n == 2 ? density_from_state(psi) : reduced_density(psi, {a, b});
      const double s_pair = von_neumann_entropy(rho_pair);
      double e_pair;
      if (surrogate == SurrogateMode::conditional_decomposition) {
        const ComplexMatrix mixed_r =
            mixed_pair_relative_density(pair_conditional_decomposition(psi, a, b));
        const RelEntropyResult rel = relative_entropy(rho_pair, DensityMatrix(mixed_r));
        if (rel.infinite) {
          throw Error("support-anomaly", "mixed pair relative density lost the pair's support");
        }
        e_pair = rel.value;
      } else {
        e_pair = mre_mixed(rho_pair, minimizer_config).value;
      }
      report.pair_terms.push_back({a, b, e_pair, s_pair});
    }
  }
  for (int m = 0; m < n; ++m) {
    report.single_entropies.push_back(von_neumann_entropy(reduced_density(psi, {m})));
  }

  report.e_air = report.recompute();
  return report;
}

double three_party_bound(const StateVector& psi, BoundReading reading) {
  if (psi.n_qubits() != 3) {
    throw Error("unsupported-size", "three_party_bound expects a three-qubit state");
  }
  const BoundReport report =
      assistant_air(psi, Convention::pairing_count, SurrogateMode::conditional_decomposition);
  double bound = report.e_air;
  if (reading == BoundReading::literal) bound += report.single_entropies[0] / 6.0;
  return bound;
}

UpperBoundCheck check_upper_bound(const StateVector& psi, Convention convention) {
  const double e_air = assistant_air(psi, convention).e_air;
  const double mre = mre_pure(psi, convention).mre;
  const double margin = e_air - mre;
  return UpperBoundCheck{margin, margin >= -1e-9};
}

}  // namespace mre
