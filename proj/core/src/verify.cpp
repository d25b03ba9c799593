#include "mre/bounds.hpp"
#include "mre/cli.hpp"
#include "mre/eig.hpp"
#include "mre/entropy.hpp"
#include "mre/mixed_opt.hpp"
#include "mre/multi_rdm.hpp"
#include "mre/pair_rdm.hpp"
#include "mre/random.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <iomanip>
#include <limits>
#include <ostream>
#include <string>
#include <vector>

namespace mre {

namespace {

const double kInvSqrt2 = 1.0 / std::sqrt(2.0);
const double kHalfLog3 = 0.5 * std::log2(3.0);

enum class Relation { equal, at_most, at_least };

struct Row {
  std::string name;
  Relation relation;
  double expected;
  double computed;
  double tolerance;

  bool pass() const {
    switch (relation) {
      case Relation::equal:
        return std::abs(computed - expected) <= tolerance;
      case Relation::at_most:
        return computed <= expected + tolerance;
      case Relation::at_least:
        return computed >= expected - tolerance;
    }
    return false;
  }
};

StateVector two_term_state(int n, std::size_t i, std::size_t j, double sign) {
  std::vector<Complex> amps(std::size_t{1} << n, Complex{});
  amps[i] = kInvSqrt2;
  amps[j] = sign * kInvSqrt2;
  return StateVector(n, std::move(amps));
}

// The eight three-qubit cat states (|b> +/- |~b>)/sqrt(2).
std::vector<std::pair<std::string, StateVector>> ghz_cats() {
  std::vector<std::pair<std::string, StateVector>> cats;
  const std::size_t halves[4] = {0, 1, 2, 3};  // 000,001,010,011 paired with complements
  for (std::size_t h : halves) {
    for (double sign : {1.0, -1.0}) {
      std::string name = "ghz cat |";
      for (int b = 2; b >= 0; --b) name += char('0' + ((h >> b) & 1));
      name += sign > 0 ? ">+" : ">-";
      cats.emplace_back(name, two_term_state(3, h, 7 - h, sign));
    }
  }
  return cats;
}

// A two-qubit Bell state at the (s, t) slots with a spectator state |chi>.
StateVector extended_bell(int s, int t, int bell_index, const std::vector<Complex>& chi) {
  const int m = 3 - s - t;
  std::vector<Complex> amps(8, Complex{});
  const int flips[4][2] = {{0, 3}, {0, 3}, {1, 2}, {1, 2}};  // Phi+-, Psi+-
  const double sign = bell_index % 2 == 0 ? 1.0 : -1.0;
  for (int which = 0; which < 2; ++which) {
    const int pair_bits = flips[bell_index][which];
    const double coeff = which == 0 ? kInvSqrt2 : sign * kInvSqrt2;
    for (std::size_t cm = 0; cm < 2; ++cm) {
      std::size_t idx = 0;
      idx |= static_cast<std::size_t>((pair_bits >> 1) & 1) << (2 - s);
      idx |= static_cast<std::size_t>(pair_bits & 1) << (2 - t);
      idx |= cm << (2 - m);
      amps[idx] += coeff * chi[cm];
    }
  }
  return StateVector::normalized(3, std::move(amps));
}

StateVector ghz_like(int family, double weight) {
  // family 0: |000>,|111>; 1: |001>,|110>; 2: |010>,|101>; 3: |011>,|100>
  std::vector<Complex> amps(8, Complex{});
  amps[family] = std::sqrt(weight);
  amps[7 - family] = std::sqrt(1.0 - weight);
  return StateVector::normalized(3, std::move(amps));
}

// Independent index-summation partial trace used only for cross-checking.
ComplexMatrix partial_trace_oracle(const ComplexMatrix& m, int n, const std::vector<int>& keep) {
  std::vector<int> traced;
  for (int q = 0; q < n; ++q)
    if (std::find(keep.begin(), keep.end(), q) == keep.end()) traced.push_back(q);
  const std::size_t dk = std::size_t{1} << keep.size();
  const std::size_t dt = std::size_t{1} << traced.size();
  ComplexMatrix out(dk);
  for (std::size_t r = 0; r < dk; ++r)
    for (std::size_t c = 0; c < dk; ++c)
      for (std::size_t s = 0; s < dt; ++s) {
        std::size_t row = 0, col = 0;
        for (std::size_t k = 0; k < keep.size(); ++k) {
          const std::size_t bit_r = (r >> (keep.size() - 1 - k)) & 1u;
          const std::size_t bit_c = (c >> (keep.size() - 1 - k)) & 1u;
          row |= bit_r << (n - 1 - keep[k]);
          col |= bit_c << (n - 1 - keep[k]);
        }
        for (std::size_t k = 0; k < traced.size(); ++k) {
          const std::size_t bit = (s >> (traced.size() - 1 - k)) & 1u;
          row |= bit << (n - 1 - traced[k]);
          col |= bit << (n - 1 - traced[k]);
        }
        out(r, c) += m(row, col);
      }
  return out;
}

}  // namespace

int run_verify(std::uint64_t seed, std::ostream& out) {
  std::vector<Row> rows;
  Rng rng(seed);

  for (const auto& [name, psi] : ghz_cats()) {
    rows.push_back({"mre " + name, Relation::equal, 1.0, mre_pure(psi).mre, 1e-9});
  }

  const char* bell_names[4] = {"Phi+", "Phi-", "Psi+", "Psi-"};
  const int placements[3][2] = {{0, 1}, {0, 2}, {1, 2}};
  for (const auto& slots : placements) {
    for (int bell = 0; bell < 4; ++bell) {
      std::vector<Complex> chi{rng.complex_gaussian(), rng.complex_gaussian()};
      const StateVector psi = extended_bell(slots[0], slots[1], bell, chi);
      std::string name = "mre extended bell " + std::string(bell_names[bell]) + " at (" +
                         std::to_string(slots[0]) + "," + std::to_string(slots[1]) + ")";
      rows.push_back({name, Relation::equal, kHalfLog3, mre_pure(psi).mre, 1e-9});
    }
  }

  {
    double worst = 0.0;
    for (int k = 0; k < 20; ++k) {
      worst = std::max(worst, mre_pure(random_product_state(3, rng)).mre);
    }
    rows.push_back({"max mre over 20 random product states", Relation::at_most, 0.0, worst, 1e-9});
  }

  {
    double worst = 0.0;
    for (int k = 0; k < 10; ++k) {
      const double w = k / 9.0;
      const double computed = mre_pure(ghz_like(k % 4, w)).mre;
      worst = std::max(worst, std::abs(computed - binary_entropy(w)));
    }
    rows.push_back(
        {"max |mre - H(w)| over 10 two-term cat-like states", Relation::at_most, 0.0, worst, 1e-8});
  }

  {
    double worst = 0.0;
    for (int k = 0; k < 10; ++k) {
      const StateVector psi = random_state(2, rng);
      worst = std::max(worst, relative_density_n(psi).matrix().max_abs_diff(
                                  relative_density_pair(psi).matrix()));
    }
    rows.push_back({"general path vs two-qubit path (10 states)", Relation::at_most, 0.0, worst,
                    1e-12});
  }
  {
    double worst = 0.0;
    for (int k = 0; k < 10; ++k) {
      const StateVector psi = random_state(3, rng);
      worst = std::max(worst, relative_density_n(psi).matrix().max_abs_diff(
                                  relative_density_three(psi).matrix()));
    }
    rows.push_back({"general path vs three-qubit path (10 states)", Relation::at_most, 0.0, worst,
                    1e-12});
  }

  rows.push_back({"k_2", Relation::equal, 1.0, kn(2, Convention::pairing_count).value(), 1e-15});
  rows.push_back({"k_3", Relation::equal, 0.5, kn(3, Convention::pairing_count).value(), 1e-15});
  rows.push_back(
      {"k_4 (pairing)", Relation::equal, 0.375, kn(4, Convention::pairing_count).value(), 1e-15});
  rows.push_back({"k_4 (printed)", Relation::equal, 0.4, kn(4, Convention::printed).value(), 1e-15});

  {
    double worst = std::numeric_limits<double>::infinity();
    for (int k = 0; k < 200; ++k) {
      worst = std::min(worst, check_upper_bound(random_state(3, rng)).margin);
    }
    rows.push_back(
        {"min e_air - mre over 200 random pure states", Relation::at_least, 0.0, worst, 1e-9});
    const StateVector ghz = two_term_state(3, 0, 7, 1.0);
    rows.push_back({"e_air - mre at ghz", Relation::equal, 0.0, check_upper_bound(ghz).margin, 1e-9});
  }

  {
    double worst = std::numeric_limits<double>::infinity();
    for (int k = 0; k < 100; ++k) {
      const DensityMatrix rho = random_density(2, 4, rng);
      const DensityMatrix sigma = random_density(2, 4, rng);
      worst = std::min(worst, relative_entropy(rho, sigma).value);
    }
    rows.push_back(
        {"min relative entropy over 100 random pairs", Relation::at_least, 0.0, worst, 1e-10});
  }

  {
    double worst = 0.0;
    for (int k = 0; k < 10; ++k) {
      ComplexMatrix h(8);
      for (std::size_t i = 0; i < 8; ++i) {
        h(i, i) = rng.gaussian();
        for (std::size_t j = i + 1; j < 8; ++j) {
          h(i, j) = rng.complex_gaussian();
          h(j, i) = std::conj(h(i, j));
        }
      }
      const EigenSystem sys = eig_hermitian(h);
      worst = std::max(worst, sys.reconstruct().max_abs_diff(h));
    }
    rows.push_back({"max eig reconstruction residual (10 random 8x8)", Relation::at_most, 0.0,
                    worst, 1e-10});
  }

  {
    double worst = 0.0;
    const std::vector<std::vector<int>> keeps{{0}, {2}, {0, 1}, {1, 2}, {0, 2}};
    for (int k = 0; k < 10; ++k) {
      const DensityMatrix rho = random_density(3, 8, rng);
      for (const auto& keep : keeps) {
        worst = std::max(worst, partial_trace(rho.matrix(), keep)
                                    .max_abs_diff(partial_trace_oracle(rho.matrix(), 3, keep)));
      }
    }
    rows.push_back({"max partial trace deviation from summation oracle", Relation::at_most, 0.0,
                    worst, 1e-12});
  }

  {
    double worst = 0.0;
    for (int k = 0; k < 50; ++k) {
      const StateVector psi = random_state(2, rng);
      worst = std::max(worst, std::abs(mre_pair_pure(psi) -
                                       von_neumann_entropy(reduced_density(psi, {0}))));
    }
    rows.push_back({"max |pair measure - reduced entropy| (50 states)", Relation::at_most, 0.0,
                    worst, 1e-8});
  }

  {
    OptimizerConfig quick;
    quick.restarts = 2;
    quick.seed = seed;
    const StateVector psi = random_state(2, rng);
    const MixedResult mixed = mre_mixed(density_from_state(psi), quick);
    rows.push_back({"mixed measure on a rank-1 state vs pure measure", Relation::equal,
                    mre_pure(psi).mre, mixed.value, 1e-9});

    ComplexMatrix sep(4);
    sep(0, 0) = 0.5;
    sep(3, 3) = 0.5;
    rows.push_back({"mixed measure of (|00><00|+|11><11|)/2", Relation::equal, 0.0,
                    mre_mixed(DensityMatrix(std::move(sep)), quick).value, 1e-9});
  }

  int failures = 0;
  out << std::left << std::setw(58) << "CHECK" << std::setw(16) << "EXPECTED" << std::setw(16)
      << "COMPUTED" << std::setw(10) << "TOL" << "RESULT\n";
  for (const auto& row : rows) {
    const char* rel = row.relation == Relation::equal ? "="
                      : row.relation == Relation::at_most ? "<="
                                                          : ">=";
    char expected[48], computed[48], tol[24];
    std::snprintf(expected, sizeof expected, "%s %.9g", rel, row.expected);
    std::snprintf(computed, sizeof computed, "%.9g", row.computed);
    std::snprintf(tol, sizeof tol, "%.0e", row.tolerance);
    const bool ok = row.pass();
    failures += ok ? 0 : 1;
    out << std::left << std::setw(58) << row.name << std::setw(16) << expected << std::setw(16)
        << computed << std::setw(10) << tol << (ok ? "PASS" : "FAIL") << "\n";
  }
  out << (failures == 0 ? "SUMMARY: all " : "SUMMARY: FAILED ") << rows.size() - failures << "/"
      << rows.size() << " checks passed\n";
  return failures == 0 ? kExitOk : kExitVerifyFailure;
}

}  // namespace mre
