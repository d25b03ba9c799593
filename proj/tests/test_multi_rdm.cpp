#include "mre/entropy.hpp"
#include "mre/error.hpp"
#include "mre/multi_rdm.hpp"
#include "mre/pair_rdm.hpp"
#include "mre/random.hpp"

#include "test_support.hpp"

#include <doctest.h>

#include <bit>
#include <cmath>

using namespace mre;
using namespace mre::testing;

TEST_CASE("pairings enumerate every disjoint pair set") {
  const auto two = enumerate_pairings(2);
  REQUIRE(two.size() == 1);
  CHECK(two[0].pairs == std::vector<std::pair<int, int>>{{0, 1}});
  CHECK(two[0].spectators.empty());

  const auto three = enumerate_pairings(3);
  REQUIRE(three.size() == 3);
  CHECK(three[0].pairs == std::vector<std::pair<int, int>>{{0, 1}});
  CHECK(three[0].spectators == std::vector<int>{2});
  CHECK(three[1].pairs == std::vector<std::pair<int, int>>{{0, 2}});
  CHECK(three[2].pairs == std::vector<std::pair<int, int>>{{1, 2}});

  const auto four = enumerate_pairings(4);
  CHECK(four.size() == 9);  // 6 single pairs + 3 perfect pairings

  for (int n = 2; n <= 6; ++n) {
    long long expected = 0;
    for (int alpha = 1; alpha <= n / 2; ++alpha) expected += pairing_count_for_alpha(n, alpha);
    CHECK(static_cast<long long>(enumerate_pairings(n).size()) == expected);
  }

  CHECK_THROWS_WITH_AS(enumerate_pairings(1), doctest::Contains("unsupported-size"), Error);
  CHECK_THROWS_WITH_AS(enumerate_pairings(7), doctest::Contains("unsupported-size"), Error);
}

TEST_CASE("k_n coefficients under both conventions") {
  for (Convention c : {Convention::pairing_count, Convention::printed}) {
    CHECK(kn(2, c).num == 1);
    CHECK(kn(2, c).den == 1);
    CHECK(kn(3, c).num == 1);
    CHECK(kn(3, c).den == 2);
  }
  const Rational printed = kn(4, Convention::printed);
  CHECK(printed.num == 2);
  CHECK(printed.den == 5);
  const Rational pairing = kn(4, Convention::pairing_count);
  CHECK(pairing.num == 3);
  CHECK(pairing.den == 8);
}

TEST_CASE("three-qubit relative density matrix closed forms") {
  // GHZ: diagonal, 1/4 on the cat components and 1/12 on the rest.
  const ComplexMatrix ghz_r = relative_density_three(ghz3()).matrix();
  for (std::size_t i = 0; i < 8; ++i) {
    for (std::size_t j = 0; j < 8; ++j) {
      const double expected = i != j ? 0.0 : (i == 0 || i == 7 ? 0.25 : 1.0 / 12.0);
      CHECK(std::abs(ghz_r(i, j) - expected) <= 1e-12);
    }
  }

  // A full product state maps to its own projector.
  ComplexMatrix product_expected(8);
  product_expected(0, 0) = 1.0;
  CHECK(relative_density_three(basis_state(3, 0)).matrix().max_abs_diff(product_expected) <= 1e-12);

  // Bell pair on (A,B) with spectator |0>: diagonal with entries
  // 1/3, 1/6, 1/6, 1/3 on |000>, |010>, |100>, |110>.
  const StateVector eb = extended_bell(0, 1, 0, {1.0, 0.0});
  const ComplexMatrix eb_r = relative_density_three(eb).matrix();
  ComplexMatrix eb_expected(8);
  eb_expected(0, 0) = 1.0 / 3.0;
  eb_expected(2, 2) = 1.0 / 6.0;
  eb_expected(4, 4) = 1.0 / 6.0;
  eb_expected(6, 6) = 1.0 / 3.0;
  CHECK(eb_r.max_abs_diff(eb_expected) <= 1e-12);
}

TEST_CASE("general construction reduces to the specialized paths") {
  Rng rng(51);
  for (int rep = 0; rep < 20; ++rep) {
    const StateVector two = random_state(2, rng);
    CHECK(relative_density_n(two).matrix().max_abs_diff(relative_density_pair(two).matrix()) ==
          0.0);
    const StateVector three = random_state(3, rng);
    CHECK(relative_density_n(three).matrix().max_abs_diff(
              relative_density_three(three).matrix()) <= 1e-12);
  }
}

TEST_CASE("four-qubit cat state yields the hand-expanded diagonal") {
  const StateVector ghz4 = two_term_state(4, 0, 15, 1.0, 1.0);
  const ComplexMatrix r = relative_density_n(ghz4).matrix();
  CHECK(std::abs(r.trace() - Complex{1.0}) <= 1e-12);
  for (std::size_t i = 0; i < 16; ++i) {
    for (std::size_t j = 0; j < 16; ++j) {
      if (i != j) {
        CHECK(std::abs(r(i, j)) <= 1e-12);
        continue;
      }
      const int weight = std::popcount(i);
      // Hand expansion over the 9 pairings: extremes get (6/8 + 3/4)/9,
      // weight-1/3 indices (3/8)/9, weight-2 indices (2/8 + 1/4)/9.
      const double expected = (weight == 0 || weight == 4) ? 1.0 / 6.0
                              : (weight == 1 || weight == 3) ? 1.0 / 24.0
                                                             : 1.0 / 18.0;
      CHECK(std::abs(r(i, i) - expected) <= 1e-12);
    }
  }
}

TEST_CASE("pure-state measure anchors") {
  for (std::size_t half : {0, 1, 2, 3}) {
    for (double sign : {1.0, -1.0}) {
      CHECK(std::abs((mre_pure(ghz_cat(half, sign)).mre) - (1.0)) <= 1e-9);
    }
  }

  Rng rng(52);
  const double half_log3 = 0.5 * std::log2(3.0);
  for (int s = 0; s < 3; ++s) {
    for (int t = s + 1; t < 3; ++t) {
      for (int bell = 0; bell < 4; ++bell) {
        const StateVector psi = extended_bell(s, t, bell, random_qubit(rng));
        CHECK(std::abs((mre_pure(psi).mre) - (half_log3)) <= 1e-9);
      }
    }
  }

  for (int family = 0; family < 4; ++family) {
    for (int k = 0; k <= 10; ++k) {
      const double w = k / 10.0;
      CHECK(std::abs((mre_pure(ghz_like(family, w)).mre) - (binary_entropy(w))) <= 1e-8);
    }
  }

  for (int rep = 0; rep < 20; ++rep) {
    CHECK(mre_pure(random_product_state(3, rng)).mre <= 1e-9);
  }
}

TEST_CASE("the relative density matrix is a valid state and the measure is non-negative") {
  Rng rng(53);
  for (int rep = 0; rep < 200; ++rep) {
    const StateVector psi = random_state(3, rng);
    const DensityMatrix r = relative_density_n(psi);  // construction validates trace/PSD
    CHECK(std::abs(r.matrix().trace() - Complex{1.0}) <= 1e-10);
    const double value = mre_pure(psi).mre;
    CHECK(value >= 0.0);
    // n * k_n = 3/2 caps every value seen in practice; the tight ceiling is
    // not 1 (see the W-state anchor below).
    CHECK(value <= 1.5 + 1e-9);
  }
}

TEST_CASE("the W state exceeds the cat-state value") {
  // All three conditional pair blocks are a Bell state of weight 2/3 plus a
  // product block of weight 1/3, which makes the reference mixture diagonal
  // with entries 5/27 on the weight-one basis states. The measure is then
  // log2(27/5) / 2 = 1.2164797..., strictly above the cat-state value 1.
  const MeasureReport report = mre_pure(w_state());
  CHECK(std::abs(report.mre - 0.5 * std::log2(27.0 / 5.0)) <= 1e-12);
  const ComplexMatrix r = relative_density_n(w_state()).matrix();
  CHECK(std::abs(r(1, 1) - 5.0 / 27.0) <= 1e-14);
  CHECK(std::abs(r(0, 0) - 2.0 / 9.0) <= 1e-14);
  CHECK(std::abs(r(3, 3) - 2.0 / 27.0) <= 1e-14);
  CHECK(std::abs(r(7, 7)) <= 1e-14);
}

TEST_CASE("party permutations carry the construction along") {
  Rng rng(54);
  for (int rep = 0; rep < 5; ++rep) {
    const StateVector psi = random_state(3, rng);
    for (const auto& perm : std::vector<std::vector<int>>{{1, 0, 2}, {2, 1, 0}, {1, 2, 0}}) {
      const StateVector permuted = permute_qubits(psi, perm);
      const ComplexMatrix direct = relative_density_n(permuted).matrix();
      const ComplexMatrix carried =
          permute_matrix_qubits(relative_density_n(psi).matrix(), 3, perm);
      CHECK(direct.max_abs_diff(carried) <= 1e-12);
      CHECK(std::abs((mre_pure(permuted).mre) - (mre_pure(psi).mre)) <= 1e-9);
    }
  }
}

TEST_CASE("conditional-block Bloch norms match the amplitude determinants") {
  // xi of each conditional block equals sqrt(1 - 4|det|^2 / p^2) with det the
  // 2x2 determinant of the block's amplitude matrix.
  Rng rng(55);
  for (int rep = 0; rep < 25; ++rep) {
    const StateVector psi = random_state(3, rng);
    const auto& a = psi.amplitudes();
    struct Case {
      int s, t;
      int block;          // conditioning outcome
      Complex determinant;
    };
    const Case cases[6] = {
        {0, 1, 0, a[0] * a[6] - a[2] * a[4]},  // even block of (A,B)
        {0, 1, 1, a[1] * a[7] - a[3] * a[5]},
        {0, 2, 0, a[0] * a[5] - a[1] * a[4]},
        {0, 2, 1, a[2] * a[7] - a[3] * a[6]},
        {1, 2, 0, a[0] * a[3] - a[1] * a[2]},
        {1, 2, 1, a[4] * a[7] - a[5] * a[6]},
    };
    for (const Case& c : cases) {
      const PairDecomposition d = pair_conditional_decomposition(psi, c.s, c.t);
      REQUIRE(d.term_count() == 2);
      const double p = d.terms[c.block].weight;
      const double expected =
          std::sqrt(std::max(0.0, 1.0 - 4.0 * std::norm(c.determinant) / (p * p)));
      CHECK(std::abs((pair_basis(d.terms[c.block].pure_state).xi) - (expected)) <= 1e-10);
    }
  }
}

TEST_CASE("measure reports carry the convention and prefactor") {
  const MeasureReport report = mre_pure(ghz3(), Convention::printed);
  CHECK(report.convention == Convention::printed);
  CHECK(report.kn.num == 1);
  CHECK(report.kn.den == 2);
  CHECK(report.relative_entropy == doctest::Approx(2.0).epsilon(1e-12));
  CHECK(report.n_qubits == 3);
}
