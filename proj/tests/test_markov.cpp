#include <catch2/catch_amalgamated.hpp>

#include "eea/constructions.hpp"
#include "eea/markov.hpp"
#include "support/helpers.hpp"

using namespace eea;
using eea::testing::make_algebra;

namespace {

const FieldDescriptor Q = FieldDescriptor::rational();

// 0/1 adjacency scaled to rows summing to one (d-regular input)
EvolutionAlgebra uniform_walk(const EvolutionAlgebra& adj, int d) {
  EvolutionAlgebra a(adj.dim(), Q);
  for (int i = 0; i < adj.dim(); ++i)
    for (int j = 0; j < adj.dim(); ++j)
      if (!adj.entry_is_zero(i, j))
        a.set_entry(i, j, Scalar::from_rational(mpq_class(1, d)));
  return a;
}

}  // namespace

TEST_CASE("stochasticity checks") {
  EvolutionAlgebra pwalk = uniform_walk(petersen_algebra(Q), 3);
  CHECK(is_markov(pwalk));
  CHECK(is_doubly_stochastic(pwalk));
  CHECK_FALSE(is_markov(petersen_algebra(Q)));  // rows sum to 3
  EvolutionAlgebra negative = make_algebra({{"3/2", "-1/2"}, {"1/2", "1/2"}});
  CHECK_FALSE(is_markov(negative));
  CHECK_THROWS_AS(is_markov(cycle_algebra(3, FieldDescriptor::prime(3))), FieldMismatchError);

  SECTION("row-stochastic but not doubly stochastic") {
    EvolutionAlgebra rs = make_algebra({{"1/2", "1/2"}, {"1", "0"}});
    CHECK(is_markov(rs));
    CHECK_FALSE(is_doubly_stochastic(rs));
  }
  SECTION("uniform matrix 1/n") {
    EvolutionAlgebra u = make_algebra({{"1/3", "1/3", "1/3"},
                                       {"1/3", "1/3", "1/3"},
                                       {"1/3", "1/3", "1/3"}});
    CHECK(is_doubly_stochastic(u));
  }
  SECTION("real-field tolerance") {
    auto R = FieldDescriptor::real();
    EvolutionAlgebra r = make_algebra({{"0.5", "0.5"}, {"0.5", "0.5"}}, R);
    CHECK(is_doubly_stochastic(r));
  }
}

TEST_CASE("irreducibility = strong connectivity of the positive digraph") {
  CHECK(is_irreducible(uniform_walk(petersen_algebra(Q), 3)));
  EvolutionAlgebra chain = make_algebra({{"0", "1", "0"},
                                         {"0", "0", "1"},
                                         {"0", "0", "1"}});
  CHECK(is_markov(chain));
  CHECK_FALSE(is_irreducible(chain));
  EvolutionAlgebra single = make_algebra({{"1"}});
  CHECK(is_irreducible(single));
  CHECK_THROWS_AS(is_irreducible(petersen_algebra(Q)), DomainError);
}

TEST_CASE("mixing simulation on the Petersen walk") {
  EvolutionAlgebra walk = uniform_walk(petersen_algebra(Q), 3);
  MixingTrace tr = mixing_simulation(walk, 0, 60);

  SECTION("k = 0 distance is 2(1 - 1/n)") {
    CHECK_THAT(tr.distances[0], Catch::Matchers::WithinAbs(1.8, 1e-12));
  }
  SECTION("distances decay to zero monotonically within noise") {
    for (int k = 0; k < 60; ++k) CHECK(tr.distances[k + 1] <= tr.distances[k] + 1e-9);
    CHECK(tr.distances[60] < 1e-8);
  }
  SECTION("conservation: mass stays 1") {
    // reuse the exact path to cross-check the double iteration
    MixingOptions exact;
    exact.exact = true;
    MixingTrace tre = mixing_simulation(walk, 0, 20, exact);
    for (int k = 0; k <= 20; ++k)
      CHECK_THAT(tr.distances[k], Catch::Matchers::WithinAbs(tre.distances[k], 1e-10));
  }
  SECTION("rejects non-doubly-stochastic input") {
    EvolutionAlgebra rs = make_algebra({{"1/2", "1/2"}, {"1", "0"}});
    CHECK_THROWS_AS(mixing_simulation(rs, 0, 5), DomainError);
  }
}

TEST_CASE("periodic chain: C_4 with half weights never mixes") {
  EvolutionAlgebra c4 = uniform_walk(cycle_algebra(4, Q), 2);
  MixingTrace tr = mixing_simulation(c4, 0, 30);
  CHECK_THAT(tr.distances[0], Catch::Matchers::WithinAbs(1.5, 1e-12));
  for (int k = 1; k <= 30; ++k) CHECK_THAT(tr.distances[k], Catch::Matchers::WithinAbs(1.0, 1e-12));
  CHECK_FALSE(tr.empirical_tmix(0.01).has_value());
}

TEST_CASE("mixing bounds") {
  SECTION("paper bound arithmetic") {
    CHECK_THAT(paper_mixing_bound(10, mpq_class(1), 3, 0), Catch::Matchers::WithinAbs(10.0, 1e-12));
    CHECK_THAT(paper_mixing_bound(10, mpq_class(1), 3, 1),
               Catch::Matchers::WithinAbs(10.0 * (1.0 - 1.0 / 18.0), 1e-12));
    // h = d: rate 1/2
    CHECK_THAT(paper_mixing_bound(8, mpq_class(3), 3, 2),
               Catch::Matchers::WithinAbs(8.0 * 0.25, 1e-12));
    CHECK_THROWS_AS(paper_mixing_bound(4, mpq_class(0), 2, 1), DomainError);
  }
  SECTION("corrected bound: sqrt(n) mu_*^k") {
    EvolutionAlgebra walk = uniform_walk(petersen_algebra(Q), 3);
    Spectrum s = symmetric_eigenvalues(to_real_matrix(walk), 10);
    CHECK_THAT(corrected_mixing_bound(s, 10, 0), Catch::Matchers::WithinAbs(std::sqrt(10.0), 1e-9));
    CHECK_THAT(corrected_mixing_bound(s, 10, 2),
               Catch::Matchers::WithinAbs(std::sqrt(10.0) * 4.0 / 9.0, 1e-8));

    EvolutionAlgebra c4 = uniform_walk(cycle_algebra(4, Q), 2);
    Spectrum s4 = symmetric_eigenvalues(to_real_matrix(c4), 4);
    // mu_n = -1: the bound never decays, consistent with non-mixing
    CHECK_THAT(corrected_mixing_bound(s4, 4, 50), Catch::Matchers::WithinAbs(2.0, 1e-9));
  }
  SECTION("t_mix bound (Cor 6.4)") {
    CHECK_THAT(tmix_bound(10, mpq_class(1), 3, 0.01),
               Catch::Matchers::WithinAbs(18.0 * std::log(1000.0), 1e-9));
    CHECK(tmix_bound(10, mpq_class(1), 3, 10.0) == 0.0);
    CHECK_THAT(tmix_bound(10, mpq_class(1), 6, 0.01) / tmix_bound(10, mpq_class(1), 3, 0.01),
               Catch::Matchers::WithinAbs(4.0, 1e-9));  // doubling d quadruples it
    CHECK_THROWS_AS(tmix_bound(10, mpq_class(1), 3, 0.0), DomainError);
  }
}

TEST_CASE("property: corrected bound dominates simulated distances") {
  std::mt19937_64 seeds(13);
  for (int trial = 0; trial < 12; ++trial) {
    int d = 3 + static_cast<int>(seeds() % 2);
    int n;
    do {
      n = 6 + static_cast<int>(seeds() % 9);
    } while ((n * d) % 2 != 0);
    EvolutionAlgebra adj = random_regular_algebra(n, d, seeds(), Q);
    EvolutionAlgebra walk = uniform_walk(adj, d);
    Spectrum s = symmetric_eigenvalues(to_real_matrix(walk), n);
    MixingTrace tr = mixing_simulation(walk, 0, 40);
    for (int k = 0; k <= 40; ++k)
      CHECK(tr.distances[k] <= corrected_mixing_bound(s, n, k) + 1e-8);
  }
}

TEST_CASE("property: Markov h-EEAs with h > 0 are irreducible") {
  std::mt19937_64 seeds(29);
  for (int trial = 0; trial < 12; ++trial) {
    int d = 3;
    int n = 6 + 2 * static_cast<int>(seeds() % 5);
    EvolutionAlgebra adj = random_regular_algebra(n, d, seeds(), Q);
    SimpleGraph g = underlying_graph(adj);
    if (!is_connected(g)) continue;
    EvolutionAlgebra walk = uniform_walk(adj, d);
    CHECK(cheeger_exact(g).value > 0);
    CHECK(is_irreducible(walk));
  }
}
