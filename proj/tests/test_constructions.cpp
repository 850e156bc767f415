#include <catch2/catch_amalgamated.hpp>

#include "eea/constructions.hpp"
#include "eea/expansion.hpp"
#include "support/helpers.hpp"

using namespace eea;

namespace {
const FieldDescriptor Q = FieldDescriptor::rational();
}

TEST_CASE("named algebra families") {
  SECTION("cycle") {
    EvolutionAlgebra c = cycle_algebra(6, Q);
    CHECK(is_regular(underlying_graph(c)) == 2);
    CHECK(cheeger_exact(underlying_graph(c)).value == mpq_class(2, 3));
    CHECK_THROWS_AS(cycle_algebra(2, Q), DomainError);
  }
  SECTION("complete") {
    EvolutionAlgebra k = complete_algebra(6, Q);
    CHECK(is_regular(underlying_graph(k)) == 5);
    CHECK(cheeger_exact(underlying_graph(k)).value == 3);
    CHECK_THROWS_AS(complete_algebra(1, Q), DomainError);
  }
  SECTION("petersen is 3-regular on 10 vertices and Ramanujan") {
    EvolutionAlgebra p = petersen_algebra(Q);
    SimpleGraph g = underlying_graph(p);
    CHECK(g.n == 10);
    CHECK(is_regular(g) == 3);
    CHECK(g.edges.size() == 15);
    CHECK(is_ramanujan(p).ramanujan);
    // girth 5: no triangles, no 4-cycles
    for (auto [u, v] : g.edges)
      for (int w = 0; w < 10; ++w)
        if (w != u && w != v) CHECK_FALSE((g.has_edge(u, w) && g.has_edge(v, w)));
  }
}

TEST_CASE("cayley evolution algebras") {
  SECTION("Cay(Z_n, {+-1}) is the cycle algebra") {
    FiniteGroup z6 = cyclic_group(6);
    GeneratingSet s = make_generating_set(z6, {1, 5});
    CayleyResult r = cayley_evolution_algebra(z6, s, Q);
    CHECK(r.generates);
    SimpleGraph g = underlying_graph(r.algebra);
    CHECK(is_regular(g) == 2);
    CHECK(is_connected(g));
    CHECK(g.edges.size() == 6);
    CHECK(cheeger_exact(g).value == mpq_class(2, 3));
  }
  SECTION("S_3 with two transpositions: a 6-cycle") {
    FiniteGroup s3 = symmetric_group(3);
    // find the transpositions (01) and (12) by label
    std::vector<int> gens;
    for (int g = 0; g < 6; ++g)
      if (s3.label(g) == "[1,0,2]" || s3.label(g) == "[0,2,1]") gens.push_back(g);
    REQUIRE(gens.size() == 2);
    CayleyResult r = cayley_evolution_algebra(s3, make_generating_set(s3, gens), Q);
    CHECK(r.generates);
    SimpleGraph g = underlying_graph(r.algebra);
    CHECK(is_regular(g) == 2);
    CHECK(is_connected(g));
    CHECK(g.edges.size() == 6);  // one 6-cycle
  }
  SECTION("non-generating set is flagged, not rejected") {
    FiniteGroup z6 = cyclic_group(6);
    GeneratingSet s = make_generating_set(z6, {2, 4});
    CayleyResult r = cayley_evolution_algebra(z6, s, Q);
    CHECK_FALSE(r.generates);
    CHECK_FALSE(is_connected(underlying_graph(r.algebra)));
    CHECK(cheeger_exact(underlying_graph(r.algebra)).value == 0);
  }
  SECTION("identity or asymmetric sets are rejected upstream") {
    FiniteGroup z5 = cyclic_group(5);
    CHECK_THROWS_AS(make_generating_set(z5, {0}), DomainError);
    CHECK_THROWS_AS(make_generating_set(z5, {1}), DomainError);
  }
}

TEST_CASE("property: Cayley graphs are |S|-regular and left-translation invariant") {
  FiniteGroup d5 = dihedral_group(5);
  // rotation r (index of [1,2,3,4,0]-style perm) and a reflection
  std::vector<int> gens;
  for (int g = 0; g < d5.order(); ++g)
    if (g != d5.identity() && d5.inverse(g) == g) gens.push_back(g);  // involutions
  REQUIRE(gens.size() >= 2);
  gens.resize(2);
  CayleyResult r = cayley_evolution_algebra(d5, make_generating_set(d5, gens), Q);
  SimpleGraph g = underlying_graph(r.algebra);
  CHECK(is_regular(g) == 2);

  // left translation x -> gx permutes the basis and preserves the matrix
  for (int t : {1, 3}) {
    std::vector<int> sigma(d5.order());
    for (int x = 0; x < d5.order(); ++x) sigma[x] = d5.op(t, x);
    EvolutionAlgebra moved = permute_basis(r.algebra, sigma);
    for (int i = 0; i < d5.order(); ++i)
      for (int j = 0; j < d5.order(); ++j)
        CHECK(moved.entry(i, j) == r.algebra.entry(i, j));
  }
}

TEST_CASE("kronecker products") {
  SECTION("K_3 (x) K_3: 9-dim, 4-regular") {
    EvolutionAlgebra k3 = complete_algebra(3, Q);
    EvolutionAlgebra p = kronecker_product(k3, k3);
    CHECK(p.dim() == 9);
    SimpleGraph g = underlying_graph(p);
    CHECK(is_regular(g) == 4);
    CHECK(is_connected(g));
  }
  SECTION("anything (x) 1-dim zero algebra is the zero matrix") {
    EvolutionAlgebra zero1(1, Q);
    EvolutionAlgebra p = kronecker_product(cycle_algebra(3, Q), zero1);
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) CHECK(p.entry_is_zero(i, j));
  }
  SECTION("C_4 (x) C_4 is disconnected with h = 0") {
    EvolutionAlgebra c4 = cycle_algebra(4, Q);
    EvolutionAlgebra p = kronecker_product(c4, c4);
    SimpleGraph g = underlying_graph(p);
    CHECK_FALSE(is_connected(g));
    CHECK(cheeger_exact(g).value == 0);
  }
  SECTION("field mismatch") {
    CHECK_THROWS_AS(
        kronecker_product(cycle_algebra(3, Q), cycle_algebra(3, FieldDescriptor::real())),
        FieldMismatchError);
  }
  SECTION("edge rule: (i,j) ~ (k,l) iff i~k and j~l, exhaustive on small factors") {
    // the categorical-product characterization needs symmetric support and a
    // zero diagonal in both factors; one-way or diagonal entries add edges
    // outside it (checked separately below)
    auto symmetrize = [](EvolutionAlgebra a) {
      for (int i = 0; i < a.dim(); ++i) {
        a.set_entry(i, i, Scalar::zero(a.field()));
        for (int j = 0; j < a.dim(); ++j)
          if (!a.entry_is_zero(i, j)) a.set_entry(j, i, a.entry(i, j));
      }
      return a;
    };
    std::mt19937_64 rng(2);
    for (int trial = 0; trial < 10; ++trial) {
      int n1 = 2 + static_cast<int>(rng() % 4), n2 = 2 + static_cast<int>(rng() % 4);
      EvolutionAlgebra a1 = symmetrize(eea::testing::random_algebra(n1, Q, rng, 50));
      EvolutionAlgebra a2 = symmetrize(eea::testing::random_algebra(n2, Q, rng, 50));
      SimpleGraph g1 = underlying_graph(a1), g2 = underlying_graph(a2);
      SimpleGraph gp = underlying_graph(kronecker_product(a1, a2));
      for (int i = 0; i < n1; ++i)
        for (int j = 0; j < n2; ++j)
          for (int k = 0; k < n1; ++k)
            for (int l = 0; l < n2; ++l) {
              if (i * n2 + j >= k * n2 + l) continue;
              bool expect = i != k && j != l && g1.has_edge(i, k) && g2.has_edge(j, l);
              CHECK(gp.has_edge(i * n2 + j, k * n2 + l) == expect);
            }
    }
  }
  SECTION("one-way factor entries fall outside the categorical product rule") {
    // a1 has only 0->1, a2 has only 1->0.  Both factor graphs have their
    // edge, so the categorical rule predicts edges {(0,0),(1,1)} and
    // {(0,1),(1,0)}; only the second survives, because the first needs
    // arcs that point the same way in both factors
    EvolutionAlgebra a1 = eea::testing::make_algebra({{"0", "1"}, {"0", "0"}});
    EvolutionAlgebra a2 = eea::testing::make_algebra({{"0", "0"}, {"1", "0"}});
    SimpleGraph gp = underlying_graph(kronecker_product(a1, a2));
    CHECK(underlying_graph(a1).has_edge(0, 1));
    CHECK(underlying_graph(a2).has_edge(0, 1));
    CHECK(gp.has_edge(0 * 2 + 1, 1 * 2 + 0));
    CHECK_FALSE(gp.has_edge(0 * 2 + 0, 1 * 2 + 1));
  }
  SECTION("diagonal factor entries add edges beyond the categorical product") {
    EvolutionAlgebra a1 = eea::testing::make_algebra({{"1", "0"}, {"0", "0"}});
    EvolutionAlgebra a2 = eea::testing::make_algebra({{"0", "1"}, {"1", "0"}});
    SimpleGraph gp = underlying_graph(kronecker_product(a1, a2));
    // (0,0) ~ (0,1) through a1_00 * a2_01, a same-row pair
    CHECK(gp.has_edge(0, 1));
  }
  SECTION("eigenvalue multiplicativity on small factors") {
    EvolutionAlgebra a = cycle_algebra(4, Q), b = complete_algebra(3, Q);
    Spectrum sa = symmetric_eigenvalues(to_real_matrix(a), 4);
    Spectrum sb = symmetric_eigenvalues(to_real_matrix(b), 3);
    Spectrum sp = symmetric_eigenvalues(to_real_matrix(kronecker_product(a, b)), 12);
    std::vector<double> products;
    for (double x : sa.eigenvalues)
      for (double y : sb.eigenvalues) products.push_back(x * y);
    std::sort(products.rbegin(), products.rend());
    for (int i = 0; i < 12; ++i)
      CHECK_THAT(sp.eigenvalues[i], Catch::Matchers::WithinAbs(products[i], 1e-8));
  }
}

TEST_CASE("direct sums") {
  EvolutionAlgebra ds = direct_sum(cycle_algebra(3, Q), cycle_algebra(4, Q));
  CHECK(ds.dim() == 7);
  CHECK(cheeger_exact(underlying_graph(ds)).value == 0);
  auto blocks = connected_components(underlying_graph(ds));
  REQUIRE(blocks.size() == 2);
  CHECK(blocks[0] == std::vector<int>{0, 1, 2});
  CHECK(blocks[1] == std::vector<int>{3, 4, 5, 6});
}

TEST_CASE("random regular algebras") {
  SECTION("determinism: same seed, same graph") {
    EvolutionAlgebra a = random_regular_algebra(10, 3, 1, Q);
    EvolutionAlgebra b = random_regular_algebra(10, 3, 1, Q);
    CHECK(underlying_graph(a).edges == underlying_graph(b).edges);
    EvolutionAlgebra c = random_regular_algebra(10, 3, 2, Q);
    CHECK(underlying_graph(a).edges != underlying_graph(c).edges);
  }
  SECTION("(n=4, d=3) forces K_4") {
    EvolutionAlgebra a = random_regular_algebra(4, 3, 7, Q);
    CHECK(underlying_graph(a).edges.size() == 6);
  }
  SECTION("parity violation") {
    CHECK_THROWS_AS(random_regular_algebra(5, 3, 1, Q), DomainError);
  }
  SECTION("output is symmetric, graphicable, d-regular") {
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
      EvolutionAlgebra a = random_regular_algebra(12, 4, seed, Q);
      CHECK(is_symmetric(a));
      CHECK(is_graphicable(a));
      CHECK(is_regular(underlying_graph(a)) == 4);
    }
  }
}

TEST_CASE("LPS Cayley algebra: X^{17,13} is 18-regular Ramanujan on PSL_2(F_13)") {
  LpsConstruction lps = lps_generating_set(17, 13);
  CayleyResult r = cayley_evolution_algebra(lps.group, lps.gens, FieldDescriptor::real());
  CHECK(r.generates);
  SimpleGraph g = underlying_graph(r.algebra);
  CHECK(g.n == 1092);
  CHECK(is_regular(g) == 18);
  CHECK(is_connected(g));
  RamanujanVerdict v = is_ramanujan(r.algebra);
  CHECK(v.partial_spectrum);  // n > 512 takes the extremes path
  CHECK(v.ramanujan);
}
