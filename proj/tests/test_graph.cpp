#include <catch2/catch_amalgamated.hpp>

#include "eea/constructions.hpp"
#include "support/helpers.hpp"

using namespace eea;
using eea::testing::make_algebra;

namespace {
const FieldDescriptor Q = FieldDescriptor::rational();
}

TEST_CASE("underlying graph symmetrizes the support pattern") {
  EvolutionAlgebra c6 = cycle_algebra(6, Q);
  SimpleGraph g = underlying_graph(c6);
  CHECK(g.n == 6);
  CHECK(g.edges.size() == 6);
  CHECK(g.has_edge(0, 5));
  CHECK(g.has_edge(0, 1));
  CHECK_FALSE(g.has_edge(0, 2));

  SECTION("diagonal entries contribute nothing") {
    EvolutionAlgebra diag = make_algebra({{"1", "0"}, {"0", "1"}});
    CHECK(underlying_graph(diag).edges.empty());
  }
  SECTION("one-sided entries still give an edge") {
    EvolutionAlgebra oneway = make_algebra({{"0", "1"}, {"0", "0"}});
    SimpleGraph h = underlying_graph(oneway);
    CHECK(h.edges == std::vector<std::pair<int, int>>{{0, 1}});
  }
}

TEST_CASE("digraph holds one weighted arc per nonzero off-diagonal entry") {
  EvolutionAlgebra c3 = cycle_algebra(3, Q);
  Digraph d = digraph(c3);
  CHECK(d.n == 3);
  CHECK(d.arcs.size() == 6);

  EvolutionAlgebra diag = make_algebra({{"1", "0"}, {"0", "1"}});
  CHECK(digraph(diag).arcs.empty());

  EvolutionAlgebra oneway = make_algebra({{"0", "1/2"}, {"0", "0"}});
  Digraph d2 = digraph(oneway);
  REQUIRE(d2.arcs.size() == 1);
  CHECK(d2.arcs[0].from == 0);
  CHECK(d2.arcs[0].to == 1);
  CHECK(d2.arcs[0].weight.str() == "1/2");
}

TEST_CASE("connectivity and components") {
  CHECK(is_connected(underlying_graph(cycle_algebra(6, Q))));
  SimpleGraph edgeless = SimpleGraph::from_edges(2, {});
  CHECK_FALSE(is_connected(edgeless));
  CHECK(connected_components(edgeless) == std::vector<std::vector<int>>{{0}, {1}});

  EvolutionAlgebra ds = direct_sum(cycle_algebra(3, Q), cycle_algebra(4, Q));
  CHECK(connected_components(underlying_graph(ds)).size() == 2);
}

TEST_CASE("distances, balls, diameter") {
  SimpleGraph c6 = underlying_graph(cycle_algebra(6, Q));
  CHECK(diameter(c6) == 3);
  CHECK(distance(c6, 0, 3) == 3);
  CHECK(ball(c6, 0, 1) == std::vector<int>{0, 1, 5});
  CHECK(ball(c6, 0, 3).size() == 6);

  SimpleGraph k4 = underlying_graph(complete_algebra(4, Q));
  CHECK(diameter(k4) == 1);

  SimpleGraph edgeless = SimpleGraph::from_edges(2, {});
  CHECK_FALSE(diameter(edgeless).has_value());
  CHECK_FALSE(distance(edgeless, 0, 1).has_value());
}

TEST_CASE("degrees and regularity") {
  CHECK(is_regular(underlying_graph(petersen_algebra(Q))) == 3);
  CHECK(is_regular(underlying_graph(cycle_algebra(8, Q))) == 2);
  SimpleGraph star = SimpleGraph::from_edges(4, {{0, 1}, {0, 2}, {0, 3}});
  CHECK_FALSE(is_regular(star).has_value());
  CHECK(degrees(star) == std::vector<int>{3, 1, 1, 1});
}

TEST_CASE("directed cycles") {
  CHECK(has_directed_cycle(digraph(cycle_algebra(3, Q))));
  EvolutionAlgebra chain = make_algebra({{"0", "1", "1"}, {"0", "0", "1"}, {"0", "0", "0"}});
  CHECK_FALSE(has_directed_cycle(digraph(chain)));
  EvolutionAlgebra arc = make_algebra({{"0", "1"}, {"0", "0"}});
  CHECK_FALSE(has_directed_cycle(digraph(arc)));
}

TEST_CASE("dot export and edge-list parsing") {
  SimpleGraph g = SimpleGraph::from_edges(3, {{0, 1}, {1, 2}});
  std::string dot = to_dot(g);
  CHECK(dot.find("0 -- 1;") != std::string::npos);
  CHECK(dot.find("1 -- 2;") != std::string::npos);

  std::string dd = to_dot(digraph(make_algebra({{"0", "2"}, {"0", "0"}})));
  CHECK(dd.find("0 -> 1 [label=\"2\"];") != std::string::npos);

  SimpleGraph parsed = parse_edge_list("# comment\n0 1\n1 2\n4\n");
  CHECK(parsed.n == 4);
  CHECK(parsed.edges == std::vector<std::pair<int, int>>{{0, 1}, {1, 2}});
  CHECK_THROWS_AS(parse_edge_list("0 1 2\n"), ParseError);
  CHECK_THROWS_AS(SimpleGraph::from_edges(2, {{0, 0}}), DomainError);
}

TEST_CASE("property: underlying graph invariant under rescaling, relabeled by permutation") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 30; ++trial) {
    int n = 2 + static_cast<int>(rng() % 6);
    EvolutionAlgebra a = eea::testing::random_algebra(n, Q, rng);
    SimpleGraph g = underlying_graph(a);

    std::vector<Scalar> lambdas;
    for (int i = 0; i < n; ++i) {
      mpq_class q;
      do {
        q = eea::testing::random_rational(rng);
      } while (q == 0);
      lambdas.push_back(Scalar::from_rational(q));
    }
    CHECK(underlying_graph(rescale_basis(a, lambdas)).edges == g.edges);

    std::vector<int> sigma(n);
    for (int i = 0; i < n; ++i) sigma[i] = i;
    for (int i = n - 1; i > 0; --i)
      std::swap(sigma[i], sigma[rng() % static_cast<unsigned long>(i + 1)]);
    SimpleGraph relabeled = underlying_graph(permute_basis(a, sigma));
    std::set<std::pair<int, int>> expect;
    for (auto [u, v] : g.edges) {
      int x = sigma[u], y = sigma[v];
      if (x > y) std::swap(x, y);
      expect.emplace(x, y);
    }
    CHECK(relabeled.edges == std::vector<std::pair<int, int>>(expect.begin(), expect.end()));
  }
}

TEST_CASE("property: underlying graph is the symmetrization of the digraph") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 20; ++trial) {
    int n = 2 + static_cast<int>(rng() % 6);
    EvolutionAlgebra a = eea::testing::random_algebra(n, Q, rng);
    SimpleGraph g = underlying_graph(a);
    Digraph d = digraph(a);
    std::set<std::pair<int, int>> sym;
    for (const auto& arc : d.arcs) {
      int u = arc.from, v = arc.to;
      if (u > v) std::swap(u, v);
      sym.emplace(u, v);
    }
    CHECK(g.edges == std::vector<std::pair<int, int>>(sym.begin(), sym.end()));
  }
}
