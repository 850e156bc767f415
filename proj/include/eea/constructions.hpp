#pragma once

#include <array>
#include <cstdint>
#include <random>
#include <set>
#include <utility>
#include <vector>

#include "eea/algebra.hpp"
#include "eea/graph.hpp"
#include "eea/group.hpp"

namespace eea {

// e_i^2 = e_{i-1} + e_{i+1} (indices mod n); underlying graph C_n.
inline EvolutionAlgebra cycle_algebra(int n, FieldDescriptor field) {
  if (n < 3) throw DomainError("cycle_algebra needs n >= 3");
  EvolutionAlgebra a(n, field);
  const Scalar one = Scalar::one(field);
  for (int i = 0; i < n; ++i) {
    a.set_entry(i, (i + 1) % n, one);
    a.set_entry(i, (i + n - 1) % n, one);
  }
  return a;
}

// e_i^2 = sum_{j != i} e_j; underlying graph K_n.
inline EvolutionAlgebra complete_algebra(int n, FieldDescriptor field) {
  if (n < 2) throw DomainError("complete_algebra needs n >= 2");
  EvolutionAlgebra a(n, field);
  const Scalar one = Scalar::one(field);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j) a.set_entry(i, j, one);
  return a;
}

// Kneser K(5,2) labeling: vertices are the 2-subsets of {0..4} in
// lexicographic order, adjacent iff disjoint.
inline EvolutionAlgebra petersen_algebra(FieldDescriptor field) {
  std::vector<std::pair<int, int>> subsets;
  for (int x = 0; x < 5; ++x)
    for (int y = x + 1; y < 5; ++y) subsets.emplace_back(x, y);
  EvolutionAlgebra a(10, field);
  const Scalar one = Scalar::one(field);
  for (int i = 0; i < 10; ++i)
    for (int j = 0; j < 10; ++j) {
      if (i == j) continue;
      auto [p, q] = subsets[i];
      auto [r, s] = subsets[j];
      if (p != r && p != s && q != r && q != s) a.set_entry(i, j, one);
    }
  return a;
}

struct CayleyResult {
  EvolutionAlgebra algebra;
  // false when S fails to generate G: the algebra is flagged disconnected,
  // not rejected
  bool generates = true;
};

// e_g^2 = sum_{s in S} e_{gs}; the underlying graph is Cay(G, S).
inline CayleyResult cayley_evolution_algebra(const FiniteGroup& g, const GeneratingSet& s,
                                             FieldDescriptor field) {
  if (s.indices.empty()) throw DomainError("cayley_evolution_algebra: empty generating set");
  for (int x : s.indices) {
    if (x == g.identity())
      throw DomainError("cayley_evolution_algebra: identity in generating set");
    if (std::find(s.indices.begin(), s.indices.end(), g.inverse(x)) == s.indices.end())
      throw DomainError("cayley_evolution_algebra: generating set is not symmetric");
  }
  const int n = g.order();
  CayleyResult out{EvolutionAlgebra(n, field), true};
  const Scalar one = Scalar::one(field);
  for (int v = 0; v < n; ++v)
    for (int x : s.indices) out.algebra.set_entry(v, g.op(v, x), one);

  // reachability from the identity decides whether S generates G
  std::vector<bool> seen(n, false);
  std::vector<int> stack{g.identity()};
  seen[g.identity()] = true;
  int count = 0;
  while (!stack.empty()) {
    int u = stack.back();
    stack.pop_back();
    ++count;
    for (int x : s.indices) {
      int v = g.op(u, x);
      if (!seen[v]) {
        seen[v] = true;
        stack.push_back(v);
      }
    }
  }
  out.generates = count == n;
  return out;
}

// a_{(i,j),(k,l)} = a1_ik * a2_jl with row-major pair index (i,j) -> i*n2 + j.
inline EvolutionAlgebra kronecker_product(const EvolutionAlgebra& a1,
                                          const EvolutionAlgebra& a2) {
  require_same_field(a1.field(), a2.field(), "kronecker_product");
  const int n1 = a1.dim(), n2 = a2.dim();
  EvolutionAlgebra out(n1 * n2, a1.field());
  for (int i = 0; i < n1; ++i)
    for (int k = 0; k < n1; ++k) {
      if (a1.entry_is_zero(i, k)) continue;
      const Scalar aik = a1.entry(i, k);
      for (int j = 0; j < n2; ++j)
        for (int l = 0; l < n2; ++l) {
          if (a2.entry_is_zero(j, l)) continue;
          out.set_entry(i * n2 + j, k * n2 + l, aik * a2.entry(j, l));
        }
    }
  return out;
}

// Block-diagonal structural matrix; always has h = 0.
inline EvolutionAlgebra direct_sum(const EvolutionAlgebra& a1, const EvolutionAlgebra& a2) {
  require_same_field(a1.field(), a2.field(), "direct_sum");
  const int n1 = a1.dim(), n2 = a2.dim();
  EvolutionAlgebra out(n1 + n2, a1.field());
  for (int i = 0; i < n1; ++i)
    for (int j = 0; j < n1; ++j)
      if (!a1.entry_is_zero(i, j)) out.set_entry(i, j, a1.entry(i, j));
  for (int i = 0; i < n2; ++i)
    for (int j = 0; j < n2; ++j)
      if (!a2.entry_is_zero(i, j)) out.set_entry(n1 + i, n1 + j, a2.entry(i, j));
  return out;
}

namespace detail {

// unbiased bounded draw (rejection), so the pairing model stays exactly
// uniform and byte-reproducible for a fixed seed
inline std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t m) {
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                              std::numeric_limits<std::uint64_t>::max() % m;
  std::uint64_t x;
  do {
    x = rng();
  } while (x >= limit);
  return x % m;
}

}  // namespace detail

// Configuration/pairing model with whole-sample rejection of loops and
// multi-edges; symmetric graphicable output, reproducible from the seed.
inline EvolutionAlgebra random_regular_algebra(int n, int d, std::uint64_t seed,
                                               FieldDescriptor field,
                                               int max_attempts = 10'000) {
  if (n < 1 || d < 0 || d >= n) throw DomainError("random_regular_algebra: need 0 <= d < n");
  if ((static_cast<long long>(n) * d) % 2 != 0)
    throw DomainError("random_regular_algebra: n*d must be even");
  std::mt19937_64 rng(seed);
  std::vector<int> stubs(static_cast<std::size_t>(n) * d);
  for (int v = 0; v < n; ++v)
    for (int k = 0; k < d; ++k) stubs[static_cast<std::size_t>(v) * d + k] = v;

  for (int attempt = 0; attempt < max_attempts; ++attempt) {
    // Fisher-Yates with the explicit draw (std::shuffle is not portable
    // across standard libraries)
    for (std::size_t i = stubs.size(); i > 1; --i) {
      std::size_t j = detail::uniform_below(rng, i);
      std::swap(stubs[i - 1], stubs[j]);
    }
    std::set<std::pair<int, int>> edges;
    bool ok = true;
    for (std::size_t k = 0; k + 1 < stubs.size(); k += 2) {
      int u = stubs[k], v = stubs[k + 1];
      if (u == v) {
        ok = false;
        break;
      }
      if (u > v) std::swap(u, v);
      if (!edges.emplace(u, v).second) {
        ok = false;
        break;
      }
    }
    if (!ok) continue;
    EvolutionAlgebra a(n, field);
    const Scalar one = Scalar::one(field);
    for (auto [u, v] : edges) {
      a.set_entry(u, v, one);
      a.set_entry(v, u, one);
    }
    return a;
  }
  throw ResourceLimitError("random_regular_algebra: rejection cap exceeded");
}

}  // namespace eea
