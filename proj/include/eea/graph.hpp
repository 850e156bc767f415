#pragma once

#include <algorithm>
#include <optional>
#include <queue>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "eea/algebra.hpp"

namespace eea {

// Undirected loopless simple graph, 0-based vertices.  Edges are kept
// sorted with i < j for deterministic iteration and witness output.
struct SimpleGraph {
  int n = 0;
  std::vector<std::pair<int, int>> edges;
  std::vector<std::vector<int>> adj;

  static SimpleGraph from_edges(int n, std::vector<std::pair<int, int>> raw) {
    if (n < 0) throw DomainError("negative vertex count");
    std::set<std::pair<int, int>> uniq;
    for (auto [u, v] : raw) {
      if (u == v) throw DomainError("loop edge rejected");
      if (u < 0 || v < 0 || u >= n || v >= n) throw DomainError("edge endpoint out of range");
      if (u > v) std::swap(u, v);
      uniq.emplace(u, v);
    }
    SimpleGraph g;
    g.n = n;
    g.edges.assign(uniq.begin(), uniq.end());
    g.adj.assign(n, {});
    for (auto [u, v] : g.edges) {
      g.adj[u].push_back(v);
      g.adj[v].push_back(u);
    }
    for (auto& nb : g.adj) std::sort(nb.begin(), nb.end());
    return g;
  }

  bool has_edge(int u, int v) const {
    if (u > v) std::swap(u, v);
    return std::binary_search(edges.begin(), edges.end(), std::make_pair(u, v));
  }
};

struct DigraphArc {
  int from = 0;
  int to = 0;
  Scalar weight;
};

// Weighted digraph of an algebra: arc i -> j with weight a_ij for every
// nonzero off-diagonal entry.
struct Digraph {
  int n = 0;
  std::vector<DigraphArc> arcs;  // sorted by (from, to)

  std::vector<std::vector<int>> out_adj() const {
    std::vector<std::vector<int>> out(n);
    for (const auto& a : arcs) out[a.from].push_back(a.to);
    return out;
  }
};

// Edge {i,j} (i != j) iff a_ij != 0 or a_ji != 0; the diagonal contributes
// nothing.
inline SimpleGraph underlying_graph(const EvolutionAlgebra& a) {
  const int n = a.dim();
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (!a.entry_is_zero(i, j) || !a.entry_is_zero(j, i)) edges.emplace_back(i, j);
  return SimpleGraph::from_edges(n, std::move(edges));
}

inline Digraph digraph(const EvolutionAlgebra& a) {
  Digraph d;
  d.n = a.dim();
  for (int i = 0; i < d.n; ++i)
    for (int j = 0; j < d.n; ++j)
      if (i != j && !a.entry_is_zero(i, j)) d.arcs.push_back({i, j, a.entry(i, j)});
  return d;
}

inline std::vector<std::vector<int>> connected_components(const SimpleGraph& g) {
  std::vector<std::vector<int>> comps;
  std::vector<bool> seen(g.n, false);
  for (int s = 0; s < g.n; ++s) {
    if (seen[s]) continue;
    std::vector<int> comp;
    std::queue<int> q;
    q.push(s);
    seen[s] = true;
    while (!q.empty()) {
      int u = q.front();
      q.pop();
      comp.push_back(u);
      for (int v : g.adj[u])
        if (!seen[v]) {
          seen[v] = true;
          q.push(v);
        }
    }
    std::sort(comp.begin(), comp.end());
    comps.push_back(std::move(comp));
  }
  return comps;
}

inline bool is_connected(const SimpleGraph& g) {
  if (g.n <= 1) return true;
  return connected_components(g).size() == 1;
}

// BFS distances from source; -1 marks unreachable.
inline std::vector<int> bfs_distances(const SimpleGraph& g, int source) {
  if (source < 0 || source >= g.n) throw DomainError("bfs source out of range");
  std::vector<int> dist(g.n, -1);
  std::queue<int> q;
  dist[source] = 0;
  q.push(source);
  while (!q.empty()) {
    int u = q.front();
    q.pop();
    for (int v : g.adj[u])
      if (dist[v] < 0) {
        dist[v] = dist[u] + 1;
        q.push(v);
      }
  }
  return dist;
}

inline std::optional<int> distance(const SimpleGraph& g, int i, int j) {
  auto d = bfs_distances(g, i);
  if (j < 0 || j >= g.n) throw DomainError("distance target out of range");
  if (d[j] < 0) return std::nullopt;
  return d[j];
}

// nullopt encodes an infinite diameter (disconnected graph).
inline std::optional<int> diameter(const SimpleGraph& g) {
  int best = 0;
  for (int s = 0; s < g.n; ++s) {
    auto d = bfs_distances(g, s);
    for (int v : d) {
      if (v < 0) return std::nullopt;
      best = std::max(best, v);
    }
  }
  return best;
}

inline std::vector<int> ball(const SimpleGraph& g, int center, int radius) {
  auto d = bfs_distances(g, center);
  std::vector<int> out;
  for (int v = 0; v < g.n; ++v)
    if (d[v] >= 0 && d[v] <= radius) out.push_back(v);
  return out;
}

inline std::vector<int> degrees(const SimpleGraph& g) {
  std::vector<int> deg(g.n, 0);
  for (int v = 0; v < g.n; ++v) deg[v] = static_cast<int>(g.adj[v].size());
  return deg;
}

inline std::optional<int> is_regular(const SimpleGraph& g) {
  if (g.n == 0) return 0;
  auto deg = degrees(g);
  for (int d : deg)
    if (d != deg[0]) return std::nullopt;
  return deg[0];
}

// DFS three-color cycle detection; reports algebra nilpotency via
// Elduque-Labra (nilpotent iff no directed cycle).
inline bool has_directed_cycle(const Digraph& d) {
  auto out = d.out_adj();
  std::vector<int> state(d.n, 0);  // 0 white, 1 gray, 2 black
  std::vector<std::pair<int, std::size_t>> stack;
  for (int s = 0; s < d.n; ++s) {
    if (state[s] != 0) continue;
    stack.emplace_back(s, 0);
    state[s] = 1;
    while (!stack.empty()) {
      auto& [u, next] = stack.back();
      if (next < out[u].size()) {
        int v = out[u][next++];
        if (state[v] == 1) return true;
        if (state[v] == 0) {
          state[v] = 1;
          stack.emplace_back(v, 0);
        }
      } else {
        state[u] = 2;
        stack.pop_back();
      }
    }
  }
  return false;
}

inline std::string to_dot(const SimpleGraph& g, const std::string& name = "G") {
  std::ostringstream os;
  os << "graph " << name << " {\n";
  for (int v = 0; v < g.n; ++v) os << "  " << v << ";\n";
  for (auto [u, v] : g.edges) os << "  " << u << " -- " << v << ";\n";
  os << "}\n";
  return os.str();
}

inline std::string to_dot(const Digraph& d, const std::string& name = "D") {
  std::ostringstream os;
  os << "digraph " << name << " {\n";
  for (int v = 0; v < d.n; ++v) os << "  " << v << ";\n";
  for (const auto& a : d.arcs)
    os << "  " << a.from << " -> " << a.to << " [label=\"" << a.weight.str() << "\"];\n";
  os << "}\n";
  return os.str();
}

// Text edge list: one "i j" pair per line; a line with a single integer
// declares the vertex count (covers trailing isolated vertices); '#' starts
// a comment.
inline SimpleGraph parse_edge_list(const std::string& text) {
  std::istringstream is(text);
  std::string line;
  std::vector<std::pair<int, int>> edges;
  int n = 0;
  while (std::getline(is, line)) {
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    long u, v;
    if (!(ls >> u)) continue;
    if (ls >> v) {
      edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
      n = std::max({n, static_cast<int>(u) + 1, static_cast<int>(v) + 1});
    } else {
      n = std::max(n, static_cast<int>(u));
    }
    std::string rest;
    if (ls >> rest) throw ParseError("bad edge list line: '" + line + "'");
  }
  return SimpleGraph::from_edges(n, std::move(edges));
}

}  // namespace eea
