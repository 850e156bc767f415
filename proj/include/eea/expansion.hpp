#pragma once

#include <bit>
#include <cmath>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "eea/spectral.hpp"

namespace eea {

inline constexpr int kDefaultCheegerEnumCap = 26;

// Exact Cheeger value with a witness cut, or a spectral sandwich when the
// graph is past the enumeration cap.
struct CheegerCertificate {
  enum class Method { ExactEnumeration, SpectralBoundsOnly };

  bool infinite = false;    // n <= 1 convention
  mpq_class value;          // exact h, valid when method==ExactEnumeration && !infinite
  std::vector<int> witness; // minimizing subset, |W| <= n/2 (empty when infinite)
  Method method = Method::ExactEnumeration;
  double lower = 0.0;       // bounds, SpectralBoundsOnly
  double upper = 0.0;

  std::string method_name() const {
    return method == Method::ExactEnumeration ? "exact-enumeration" : "spectral-bounds-only";
  }
  std::string value_str() const { return infinite ? "inf" : value.get_str(); }
};

// Edges with exactly one endpoint in W.
inline std::vector<std::pair<int, int>> edge_boundary(const SimpleGraph& g,
                                                      const std::vector<int>& w) {
  std::vector<bool> in(g.n, false);
  for (int v : w) {
    if (v < 0 || v >= g.n) throw DomainError("edge_boundary: vertex out of range");
    in[v] = true;
  }
  std::vector<std::pair<int, int>> out;
  for (auto [u, v] : g.edges)
    if (in[u] != in[v]) out.emplace_back(u, v);
  return out;
}

// Exact minimum of |E(W)|/|W| over nonempty W with |W| <= n/2, by subset
// enumeration over sizes 1..floor(n/2) in lexicographic order.  The first
// strict minimum wins, which realizes the smallest-size-then-lexicographic
// witness tie-break.
inline CheegerCertificate cheeger_exact(const SimpleGraph& g,
                                        int enum_cap = kDefaultCheegerEnumCap) {
  CheegerCertificate cert;
  if (g.n <= 1) {
    cert.infinite = true;
    return cert;
  }
  if (g.n > enum_cap || g.n > 62)
    throw ResourceLimitError("cheeger_exact: n=" + std::to_string(g.n) +
                             " exceeds enumeration cap " + std::to_string(enum_cap));

  const int n = g.n;
  std::vector<std::uint64_t> adj_mask(n, 0);
  for (auto [u, v] : g.edges) {
    adj_mask[u] |= std::uint64_t(1) << v;
    adj_mask[v] |= std::uint64_t(1) << u;
  }

  long best_b = -1, best_w = 1;  // best ratio best_b / best_w
  std::vector<int> best_set;

  const int half = n / 2;
  std::vector<int> comb;
  for (int s = 1; s <= half && best_b != 0; ++s) {
    comb.resize(s);
    for (int i = 0; i < s; ++i) comb[i] = i;
    while (true) {
      std::uint64_t mask = 0;
      for (int v : comb) mask |= std::uint64_t(1) << v;
      long boundary = 0;
      for (int v : comb) boundary += std::popcount(adj_mask[v] & ~mask);
      if (best_b < 0 || boundary * best_w < best_b * static_cast<long>(s)) {
        best_b = boundary;
        best_w = s;
        best_set = comb;
        if (best_b == 0) break;
      }
      // next lexicographic combination
      int i = s - 1;
      while (i >= 0 && comb[i] == n - s + i) --i;
      if (i < 0) break;
      ++comb[i];
      for (int j = i + 1; j < s; ++j) comb[j] = comb[j - 1] + 1;
    }
  }

  cert.value = mpq_class(best_b, best_w);
  cert.value.canonicalize();
  cert.witness = std::move(best_set);
  return cert;
}

// Standard two-sided edge-expansion Cheeger inequality for a connected
// d-regular graph: (d - l2)/2 <= h <= sqrt(2 d (d - l2)).
inline std::pair<double, double> cheeger_spectral_bounds(const SimpleGraph& g) {
  auto reg = is_regular(g);
  if (!reg) throw DomainError("cheeger_spectral_bounds: graph is not regular");
  if (!is_connected(g)) throw DomainError("cheeger_spectral_bounds: graph is not connected");
  const int d = *reg;
  const int n = g.n;
  if (n < 2) return {0.0, 0.0};
  std::vector<double> a(static_cast<std::size_t>(n) * n, 0.0);
  for (auto [u, v] : g.edges) {
    a[static_cast<std::size_t>(u) * n + v] = 1.0;
    a[static_cast<std::size_t>(v) * n + u] = 1.0;
  }
  Spectrum s = n > kFullSpectrumCutoff ? symmetric_eigenvalues_extremes(a, n)
                                       : symmetric_eigenvalues(a, n);
  double gap = d - s.lambda2();
  if (gap < 0.0) gap = 0.0;
  return {gap / 2.0, std::sqrt(2.0 * d * gap)};
}

struct HEEAResult {
  bool is_h_eea = false;
  CheegerCertificate certificate;
};

// h(Gamma(A)) >= h?  Exact inside the cap; above the cap falls back to
// connectivity plus the spectral sandwich and throws InconclusiveError when
// the bounds straddle h.
inline HEEAResult is_h_eea(const EvolutionAlgebra& a, const mpq_class& h,
                           int enum_cap = kDefaultCheegerEnumCap) {
  SimpleGraph g = underlying_graph(a);
  HEEAResult out;
  if (g.n <= 1) {
    out.certificate.infinite = true;
    out.is_h_eea = true;  // h(Gamma) = +inf
    return out;
  }
  if (g.n <= enum_cap) {
    out.certificate = cheeger_exact(g, enum_cap);
    out.is_h_eea = out.certificate.value >= h;
    return out;
  }
  // past the cap: a disconnected graph still has an exact certificate
  auto comps = connected_components(g);
  if (comps.size() > 1) {
    const std::vector<int>* best = nullptr;
    for (const auto& c : comps)
      if (2 * static_cast<int>(c.size()) <= g.n && (!best || c.size() < best->size() ||
                                                    (c.size() == best->size() && c < *best)))
        best = &c;
    out.certificate.value = 0;
    out.certificate.witness = *best;
    out.is_h_eea = 0 >= h;
    return out;
  }
  auto [lo, hi] = cheeger_spectral_bounds(g);
  out.certificate.method = CheegerCertificate::Method::SpectralBoundsOnly;
  out.certificate.lower = lo;
  out.certificate.upper = hi;
  const double hd = h.get_d();
  if (lo >= hd) {
    out.is_h_eea = true;
    return out;
  }
  if (hi < hd) {
    out.is_h_eea = false;
    return out;
  }
  throw InconclusiveError("is_h_eea: spectral bounds [" + std::to_string(lo) + ", " +
                          std::to_string(hi) + "] straddle h=" + h.get_str());
}

struct FamilyMemberStats {
  int n = 0;
  int max_degree = 0;
  bool h_exact = false;
  mpq_class h;          // when exact
  double h_lower = 0.0; // spectral fallback
  double h_upper = 0.0;
};

// Sample-level screening of the expander-family conditions: growing sizes,
// uniformly bounded degree, h bounded away from 0.  A report about the given
// finite sample, not a proof about an infinite family.
struct FamilyReport {
  std::vector<FamilyMemberStats> members;
  bool sizes_strictly_increasing = true;
  bool degree_growing = false;
  int degree_bound = 0;
  mpq_class inf_h;        // over exactly-known members
  bool h_decreasing = false;
  std::string verdict;
};

inline FamilyReport is_eea_family_report(const std::vector<EvolutionAlgebra>& algebras,
                                         int enum_cap = kDefaultCheegerEnumCap) {
  if (algebras.size() < 2)
    throw DomainError("is_eea_family_report: need at least 2 members");
  FamilyReport rep;
  for (const auto& a : algebras) {
    SimpleGraph g = underlying_graph(a);
    FamilyMemberStats m;
    m.n = g.n;
    auto deg = degrees(g);
    m.max_degree = deg.empty() ? 0 : *std::max_element(deg.begin(), deg.end());
    if (g.n <= enum_cap) {
      CheegerCertificate cert = cheeger_exact(g, enum_cap);
      m.h_exact = !cert.infinite;
      if (m.h_exact) m.h = cert.value;
      else m.h = 0;  // 1-dim member: +inf, excluded from inf_h below
    } else {
      try {
        auto [lo, hi] = cheeger_spectral_bounds(g);
        m.h_lower = lo;
        m.h_upper = hi;
      } catch (const DomainError&) {
        m.h_lower = 0.0;
        m.h_upper = static_cast<double>(m.max_degree);
      }
    }
    rep.members.push_back(std::move(m));
  }
  for (std::size_t i = 1; i < rep.members.size(); ++i)
    if (rep.members[i].n <= rep.members[i - 1].n) rep.sizes_strictly_increasing = false;
  for (const auto& m : rep.members) rep.degree_bound = std::max(rep.degree_bound, m.max_degree);
  rep.degree_growing = rep.members.back().max_degree > rep.members.front().max_degree;

  bool have_h = false;
  for (const auto& m : rep.members)
    if (m.h_exact) {
      if (!have_h || m.h < rep.inf_h) rep.inf_h = m.h;
      have_h = true;
    }
  const FamilyMemberStats *first = nullptr, *last = nullptr;
  for (const auto& m : rep.members)
    if (m.h_exact) {
      if (!first) first = &m;
      last = &m;
    }
  rep.h_decreasing = first && last && last->h < first->h;

  if (!rep.sizes_strictly_increasing)
    rep.verdict = "not expander-like (fails (i): sizes not strictly increasing)";
  else if (rep.degree_growing)
    rep.verdict = "not expander-like (fails (ii): degree grows with n)";
  else if (rep.h_decreasing)
    rep.verdict = "not expander-like (h -> 0 trend)";
  else
    rep.verdict = "expander-like on this sample";
  return rep;
}

}  // namespace eea
