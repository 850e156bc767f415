#pragma once

#include <cmath>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "eea/expansion.hpp"

namespace eea {

enum class TraceMode { Combinatorial, ExactField };

inline std::string trace_mode_name(TraceMode m) {
  return m == TraceMode::Combinatorial ? "combinatorial" : "exact-field";
}

// Supports S_0, S_1, ... of the plenary powers of a generator; combinatorial
// mode iterates S_{k+1} = S_k u N(S_k) on the underlying graph, exact mode
// takes the true support of e_i^[k].
struct SupportTrace {
  int generator = 0;
  TraceMode mode = TraceMode::Combinatorial;
  std::vector<std::vector<int>> supports;  // S_0 .. S_kmax, each sorted
  std::optional<int> cover_step;           // least k with S_k = {0..n-1}
};

// Per-step occurrence of e_i in e_i^[k], with two verdicts over the window:
// persistent_in_window requires occurrence at every k in {0} u [2, kmax]
// (the strict flag restores the literal all-k reading), while
// eventually_persistent_up_to_kmax asks for a stabilized tail (occurrence at
// both kmax-1 and kmax).  Two consecutive occurrences concatenate to closed
// walks of every sufficiently large length, so for nonnegative rational
// algebras the tail verdict certifies genuine eventual persistency; periodic
// patterns (bipartite graphs) fail it at one of the two parities.
struct PersistencyRecord {
  int generator = 0;
  TraceMode mode = TraceMode::ExactField;
  std::vector<bool> occurrence;  // k = 0 .. kmax
  std::optional<int> first_absence;
  bool persistent_in_window = false;
  bool eventually_persistent_up_to_kmax = false;
};

inline bool is_connected_algebra(const EvolutionAlgebra& a) {
  return is_connected(underlying_graph(a));
}

// Connected components of the underlying graph; each spans an evolution
// subalgebra.
inline std::vector<std::vector<int>> decompose(const EvolutionAlgebra& a) {
  return connected_components(underlying_graph(a));
}

enum class SimplicityVerdict { Simple, NotSimple, ConnectedButUnresolved };

inline std::string simplicity_name(SimplicityVerdict v) {
  switch (v) {
    case SimplicityVerdict::Simple: return "simple";
    case SimplicityVerdict::NotSimple: return "not-simple";
    case SimplicityVerdict::ConnectedButUnresolved: return "connected-but-unresolved";
  }
  return "?";
}

// Symmetric + connected => simple; disconnected => not simple; otherwise the
// non-symmetric case is left unresolved (simplicity and connectivity can
// differ there).
inline SimplicityVerdict is_simple(const EvolutionAlgebra& a) {
  if (!is_connected_algebra(a)) return SimplicityVerdict::NotSimple;
  if (is_symmetric(a)) return SimplicityVerdict::Simple;
  return SimplicityVerdict::ConnectedButUnresolved;
}

inline SupportTrace support_trace(const EvolutionAlgebra& a, int i, int k_max, TraceMode mode,
                                  const PlenaryOptions& opt = {}) {
  const int n = a.dim();
  if (i < 0 || i >= n) throw DomainError("support_trace: generator out of range");
  if (k_max < 0) throw DomainError("support_trace: k_max must be >= 0");
  if (mode == TraceMode::ExactField && a.field().kind == FieldKind::Real)
    throw DomainError("support_trace: exact mode needs an exact field");

  SupportTrace tr;
  tr.generator = i;
  tr.mode = mode;

  if (mode == TraceMode::Combinatorial) {
    SimpleGraph g = underlying_graph(a);
    std::set<int> cur{i};
    for (int k = 0; k <= k_max; ++k) {
      tr.supports.emplace_back(cur.begin(), cur.end());
      if (!tr.cover_step && static_cast<int>(cur.size()) == n) tr.cover_step = k;
      std::set<int> next = cur;
      for (int v : cur) next.insert(g.adj[v].begin(), g.adj[v].end());
      cur.swap(next);
    }
  } else {
    Element x = Element::basis(a, i);
    for (int k = 0; k <= k_max; ++k) {
      if (k > 0) {
        x = multiply(a, x, x);
        detail::check_plenary_cap(x, opt);
      }
      tr.supports.push_back(support(a, x));
      if (!tr.cover_step && static_cast<int>(tr.supports.back().size()) == n)
        tr.cover_step = k;
    }
  }
  return tr;
}

// Least k <= k_cap with full support, if any.
inline std::optional<int> cover_time(const EvolutionAlgebra& a, int i, TraceMode mode,
                                     int k_cap, const PlenaryOptions& opt = {}) {
  return support_trace(a, i, k_cap, mode, opt).cover_step;
}

struct PersistencyOptions {
  // Strict reading checks occurrence for every k in [0, kmax]; the default
  // skips k = 1, where a zero diagonal makes e_i^2 drop e_i.
  bool strict_all_k = false;
  PlenaryOptions plenary;
};

inline PersistencyRecord persistency(const EvolutionAlgebra& a, int i, int k_max,
                                     TraceMode mode = TraceMode::ExactField,
                                     const PersistencyOptions& opt = {}) {
  SupportTrace tr = support_trace(a, i, k_max, mode, opt.plenary);
  PersistencyRecord rec;
  rec.generator = i;
  rec.mode = mode;
  for (const auto& s : tr.supports)
    rec.occurrence.push_back(std::binary_search(s.begin(), s.end(), i));
  for (int k = 0; k <= k_max; ++k)
    if (!rec.occurrence[k]) {
      rec.first_absence = k;
      break;
    }
  rec.persistent_in_window = true;
  for (int k = 0; k <= k_max; ++k) {
    if (!opt.strict_all_k && k == 1) continue;
    if (!rec.occurrence[k]) {
      rec.persistent_in_window = false;
      break;
    }
  }
  rec.eventually_persistent_up_to_kmax =
      k_max >= 1 ? rec.occurrence[k_max] && rec.occurrence[k_max - 1] : rec.occurrence[0];
  return rec;
}

// Default trace horizon: ceil((d/h) ln n) + 4 with exact h when available,
// else 2 diam + 4.
inline int default_kmax(const EvolutionAlgebra& a, int enum_cap = kDefaultCheegerEnumCap) {
  SimpleGraph g = underlying_graph(a);
  const int n = g.n;
  if (n <= 1) return 4;
  auto deg = degrees(g);
  int d = *std::max_element(deg.begin(), deg.end());
  if (is_connected(g) && n <= enum_cap) {
    CheegerCertificate c = cheeger_exact(g, enum_cap);
    if (c.value > 0) {
      double dh = static_cast<double>(d) / c.value.get_d();
      return static_cast<int>(std::ceil(dh * std::log(static_cast<double>(n)))) + 4;
    }
  }
  auto diam = diameter(g);
  return 2 * (diam ? *diam : n) + 4;
}

struct HierarchyReport {
  std::vector<PersistencyRecord> records;  // one per generator
  std::vector<int> persistent;
  std::vector<int> transient_;
  bool trivial = false;  // all generators persistent
  int k_max = 0;
};

// Classifies generators by eventual occurrence over the traced window.
inline HierarchyReport hierarchy_report(const EvolutionAlgebra& a, int k_max,
                                        const PersistencyOptions& opt = {}) {
  if (a.field().kind == FieldKind::Real)
    throw DomainError("hierarchy_report: needs an exact field");
  HierarchyReport rep;
  rep.k_max = k_max;
  for (int i = 0; i < a.dim(); ++i) {
    rep.records.push_back(persistency(a, i, k_max, TraceMode::ExactField, opt));
    if (rep.records.back().eventually_persistent_up_to_kmax)
      rep.persistent.push_back(i);
    else
      rep.transient_.push_back(i);
  }
  rep.trivial = rep.transient_.empty();
  return rep;
}

// Graph distance between generators; least k with j in the combinatorial S_k.
inline std::optional<int> algebraic_distance(const EvolutionAlgebra& a, int i, int j) {
  SimpleGraph g = underlying_graph(a);
  return distance(g, i, j);
}

}  // namespace eea
