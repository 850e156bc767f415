#pragma once

#include <cmath>
#include <optional>
#include <vector>

#include "eea/spectral.hpp"

namespace eea {

// Per-step l1 distance of S^k e_i to the uniform distribution.
struct MixingTrace {
  int start = 0;
  std::vector<double> distances;  // k = 0 .. k_max
  std::optional<int> empirical_tmix(double eps) const {
    for (std::size_t k = 0; k < distances.size(); ++k)
      if (distances[k] <= eps) return static_cast<int>(k);
    return std::nullopt;
  }
};

namespace detail {

inline bool row_sums_to_one(const EvolutionAlgebra& a, int i) {
  const int n = a.dim();
  if (a.field().kind == FieldKind::Rational) {
    mpq_class s = 0;
    for (int j = 0; j < n; ++j) s += a.rat_data()[a.idx(i, j)];
    return s == 1;
  }
  double s = 0.0;
  for (int j = 0; j < n; ++j) s += a.real_data()[a.idx(i, j)];
  return std::abs(s - 1.0) <= 1e-10;
}

inline bool col_sums_to_one(const EvolutionAlgebra& a, int j) {
  const int n = a.dim();
  if (a.field().kind == FieldKind::Rational) {
    mpq_class s = 0;
    for (int i = 0; i < n; ++i) s += a.rat_data()[a.idx(i, j)];
    return s == 1;
  }
  double s = 0.0;
  for (int i = 0; i < n; ++i) s += a.real_data()[a.idx(i, j)];
  return std::abs(s - 1.0) <= 1e-10;
}

inline bool entries_nonnegative(const EvolutionAlgebra& a) {
  if (a.field().kind == FieldKind::Rational) {
    for (const auto& q : a.rat_data())
      if (q < 0) return false;
    return true;
  }
  for (double v : a.real_data())
    if (v < 0.0) return false;
  return true;
}

inline void require_markov_field(const EvolutionAlgebra& a, const char* where) {
  if (a.field().kind == FieldKind::Prime)
    throw FieldMismatchError(std::string(where) + ": prime-field input has no Markov reading");
}

}  // namespace detail

// Nonnegative entries, each row summing to 1 (exact over Q, 1e-10 over R).
inline bool is_markov(const EvolutionAlgebra& a) {
  detail::require_markov_field(a, "is_markov");
  if (!detail::entries_nonnegative(a)) return false;
  for (int i = 0; i < a.dim(); ++i)
    if (!detail::row_sums_to_one(a, i)) return false;
  return true;
}

inline bool is_doubly_stochastic(const EvolutionAlgebra& a) {
  if (!is_markov(a)) return false;
  for (int j = 0; j < a.dim(); ++j)
    if (!detail::col_sums_to_one(a, j)) return false;
  return true;
}

// Strong connectivity of the positive-entry digraph (Kosaraju, two passes).
inline bool is_irreducible(const EvolutionAlgebra& a) {
  if (!is_markov(a)) throw DomainError("is_irreducible: input is not a Markov algebra");
  const int n = a.dim();
  if (n == 1) return true;
  std::vector<std::vector<int>> fwd(n), rev(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j && !a.entry_is_zero(i, j)) {
        fwd[i].push_back(j);
        rev[j].push_back(i);
      }
  auto reach = [n](const std::vector<std::vector<int>>& adj) {
    std::vector<bool> seen(n, false);
    std::vector<int> stack{0};
    seen[0] = true;
    int count = 0;
    while (!stack.empty()) {
      int u = stack.back();
      stack.pop_back();
      ++count;
      for (int v : adj[u])
        if (!seen[v]) {
          seen[v] = true;
          stack.push_back(v);
        }
    }
    return count;
  };
  return reach(fwd) == n && reach(rev) == n;
}

struct MixingOptions {
  bool exact = false;  // exact rational iteration (n <= 64)
};

// Iterates v_{k+1} = S v_k from the point distribution e_i and records
// || S^k e_i - pi ||_1 against the uniform pi = 1/n.
inline MixingTrace mixing_simulation(const EvolutionAlgebra& a, int i, int k_max,
                                     const MixingOptions& opt = {}) {
  if (!is_doubly_stochastic(a))
    throw DomainError("mixing_simulation: input is not doubly stochastic");
  const int n = a.dim();
  if (i < 0 || i >= n) throw DomainError("mixing_simulation: start state out of range");
  MixingTrace tr;
  tr.start = i;

  if (opt.exact && a.field().kind == FieldKind::Rational) {
    if (n > 64) throw ResourceLimitError("exact mixing supported for n <= 64");
    std::vector<mpq_class> v(n, mpq_class(0)), next(n);
    v[i] = 1;
    const mpq_class pi(1, static_cast<unsigned long>(n));
    for (int k = 0; k <= k_max; ++k) {
      mpq_class l1 = 0;
      for (int j = 0; j < n; ++j) l1 += abs(v[j] - pi);
      tr.distances.push_back(l1.get_d());
      for (int r = 0; r < n; ++r) {
        next[r] = 0;
        for (int c = 0; c < n; ++c)
          if (!a.entry_is_zero(r, c)) next[r] += a.rat_data()[a.idx(r, c)] * v[c];
      }
      v.swap(next);
    }
    return tr;
  }

  std::vector<double> m = to_real_matrix(a);
  std::vector<double> v(n, 0.0), next(n, 0.0);
  v[i] = 1.0;
  const double pi = 1.0 / n;
  for (int k = 0; k <= k_max; ++k) {
    double l1 = 0.0;
    for (double x : v) l1 += std::abs(x - pi);
    tr.distances.push_back(l1);
    for (int r = 0; r < n; ++r) {
      double s = 0.0;
      for (int c = 0; c < n; ++c) s += m[static_cast<std::size_t>(r) * n + c] * v[c];
      next[r] = s;
    }
    v.swap(next);
  }
  return tr;
}

// n (1 - h^2/(2 d^2))^k: evaluated for comparison, never asserted (periodic
// doubly stochastic chains violate it).
inline double paper_mixing_bound(int n, const mpq_class& h, int d, int k) {
  if (h <= 0) throw DomainError("paper_mixing_bound: h must be > 0");
  if (d < 1) throw DomainError("paper_mixing_bound: d must be >= 1");
  double rate = 1.0 - h.get_d() * h.get_d() / (2.0 * d * d);
  return n * std::pow(rate, k);
}

// sqrt(n) * mu_*^k with mu_* = max(|mu_2|, |mu_n|): the standard spectral
// l1 bound that replaces the mu_2-only argument.
inline double corrected_mixing_bound(const Spectrum& s, int n, int k) {
  double mu = std::max(std::abs(s.lambda2()), std::abs(s.lambda_min()));
  return std::sqrt(static_cast<double>(n)) * std::pow(mu, k);
}

// (2 d^2 / h^2) log(n / eps), natural log.
inline double tmix_bound(int n, const mpq_class& h, int d, double eps) {
  if (eps <= 0.0) throw DomainError("tmix_bound: eps must be > 0");
  if (h <= 0) throw DomainError("tmix_bound: h must be > 0");
  double v = 2.0 * d * d / (h.get_d() * h.get_d()) * std::log(n / eps);
  return std::max(0.0, v);
}

}  // namespace eea
