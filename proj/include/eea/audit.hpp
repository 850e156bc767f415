#pragma once

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <sstream>
#include <string>
#include <vector>

#include "eea/constructions.hpp"
#include "eea/json_io.hpp"

namespace eea {

// One evaluated inequality from the paper: lhs REL rhs on a concrete
// algebra.  Assertable checks must always hold; report-only checks are
// recorded findings that never fail an audit run.
struct TheoremCheck {
  std::string theorem;   // e.g. "Thm4.1"
  std::string claim;
  bool assertable = false;
  bool hypotheses_met = true;
  bool holds = true;
  double lhs = 0.0;
  double rhs = 0.0;
  std::string relation = "<=";
  std::string lhs_exact;  // exact rational rendering when available
  std::string rhs_exact;
  double margin = 0.0;    // rhs - lhs, signed
  json witness;           // optional payload: subset, generator, step k
};

struct AuditOptions {
  int enum_cap = kDefaultCheegerEnumCap;
  int mixing_kmax = 60;
  double mixing_eps = 0.01;
  int persistency_kmax = 20;
  int support_kmax = -1;   // -1: default_kmax(algebra)
  bool log_base2 = false;  // sensitivity flag; default natural log
};

struct AuditReport {
  std::string input;
  std::vector<TheoremCheck> checks;
  int assertable_failures = 0;
  int report_findings = 0;
};

namespace detail {

inline double audit_log(double x, const AuditOptions& opt) {
  return opt.log_base2 ? std::log2(x) : std::log(x);
}

struct ExactCheeger {
  bool available = false;
  bool infinite = false;
  mpq_class h;
};

inline ExactCheeger try_exact_cheeger(const SimpleGraph& g, int cap) {
  ExactCheeger out;
  try {
    CheegerCertificate c = cheeger_exact(g, cap);
    out.available = true;
    out.infinite = c.infinite;
    if (!c.infinite) out.h = c.value;
  } catch (const ResourceLimitError&) {
  }
  return out;
}

inline TheoremCheck skipped(const std::string& id, const std::string& claim, bool assertable,
                            const std::string& why) {
  TheoremCheck c;
  c.theorem = id;
  c.claim = claim;
  c.assertable = assertable;
  c.hypotheses_met = false;
  c.witness = json{{"skipped", why}};
  return c;
}

inline TheoremCheck make_le(const std::string& id, const std::string& claim, bool assertable,
                            double lhs, double rhs, double slack = 0.0) {
  TheoremCheck c;
  c.theorem = id;
  c.claim = claim;
  c.assertable = assertable;
  c.lhs = lhs;
  c.rhs = rhs;
  c.holds = lhs <= rhs + slack;
  c.margin = rhs - lhs;
  return c;
}

}  // namespace detail

// Thm 3.5 / Prop 2.5(i): h > 0 iff the underlying graph (equivalently the
// algebra) is connected.
inline TheoremCheck check_connectivity_equivalence(const EvolutionAlgebra& a,
                                                   const AuditOptions& opt = {}) {
  SimpleGraph g = underlying_graph(a);
  auto h = detail::try_exact_cheeger(g, opt.enum_cap);
  if (!h.available)
    return detail::skipped("Thm3.5", "h > 0 iff connected", true, "enumeration cap");
  TheoremCheck c;
  c.theorem = "Thm3.5";
  c.claim = "h > 0 iff connected iff no proper direct-sum split";
  c.assertable = true;
  c.relation = "iff";
  bool connected = is_connected(g);
  bool positive = h.infinite || h.h > 0;
  c.lhs = positive ? 1 : 0;
  c.rhs = connected ? 1 : 0;
  c.holds = positive == connected;
  c.lhs_exact = h.infinite ? "inf" : h.h.get_str();
  c.margin = 0;
  return c;
}

// Prop 2.5(iii): 2/n <= h <= min degree for connected graphs, exact.
inline std::vector<TheoremCheck> check_cheeger_basic_bounds(const EvolutionAlgebra& a,
                                                            const AuditOptions& opt = {}) {
  SimpleGraph g = underlying_graph(a);
  auto h = detail::try_exact_cheeger(g, opt.enum_cap);
  const std::string claim = "2/n <= h <= min valency (connected)";
  if (!h.available || h.infinite || !is_connected(g) || g.n < 2)
    return {detail::skipped("Prop2.5.iii", claim, true,
                            h.available ? "needs a connected graph on >= 2 vertices"
                                        : "enumeration cap")};
  auto deg = degrees(g);
  int mindeg = *std::min_element(deg.begin(), deg.end());
  mpq_class lower(2, static_cast<unsigned long>(g.n));
  lower.canonicalize();
  TheoremCheck lo;
  lo.theorem = "Prop2.5.iii.lower";
  lo.claim = claim;
  lo.assertable = true;
  lo.lhs = lower.get_d();
  lo.rhs = h.h.get_d();
  lo.lhs_exact = lower.get_str();
  lo.rhs_exact = h.h.get_str();
  lo.holds = lower <= h.h;
  lo.margin = lo.rhs - lo.lhs;
  TheoremCheck hi;
  hi.theorem = "Prop2.5.iii.upper";
  hi.claim = claim;
  hi.assertable = true;
  hi.lhs = h.h.get_d();
  hi.rhs = mindeg;
  hi.lhs_exact = h.h.get_str();
  hi.rhs_exact = std::to_string(mindeg);
  hi.holds = h.h <= mindeg;
  hi.margin = hi.rhs - hi.lhs;
  return {lo, hi};
}

// Thm 4.1: diam <= (2d/h) log n + 1.
inline TheoremCheck check_diameter_bound(const EvolutionAlgebra& a,
                                         const AuditOptions& opt = {}) {
  const std::string claim = "diam <= (2d/h) log n + 1";
  SimpleGraph g = underlying_graph(a);
  if (!is_connected(g) || g.n < 2)
    return detail::skipped("Thm4.1", claim, true, "needs a connected graph on >= 2 vertices");
  auto h = detail::try_exact_cheeger(g, opt.enum_cap);
  if (!h.available) return detail::skipped("Thm4.1", claim, true, "enumeration cap");
  auto deg = degrees(g);
  int d = *std::max_element(deg.begin(), deg.end());
  double rhs = 2.0 * d / h.h.get_d() * detail::audit_log(g.n, opt) + 1.0;
  auto diam = diameter(g);
  TheoremCheck c = detail::make_le("Thm4.1", claim, true, static_cast<double>(*diam), rhs);
  c.lhs_exact = std::to_string(*diam);
  return c;
}

// Thm 4.3 mechanism on the combinatorial supports: the proven step
// inequality |S_{k+1}| >= (1 + h/d)|S_k| while |S_k| <= n/2 (assertable,
// exact rational comparison) and the closed form |S_k| >= min(n, (1+h/d)^k)
// (report-only), plus Cor 4.4 monotone nesting and cover time.
inline std::vector<TheoremCheck> check_support_growth(const EvolutionAlgebra& a,
                                                      const AuditOptions& opt = {}) {
  std::vector<TheoremCheck> out;
  SimpleGraph g = underlying_graph(a);
  const bool symmetric = is_symmetric(a);
  auto h = detail::try_exact_cheeger(g, opt.enum_cap);
  if (!h.available || h.infinite || !symmetric) {
    out.push_back(detail::skipped("Thm4.3.step", "|S_{k+1}| >= (1+h/d)|S_k| while |S_k| <= n/2",
                                  true,
                                  symmetric ? "enumeration cap or 1-dim" : "needs symmetry"));
    return out;
  }
  auto deg = degrees(g);
  const int d = std::max(1, *std::max_element(deg.begin(), deg.end()));
  const int n = g.n;
  int kmax = opt.support_kmax >= 0 ? opt.support_kmax : default_kmax(a, opt.enum_cap);

  const mpz_class hnum = h.h.get_num(), hden = h.h.get_den();
  bool step_ok = true, closed_ok = true, monotone_ok = true, cover_ok = true;
  json step_witness, closed_witness, monotone_witness, cover_witness;
  auto diam = diameter(g);

  for (int i = 0; i < n; ++i) {
    SupportTrace tr = support_trace(a, i, kmax, TraceMode::Combinatorial);
    for (std::size_t k = 0; k + 1 < tr.supports.size(); ++k) {
      const long sk = static_cast<long>(tr.supports[k].size());
      const long sk1 = static_cast<long>(tr.supports[k + 1].size());
      if (monotone_ok &&
          !std::includes(tr.supports[k + 1].begin(), tr.supports[k + 1].end(),
                         tr.supports[k].begin(), tr.supports[k].end())) {
        monotone_ok = false;
        monotone_witness = json{{"generator", i}, {"k", k}};
      }
      if (2 * sk <= n && step_ok) {
        // sk1 >= sk (1 + h/d)  <=>  sk1 * d * hden >= sk * (d*hden + hnum)
        if (mpz_class(sk1) * d * hden < mpz_class(sk) * (d * hden + hnum)) {
          step_ok = false;
          step_witness = json{{"generator", i}, {"k", k}, {"size_k", sk}, {"size_k1", sk1}};
        }
      }
      if (closed_ok) {
        double target = std::min(static_cast<double>(n),
                                 std::pow(1.0 + h.h.get_d() / d, static_cast<double>(k + 1)));
        if (static_cast<double>(sk1) + 1e-9 < target) {
          closed_ok = false;
          closed_witness = json{{"generator", i}, {"k", k + 1}, {"size", sk1},
                                {"required", target}};
        }
      }
    }
    if (cover_ok && diam) {
      if (!tr.cover_step || *tr.cover_step > *diam + 1) {
        cover_ok = false;
        cover_witness = json{{"generator", i}};
      }
    }
  }

  TheoremCheck step;
  step.theorem = "Thm4.3.step";
  step.claim = "|S_{k+1}| >= (1+h/d)|S_k| while |S_k| <= n/2 (combinatorial)";
  step.assertable = true;
  step.holds = step_ok;
  step.witness = step_witness;
  out.push_back(step);

  TheoremCheck closed;
  closed.theorem = "Thm4.3.closed";
  closed.claim = "|S_k| >= min(n, (1+h/d)^k)";
  closed.assertable = false;
  closed.holds = closed_ok;
  closed.witness = closed_witness;
  out.push_back(closed);

  TheoremCheck mono;
  mono.theorem = "Cor4.4.monotone";
  mono.claim = "combinatorial supports are nested: S_k subset of S_{k+1}";
  mono.assertable = true;
  mono.holds = monotone_ok;
  mono.witness = monotone_witness;
  out.push_back(mono);

  TheoremCheck cover;
  cover.theorem = "Cor4.4.cover";
  cover.claim = "combinatorial cover time <= diam + 1 (connected)";
  cover.assertable = true;
  cover.holds = cover_ok;
  cover.witness = cover_witness;
  out.push_back(cover);
  return out;
}

// Thm 4.5 on a finite window, both readings: strict "for all k >= 0" (the
// paper text; fails at k = 1 whenever a_ii = 0) and the windowed reading
// k in {0} u [2, kmax].  Both report-only.
inline std::vector<TheoremCheck> check_persistency(const EvolutionAlgebra& a,
                                                   const AuditOptions& opt = {}) {
  const std::string claim_strict = "e_i occurs in e_i^[k] for all k >= 0 (strict reading)";
  const std::string claim_win = "e_i occurs in e_i^[k] for k in {0} u [2, kmax]";
  if (a.field().kind == FieldKind::Real || !is_symmetric(a) || !is_connected_algebra(a))
    return {detail::skipped("Thm4.5.strict", claim_strict, false,
                            "needs a symmetric connected exact-field algebra"),
            detail::skipped("Thm4.5.windowed", claim_win, false,
                            "needs a symmetric connected exact-field algebra")};
  bool strict_ok = true, win_ok = true;
  json strict_witness, win_witness;
  for (int i = 0; i < a.dim(); ++i) {
    PersistencyRecord rec = persistency(a, i, opt.persistency_kmax);
    if (strict_ok && rec.first_absence) {
      strict_ok = false;
      strict_witness = json{{"generator", i}, {"first_absence", *rec.first_absence}};
    }
    if (win_ok && !rec.persistent_in_window) {
      win_ok = false;
      for (int k = 0; k <= opt.persistency_kmax; ++k)
        if (k != 1 && !rec.occurrence[k]) {
          win_witness = json{{"generator", i}, {"first_absence_outside_window", k}};
          break;
        }
    }
  }
  TheoremCheck strict;
  strict.theorem = "Thm4.5.strict";
  strict.claim = claim_strict;
  strict.assertable = false;
  strict.holds = strict_ok;
  strict.witness = strict_witness;
  TheoremCheck win;
  win.theorem = "Thm4.5.windowed";
  win.claim = claim_win;
  win.assertable = false;
  win.holds = win_ok;
  win.witness = win_witness;
  return {strict, win};
}

// Thm 5.6(ii): gap >= h^2/(2d).  Proven (standard Cheeger) only for the
// constant-weight graphicable regular case; asserted there, reported
// elsewhere.
inline TheoremCheck check_spectral_gap_bound(const EvolutionAlgebra& a,
                                             const AuditOptions& opt = {}) {
  const std::string claim = "gap(A) >= h^2/(2d)";
  if (a.field().kind == FieldKind::Prime || !is_symmetric(a))
    return detail::skipped("Thm5.6.gap", claim, false, "needs a symmetric real-embeddable algebra");
  SimpleGraph g = underlying_graph(a);
  if (!is_connected(g) || g.n < 2)
    return detail::skipped("Thm5.6.gap", claim, false, "needs a connected graph on >= 2 vertices");
  auto h = detail::try_exact_cheeger(g, opt.enum_cap);
  if (!h.available) return detail::skipped("Thm5.6.gap", claim, false, "enumeration cap");
  auto deg = degrees(g);
  int d = *std::max_element(deg.begin(), deg.end());
  Spectrum s = a.dim() > kFullSpectrumCutoff
                   ? symmetric_eigenvalues_extremes(to_real_matrix(a), a.dim())
                   : symmetric_eigenvalues(to_real_matrix(a), a.dim());
  double gap = spectral_gap(s);
  double hv = h.h.get_d();
  bool provable_case = is_graphicable(a) && is_regular(g).has_value();
  TheoremCheck c = detail::make_le("Thm5.6.gap", claim, provable_case,
                                   hv * hv / (2.0 * d), gap, 1e-8);
  c.rhs_exact = "";
  c.lhs_exact = "(" + h.h.get_str() + ")^2/(2*" + std::to_string(d) + ")";
  return c;
}

// Thm 7.2, all stated forms, plus the standard two-sided inequality.  The
// paper's statement and proof-end constants disagree; each is evaluated
// separately and only the standard form is asserted.
inline std::vector<TheoremCheck> check_cheeger_paper(const EvolutionAlgebra& a,
                                                     const AuditOptions& opt = {}) {
  std::vector<TheoremCheck> out;
  auto skip_all = [&](const std::string& why) {
    out.push_back(detail::skipped("Thm7.2", "Cheeger inequality for the evolution operator",
                                  false, why));
    return out;
  };
  if (a.field().kind == FieldKind::Prime) return skip_all("prime field has no real spectrum");
  if (!is_symmetric(a)) return skip_all("needs symmetry");
  SimpleGraph g = underlying_graph(a);
  auto reg = is_regular(g);
  if (!reg || !is_connected(g) || g.n < 2)
    return skip_all("needs a connected d-regular graph on >= 2 vertices");

  // constant weight c > 0 on edges, zero diagonal
  double c_weight = 0.0;
  bool constant = true;
  for (int i = 0; i < a.dim() && constant; ++i) {
    if (!a.entry_is_zero(i, i)) constant = false;
    for (int j = 0; j < a.dim() && constant; ++j) {
      if (i == j || a.entry_is_zero(i, j)) continue;
      double v = a.field().kind == FieldKind::Rational ? a.rat_data()[a.idx(i, j)].get_d()
                                                       : a.real_data()[a.idx(i, j)];
      if (c_weight == 0.0) c_weight = v;
      else if (std::abs(v - c_weight) > 1e-12 * std::max(1.0, std::abs(c_weight)))
        constant = false;
    }
  }
  if (!constant || c_weight <= 0.0) return skip_all("needs constant positive edge weight");
  auto h = detail::try_exact_cheeger(g, opt.enum_cap);
  if (!h.available) return skip_all("enumeration cap");

  const int d = *reg;
  Spectrum s = a.dim() > kFullSpectrumCutoff
                   ? symmetric_eigenvalues_extremes(to_real_matrix(a), a.dim())
                   : symmetric_eigenvalues(to_real_matrix(a), a.dim());
  const double gap = spectral_gap(s);
  const double lambda1 = s.lambda1();
  const double hv = h.h.get_d();
  const double cc = c_weight;

  auto push = [&](const std::string& id, const std::string& claim, bool assertable, double lhs,
                  double rhs) {
    TheoremCheck t = detail::make_le(id, claim, assertable, lhs, rhs, 1e-8);
    t.witness = json{{"h", h.h.get_str()}, {"d", d}, {"c", cc}, {"gap", gap}};
    out.push_back(t);
  };
  push("Thm7.2.proof.lower", "c h^2/2 <= gap (paper, proof-end form)", false,
       cc * hv * hv / 2.0, gap);
  push("Thm7.2.proof.upper", "gap <= 2 c d h (paper, proof-end form)", false, gap,
       2.0 * cc * d * hv);
  push("Thm7.2.stmt.lower", "(cd)^2 h^2/(2 d^2 lambda1) <= gap (paper, statement form)", false,
       cc * cc * d * d * hv * hv / (2.0 * d * d * lambda1), gap);
  push("Thm7.2.stmt.upper", "gap <= 2 c h (paper, statement form)", false, gap, 2.0 * cc * hv);
  push("Thm7.2.std.lower", "c h^2/(2d) <= gap (standard Cheeger)", true,
       cc * hv * hv / (2.0 * d), gap);
  push("Thm7.2.std.upper", "gap <= 2 c h (standard Cheeger)", true, gap, 2.0 * cc * hv);
  return out;
}

// Thm 7.4: h <= d/2 for graphicable d-regular algebras.  Report-only: K_4
// already violates it.
inline TheoremCheck check_trivial_bound(const EvolutionAlgebra& a,
                                        const AuditOptions& opt = {}) {
  const std::string claim = "h <= d/2";
  SimpleGraph g = underlying_graph(a);
  auto reg = is_regular(g);
  if (!is_graphicable(a) || !reg || !is_connected(g) || g.n < 2)
    return detail::skipped("Thm7.4", claim, false, "needs a connected graphicable regular algebra");
  auto h = detail::try_exact_cheeger(g, opt.enum_cap);
  if (!h.available) return detail::skipped("Thm7.4", claim, false, "enumeration cap");
  TheoremCheck c = detail::make_le("Thm7.4", claim, false, h.h.get_d(), *reg / 2.0);
  c.lhs_exact = h.h.get_str();
  c.rhs_exact = std::to_string(*reg) + "/2";
  c.witness = json{{"d", *reg}};
  return c;
}

// Thm 8.1(ii)-(v): Perron eigenvalue d, simple, and |lambda_k| <= d.
inline std::vector<TheoremCheck> check_spectral_characterisation(const EvolutionAlgebra& a,
                                                                 const AuditOptions& = {}) {
  const std::string claim_p = "lambda1 = d, simple (connected regular graphicable)";
  const std::string claim_b = "|lambda_k| <= d for all k";
  SimpleGraph g = underlying_graph(a);
  auto reg = is_regular(g);
  if (a.field().kind == FieldKind::Prime || !is_symmetric(a) || !is_graphicable(a) || !reg ||
      !is_connected(g) || g.n < 2)
    return {detail::skipped("Thm8.1.perron", claim_p, true,
                            "needs a symmetric connected regular graphicable algebra"),
            detail::skipped("Thm8.1.bound", claim_b, true,
                            "needs a symmetric connected regular graphicable algebra")};
  Spectrum s = a.dim() > kFullSpectrumCutoff
                   ? symmetric_eigenvalues_extremes(to_real_matrix(a), a.dim())
                   : symmetric_eigenvalues(to_real_matrix(a), a.dim());
  PerronVerdict v = perron_data(s, *reg);
  TheoremCheck p;
  p.theorem = "Thm8.1.perron";
  p.claim = claim_p;
  p.assertable = true;
  p.lhs = v.lambda1;
  p.rhs = *reg;
  p.relation = "==, simple";
  p.holds = v.ok();
  p.margin = v.lambda1 - v.lambda2;
  TheoremCheck b = detail::make_le("Thm8.1.bound", claim_b, true,
                                   std::max(std::abs(s.lambda1()), std::abs(s.lambda_min())),
                                   static_cast<double>(*reg), 1e-9);
  return {p, b};
}

// Thm 8.4: a certified Ramanujan algebra has h >= (d - 2 sqrt(d-1))/2.
inline TheoremCheck check_ramanujan_expansion(const EvolutionAlgebra& a,
                                              const AuditOptions& opt = {}) {
  const std::string claim = "Ramanujan => h >= (d - 2 sqrt(d-1))/2";
  RamanujanVerdict v;
  try {
    v = is_ramanujan(a);
  } catch (const DomainError&) {
    return detail::skipped("Thm8.4", claim, true, "Ramanujan preconditions not met");
  }
  if (!v.ramanujan) return detail::skipped("Thm8.4", claim, true, "not Ramanujan");
  SimpleGraph g = underlying_graph(a);
  auto h = detail::try_exact_cheeger(g, opt.enum_cap);
  if (!h.available) return detail::skipped("Thm8.4", claim, true, "enumeration cap");
  double floor = v.d >= 2 ? ramanujan_expansion_lower(v.d) : 0.0;
  TheoremCheck c = detail::make_le("Thm8.4", claim, true, floor, h.h.get_d(), 1e-12);
  c.rhs_exact = h.h.get_str();
  c.witness = json{{"d", v.d}, {"margin", v.margin}};
  return c;
}

// Thm 6.3 and Cor 6.4 on a doubly stochastic symmetric algebra: the paper
// bound n(1-h^2/(2d^2))^k (report-only; periodic chains violate it), the
// corrected bound sqrt(n) mu_*^k (asserted), and the mixing-time corollary.
inline std::vector<TheoremCheck> check_mixing(const EvolutionAlgebra& a,
                                              const AuditOptions& opt = {}) {
  std::vector<TheoremCheck> out;
  auto skip_all = [&](const std::string& why) {
    out.push_back(detail::skipped("Thm6.3", "mixing bounds", false, why));
    return out;
  };
  if (a.field().kind == FieldKind::Prime) return skip_all("prime field");
  if (!is_doubly_stochastic(a) || !is_symmetric(a))
    return skip_all("needs a symmetric doubly stochastic algebra");
  SimpleGraph g = underlying_graph(a);
  auto h = detail::try_exact_cheeger(g, opt.enum_cap);
  if (!h.available) return skip_all("enumeration cap");
  if (!h.infinite && h.h == 0) return skip_all("disconnected chain");

  const int n = a.dim();
  // d as in Thm 6.3: max row count of positive entries (diagonal included)
  int d = 0;
  for (int i = 0; i < n; ++i) {
    int cnt = 0;
    for (int j = 0; j < n; ++j)
      if (!a.entry_is_zero(i, j)) ++cnt;
    d = std::max(d, cnt);
  }
  MixingTrace tr = mixing_simulation(a, 0, opt.mixing_kmax);
  Spectrum s = n > kFullSpectrumCutoff ? symmetric_eigenvalues_extremes(to_real_matrix(a), n)
                                       : symmetric_eigenvalues(to_real_matrix(a), n);

  bool paper_ok = true, corrected_ok = true;
  json paper_witness, corrected_witness;
  mpq_class hval = h.infinite ? mpq_class(1) : h.h;
  for (int k = 0; k <= opt.mixing_kmax; ++k) {
    double pb = paper_mixing_bound(n, hval, d, k);
    double cb = corrected_mixing_bound(s, n, k);
    if (paper_ok && tr.distances[k] > pb + 1e-9) {
      paper_ok = false;
      paper_witness = json{{"k", k}, {"distance", tr.distances[k]}, {"bound", pb}};
    }
    if (corrected_ok && tr.distances[k] > cb + 1e-8) {
      corrected_ok = false;
      corrected_witness = json{{"k", k}, {"distance", tr.distances[k]}, {"bound", cb}};
    }
  }
  TheoremCheck paper;
  paper.theorem = "Thm6.3.paper";
  paper.claim = "||S^k e_i - pi||_1 <= n (1 - h^2/(2d^2))^k";
  paper.assertable = false;
  paper.holds = paper_ok;
  paper.witness = paper_witness;
  out.push_back(paper);

  TheoremCheck corrected;
  corrected.theorem = "Thm6.3.corrected";
  corrected.claim = "||S^k e_i - pi||_1 <= sqrt(n) mu_*^k";
  corrected.assertable = true;
  corrected.holds = corrected_ok;
  corrected.witness = corrected_witness;
  out.push_back(corrected);

  auto tmix = tr.empirical_tmix(opt.mixing_eps);
  double bound = tmix_bound(n, hval, d, opt.mixing_eps);
  TheoremCheck cor;
  cor.theorem = "Cor6.4.tmix";
  cor.claim = "empirical t_mix(eps) <= (2d^2/h^2) log(n/eps)";
  cor.assertable = false;
  cor.rhs = bound;
  if (tmix) {
    cor.lhs = *tmix;
    cor.holds = *tmix <= bound;
    cor.margin = bound - *tmix;
  } else {
    cor.lhs = std::numeric_limits<double>::infinity();
    cor.holds = false;
    cor.witness = json{{"note", "chain did not reach eps within kmax (periodic?)"},
                       {"kmax", opt.mixing_kmax}};
  }
  out.push_back(cor);
  return out;
}

// Thm 9.6: h(A1 (x) A2) >= min(h1, h2).  Report-only: bipartite factors give
// a disconnected product with h = 0.
inline TheoremCheck check_tensor_cheeger(const EvolutionAlgebra& a1, const EvolutionAlgebra& a2,
                                         const AuditOptions& opt = {}) {
  const std::string claim = "h(A1 (x) A2) >= min(h1, h2)";
  SimpleGraph g1 = underlying_graph(a1), g2 = underlying_graph(a2);
  if (!is_connected(g1) || !is_connected(g2) || g1.n < 2 || g2.n < 2)
    return detail::skipped("Thm9.6", claim, false, "needs connected factors on >= 2 vertices");
  auto h1 = detail::try_exact_cheeger(g1, opt.enum_cap);
  auto h2 = detail::try_exact_cheeger(g2, opt.enum_cap);
  EvolutionAlgebra prod = kronecker_product(a1, a2);
  auto hp = detail::try_exact_cheeger(underlying_graph(prod), opt.enum_cap);
  if (!h1.available || !h2.available || !hp.available)
    return detail::skipped("Thm9.6", claim, false, "enumeration cap");
  mpq_class lhs = std::min(h1.h, h2.h);
  TheoremCheck c;
  c.theorem = "Thm9.6";
  c.claim = claim;
  c.assertable = false;
  c.lhs = lhs.get_d();
  c.rhs = hp.h.get_d();
  c.lhs_exact = lhs.get_str();
  c.rhs_exact = hp.h.get_str();
  c.holds = lhs <= hp.h;
  c.margin = c.rhs - c.lhs;
  c.witness = json{{"h1", h1.h.get_str()}, {"h2", h2.h.get_str()},
                   {"h_product", hp.h.get_str()},
                   {"product_connected", is_connected(underlying_graph(prod))}};
  return c;
}

// Thm 8.2 finite-sample trend: lambda2 against the 2 sqrt(d-1) floor along a
// family of growing d-regular algebras.  Never asserted.
struct AlonBoppanaTrend {
  int d = 0;
  double floor = 0.0;
  std::vector<int> sizes;
  std::vector<double> lambda2s;
  std::vector<double> shortfalls;  // floor - lambda2 (positive: below floor)
  std::string verdict;             // "consistent" | "inconsistent" | "undefined"
};

inline AlonBoppanaTrend check_alon_boppana(const std::vector<EvolutionAlgebra>& family, int d) {
  AlonBoppanaTrend tr;
  tr.d = d;
  tr.floor = d >= 2 ? alon_boppana_floor(d) : 0.0;
  for (const auto& a : family) {
    SimpleGraph g = underlying_graph(a);
    auto reg = is_regular(g);
    if (!reg || *reg != d) throw DomainError("check_alon_boppana: family member is not d-regular");
    Spectrum s = g.n > kFullSpectrumCutoff
                     ? symmetric_eigenvalues_extremes(to_real_matrix(a), g.n)
                     : symmetric_eigenvalues(to_real_matrix(a), g.n);
    tr.sizes.push_back(g.n);
    tr.lambda2s.push_back(s.lambda2());
    tr.shortfalls.push_back(tr.floor - s.lambda2());
  }
  if (tr.sizes.size() < 2) tr.verdict = "undefined (single member)";
  else tr.verdict = tr.shortfalls.back() <= tr.shortfalls.front() + 1e-9 ? "consistent"
                                                                         : "inconsistent";
  return tr;
}

// Runs every applicable check on one algebra.  Exit semantics: only
// assertable failures count as failures; report-only findings are recorded.
inline AuditReport run_full_audit(const EvolutionAlgebra& a, const AuditOptions& opt = {},
                                  const std::string& input_name = "algebra") {
  AuditReport rep;
  rep.input = input_name;
  auto add = [&rep](TheoremCheck c) { rep.checks.push_back(std::move(c)); };
  auto add_all = [&rep](std::vector<TheoremCheck> cs) {
    for (auto& c : cs) rep.checks.push_back(std::move(c));
  };

  add(check_connectivity_equivalence(a, opt));
  add_all(check_cheeger_basic_bounds(a, opt));
  add(check_diameter_bound(a, opt));
  add_all(check_support_growth(a, opt));
  if (a.field().kind != FieldKind::Real) add_all(check_persistency(a, opt));
  add(check_spectral_gap_bound(a, opt));
  add_all(check_cheeger_paper(a, opt));
  add(check_trivial_bound(a, opt));
  add_all(check_spectral_characterisation(a, opt));
  add(check_ramanujan_expansion(a, opt));
  add_all(check_mixing(a, opt));

  std::stable_sort(rep.checks.begin(), rep.checks.end(),
                   [](const TheoremCheck& x, const TheoremCheck& y) {
                     return x.theorem < y.theorem;
                   });
  for (const auto& c : rep.checks) {
    if (!c.hypotheses_met) continue;
    if (!c.holds) {
      if (c.assertable) ++rep.assertable_failures;
      else ++rep.report_findings;
    }
  }
  return rep;
}

inline json theorem_check_to_json(const TheoremCheck& c) {
  json j;
  j["theorem"] = c.theorem;
  j["claim"] = c.claim;
  j["assertable"] = c.assertable;
  j["hypotheses_met"] = c.hypotheses_met;
  j["holds"] = c.holds;
  j["lhs"] = c.lhs;
  j["rhs"] = c.rhs;
  j["relation"] = c.relation;
  if (!c.lhs_exact.empty()) j["lhs_exact"] = c.lhs_exact;
  if (!c.rhs_exact.empty()) j["rhs_exact"] = c.rhs_exact;
  j["margin"] = c.margin;
  if (!c.witness.is_null()) j["witness"] = c.witness;
  return j;
}

inline json audit_report_to_json(const AuditReport& r) {
  json j;
  j["input"] = r.input;
  json checks = json::array();
  for (const auto& c : r.checks) checks.push_back(theorem_check_to_json(c));
  j["checks"] = std::move(checks);
  j["assertable_failures"] = r.assertable_failures;
  j["report_findings"] = r.report_findings;
  return j;
}

inline std::string audit_report_table(const AuditReport& r) {
  std::ostringstream os;
  os << "audit: " << r.input << "\n";
  os << std::left << std::setw(20) << "theorem" << std::setw(10) << "kind" << std::setw(9)
     << "status" << std::setw(14) << "lhs" << std::setw(14) << "rhs"
     << "claim\n";
  for (const auto& c : r.checks) {
    std::string status = !c.hypotheses_met ? "skipped" : (c.holds ? "holds" : "VIOLATED");
    os << std::left << std::setw(20) << c.theorem << std::setw(10)
       << (c.assertable ? "assert" : "report") << std::setw(9) << status;
    if (c.hypotheses_met)
      os << std::setw(14) << c.lhs << std::setw(14) << c.rhs;
    else
      os << std::setw(14) << "-" << std::setw(14) << "-";
    os << c.claim << "\n";
  }
  os << "assertable failures: " << r.assertable_failures
     << ", report findings: " << r.report_findings << "\n";
  return os.str();
}

inline json alon_boppana_to_json(const AlonBoppanaTrend& t) {
  json j;
  j["theorem"] = "Thm8.2.trend";
  j["d"] = t.d;
  j["floor"] = t.floor;
  j["sizes"] = t.sizes;
  j["lambda2"] = t.lambda2s;
  j["shortfall"] = t.shortfalls;
  j["verdict"] = t.verdict;
  return j;
}

}  // namespace eea
