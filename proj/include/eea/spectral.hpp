#pragma once

#include <cblas.h>
#include <lapacke.h>

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "eea/graph.hpp"

extern "C" void openblas_set_num_threads(int);

namespace eea {

// Real eigenvalues of a symmetric matrix, sorted non-increasing.  partial
// spectra hold only the extremes {l1, l2, l_{n-1}, l_n} (n is kept so gap
// and Ramanujan queries still work).
struct Spectrum {
  std::vector<double> eigenvalues;
  double residual_bound = 0.0;  // max_k ||A v_k - l_k v_k|| / ||A||_2
  bool partial = false;
  int n = 0;

  double lambda1() const { return eigenvalues.front(); }
  double lambda2() const {
    if (eigenvalues.size() < 2) throw DomainError("spectrum has fewer than 2 eigenvalues");
    return eigenvalues[1];
  }
  double lambda_min() const { return eigenvalues.back(); }
  // second smallest (partial spectra store it explicitly)
  double lambda_second_min() const {
    if (eigenvalues.size() < 2) throw DomainError("spectrum has fewer than 2 eigenvalues");
    return eigenvalues[eigenvalues.size() - 2];
  }
};

namespace detail {

inline void blas_single_thread() {
  // pinned for bit-reproducible reductions
  static const bool done = [] {
    openblas_set_num_threads(1);
    return true;
  }();
  (void)done;
}

inline void check_symmetric_matrix(const std::vector<double>& a, int n) {
  if (n < 1 || static_cast<std::size_t>(n) * n != a.size())
    throw DimensionMismatchError("matrix is not n x n");
  double mx = 0.0;
  for (double v : a) mx = std::max(mx, std::abs(v));
  const double tol = 1e-12 * std::max(1.0, mx);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (std::abs(a[static_cast<std::size_t>(i) * n + j] -
                   a[static_cast<std::size_t>(j) * n + i]) > tol)
        throw NumericError("asymmetric input to symmetric eigensolver");
}

// max_k ||A v_k - l_k v_k||_2 over the eigenpair columns of v.
inline double residual_of_pairs(const std::vector<double>& a, int n,
                                const std::vector<double>& v, const std::vector<double>& w,
                                int npairs) {
  blas_single_thread();
  std::vector<double> av(static_cast<std::size_t>(n) * npairs, 0.0);
  cblas_dgemm(CblasRowMajor, CblasNoTrans, CblasNoTrans, n, npairs, n, 1.0, a.data(), n,
              v.data(), npairs, 0.0, av.data(), npairs);
  double worst = 0.0;
  for (int k = 0; k < npairs; ++k) {
    double s = 0.0;
    for (int i = 0; i < n; ++i) {
      double r = av[static_cast<std::size_t>(i) * npairs + k] -
                 w[k] * v[static_cast<std::size_t>(i) * npairs + k];
      s += r * r;
    }
    worst = std::max(worst, std::sqrt(s));
  }
  return worst;
}

}  // namespace detail

// Full spectrum of a dense symmetric matrix (row-major).  LAPACK dsyevd,
// single-threaded BLAS: bit-identical output for identical input bits.
inline Spectrum symmetric_eigenvalues(const std::vector<double>& a, int n) {
  detail::check_symmetric_matrix(a, n);
  detail::blas_single_thread();
  std::vector<double> v = a;
  std::vector<double> w(n);
  int info = LAPACKE_dsyevd(LAPACK_ROW_MAJOR, 'V', 'U', n, v.data(), n, w.data());
  if (info != 0)
    throw NumericError("dsyevd failed to converge (info=" + std::to_string(info) + ")");
  Spectrum s;
  s.n = n;
  s.eigenvalues.assign(w.rbegin(), w.rend());
  double norm = std::max(std::abs(s.eigenvalues.front()), std::abs(s.eigenvalues.back()));
  if (norm > 0.0) {
    // dsyevd returns eigenvectors in the columns (ascending eigenvalues)
    std::vector<double> wa(w.begin(), w.end());
    s.residual_bound = detail::residual_of_pairs(a, n, v, wa, n) / norm;
  }
  return s;
}

// Extremes only: {l1, l2, l_{n-1}, l_n}.  Used past the dense-full cutoff;
// enough for gap, Perron and Ramanujan queries.
inline Spectrum symmetric_eigenvalues_extremes(const std::vector<double>& a, int n) {
  detail::check_symmetric_matrix(a, n);
  detail::blas_single_thread();
  if (n <= 4) {
    Spectrum s = symmetric_eigenvalues(a, n);
    return s;
  }
  auto solve_range = [&](int il, int iu, std::vector<double>& w_out,
                         std::vector<double>& v_out) {
    std::vector<double> work = a;
    int m = 0;
    w_out.assign(n, 0.0);
    v_out.assign(static_cast<std::size_t>(n) * (iu - il + 1), 0.0);
    std::vector<lapack_int> isuppz(2 * std::max(1, iu - il + 1));
    int info = LAPACKE_dsyevr(LAPACK_ROW_MAJOR, 'V', 'I', 'U', n, work.data(), n, 0.0, 0.0,
                              il, iu, 0.0, &m, w_out.data(), v_out.data(), iu - il + 1,
                              isuppz.data());
    if (info != 0 || m != iu - il + 1)
      throw NumericError("dsyevr failed (info=" + std::to_string(info) + ")");
  };
  std::vector<double> w_lo, v_lo, w_hi, v_hi;
  solve_range(1, 2, w_lo, v_lo);          // l_n, l_{n-1} (ascending)
  solve_range(n - 1, n, w_hi, v_hi);      // l_2, l_1 (ascending)
  Spectrum s;
  s.n = n;
  s.partial = true;
  s.eigenvalues = {w_hi[1], w_hi[0], w_lo[1], w_lo[0]};
  double norm = std::max(std::abs(s.eigenvalues.front()), std::abs(s.eigenvalues.back()));
  if (norm > 0.0) {
    std::vector<double> wlo2(w_lo.begin(), w_lo.begin() + 2);
    std::vector<double> whi2(w_hi.begin(), w_hi.begin() + 2);
    double r = std::max(detail::residual_of_pairs(a, n, v_lo, wlo2, 2),
                        detail::residual_of_pairs(a, n, v_hi, whi2, 2));
    s.residual_bound = r / norm;
  }
  return s;
}

// Dense real matrix of the structural constants; prime-field algebras have
// no real embedding and are rejected.
inline std::vector<double> to_real_matrix(const EvolutionAlgebra& a) {
  const int n = a.dim();
  std::vector<double> m(static_cast<std::size_t>(n) * n, 0.0);
  switch (a.field().kind) {
    case FieldKind::Rational:
      for (std::size_t k = 0; k < m.size(); ++k) m[k] = a.rat_data()[k].get_d();
      break;
    case FieldKind::Real:
      m = a.real_data();
      break;
    case FieldKind::Prime:
      throw FieldMismatchError("prime-field matrices have no real spectrum");
  }
  return m;
}

inline double spectral_gap(const Spectrum& s) {
  return s.lambda1() - s.lambda2();
}

struct PerronVerdict {
  bool value_matches = false;  // |l1 - d| <= 1e-9
  bool simple = false;         // l1 - l2 > 1e-9
  double lambda1 = 0.0;
  double lambda2 = 0.0;
  double d = 0.0;
  bool ok() const { return value_matches && simple; }
};

// For the adjacency spectrum of a connected d-regular graph: l1 = d and the
// Perron eigenvalue is simple.
inline PerronVerdict perron_data(const Spectrum& s, double d) {
  PerronVerdict v;
  v.lambda1 = s.lambda1();
  v.lambda2 = s.lambda2();
  v.d = d;
  v.value_matches = std::abs(v.lambda1 - d) <= 1e-9;
  v.simple = v.lambda1 - v.lambda2 > 1e-9;
  return v;
}

inline double alon_boppana_floor(int d) {
  if (d < 2) throw DomainError("alon_boppana_floor needs d >= 2");
  return 2.0 * std::sqrt(static_cast<double>(d - 1));
}

inline double ramanujan_expansion_lower(int d) {
  if (d < 2) throw DomainError("ramanujan_expansion_lower needs d >= 2");
  return (d - 2.0 * std::sqrt(static_cast<double>(d - 1))) / 2.0;
}

struct RamanujanVerdict {
  bool ramanujan = false;
  int d = 0;
  double bound = 0.0;                // 2 sqrt(d-1)
  double max_nontrivial_abs = 0.0;   // over eigenvalues with ||l|-d| > 1e-9
  double margin = 0.0;               // bound - max_nontrivial_abs
  bool partial_spectrum = false;
};

// Dense-full cutoff for is_ramanujan and friends.
inline constexpr int kFullSpectrumCutoff = 512;

// Every eigenvalue with |l| != d satisfies |l| <= 2 sqrt(d-1) (+1e-9 slack).
// Requires a symmetric graphicable d-regular connected algebra; each failed
// precondition is named.
inline RamanujanVerdict is_ramanujan(const EvolutionAlgebra& a) {
  if (!is_symmetric(a)) throw DomainError("is_ramanujan: algebra is not symmetric");
  if (!is_graphicable(a)) throw DomainError("is_ramanujan: algebra is not graphicable");
  SimpleGraph g = underlying_graph(a);
  auto reg = is_regular(g);
  if (!reg) throw DomainError("is_ramanujan: underlying graph is not regular");
  if (!is_connected(g)) throw DomainError("is_ramanujan: underlying graph is not connected");
  const int d = *reg;
  if (d < 1) throw DomainError("is_ramanujan: needs degree >= 1");

  RamanujanVerdict out;
  out.d = d;
  out.bound = d == 1 ? 0.0 : 2.0 * std::sqrt(static_cast<double>(d - 1));

  std::vector<double> m = to_real_matrix(a);
  const double trivial_tol = 1e-9;
  double worst = 0.0;
  if (a.dim() <= kFullSpectrumCutoff) {
    Spectrum s = symmetric_eigenvalues(m, a.dim());
    for (double l : s.eigenvalues)
      if (std::abs(std::abs(l) - d) > trivial_tol) worst = std::max(worst, std::abs(l));
  } else {
    Spectrum s = symmetric_eigenvalues_extremes(m, a.dim());
    out.partial_spectrum = true;
    // connected regular: l1 = d is the unique top; interior eigenvalues are
    // bracketed by l2 and l_{n-1}, so the extremes decide the bound.
    for (double l : {s.eigenvalues[1], s.eigenvalues[2], s.eigenvalues[3]})
      if (std::abs(std::abs(l) - d) > trivial_tol) worst = std::max(worst, std::abs(l));
  }
  out.max_nontrivial_abs = worst;
  out.margin = out.bound - worst;
  out.ramanujan = worst <= out.bound + 1e-9;
  return out;
}

}  // namespace eea
