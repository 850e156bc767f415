#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "eea/field.hpp"

namespace eea {

class Element;

// Finite-dimensional evolution algebra: dimension n, a dense n x n
// structural matrix A = (a_ij) over one field, natural basis e_0..e_{n-1}.
// Rows follow e_i^2 = sum_k a_ik e_k.  Treat as immutable once built.
class EvolutionAlgebra {
 public:
  EvolutionAlgebra(int n, FieldDescriptor field) : n_(n), field_(field) {
    if (n < 1) throw DomainError("algebra dimension must be >= 1");
    switch (field_.kind) {
      case FieldKind::Rational: q_.assign(static_cast<std::size_t>(n) * n, mpq_class()); break;
      case FieldKind::Prime: r_.assign(static_cast<std::size_t>(n) * n, 0); break;
      case FieldKind::Real: d_.assign(static_cast<std::size_t>(n) * n, 0.0); break;
    }
  }

  int dim() const { return n_; }
  const FieldDescriptor& field() const { return field_; }

  Scalar entry(int i, int j) const {
    check_index(i, j);
    switch (field_.kind) {
      case FieldKind::Rational: return Scalar::from_rational(q_[idx(i, j)]);
      case FieldKind::Prime: return Scalar::from_residue(r_[idx(i, j)], field_);
      case FieldKind::Real: return Scalar::from_real(d_[idx(i, j)]);
    }
    throw DomainError("bad field kind");
  }

  void set_entry(int i, int j, const Scalar& v) {
    check_index(i, j);
    require_same_field(field_, v.field(), "set_entry");
    switch (field_.kind) {
      case FieldKind::Rational: q_[idx(i, j)] = v.rat(); break;
      case FieldKind::Prime: r_[idx(i, j)] = v.res(); break;
      case FieldKind::Real: d_[idx(i, j)] = v.dbl(); break;
    }
  }

  bool entry_is_zero(int i, int j) const {
    check_index(i, j);
    switch (field_.kind) {
      case FieldKind::Rational: return mpq_sgn(q_[idx(i, j)].get_mpq_t()) == 0;
      case FieldKind::Prime: return r_[idx(i, j)] == 0;
      case FieldKind::Real: return d_[idx(i, j)] == 0.0;
    }
    return true;
  }

  // typed bulk access (kind must match)
  const std::vector<mpq_class>& rat_data() const { return q_; }
  const std::vector<std::uint64_t>& res_data() const { return r_; }
  const std::vector<double>& real_data() const { return d_; }
  std::vector<mpq_class>& rat_data() { return q_; }
  std::vector<std::uint64_t>& res_data() { return r_; }
  std::vector<double>& real_data() { return d_; }

  std::size_t idx(int i, int j) const { return static_cast<std::size_t>(i) * n_ + j; }

 private:
  void check_index(int i, int j) const {
    if (i < 0 || i >= n_ || j < 0 || j >= n_)
      throw DimensionMismatchError("entry index out of range");
  }

  int n_;
  FieldDescriptor field_;
  std::vector<mpq_class> q_;
  std::vector<std::uint64_t> r_;
  std::vector<double> d_;
};

// Coefficient vector in the natural basis of one algebra.
class Element {
 public:
  Element(int n, FieldDescriptor field) : n_(n), field_(field) {
    if (n < 1) throw DomainError("element length must be >= 1");
    switch (field_.kind) {
      case FieldKind::Rational: q_.assign(n, mpq_class()); break;
      case FieldKind::Prime: r_.assign(n, 0); break;
      case FieldKind::Real: d_.assign(n, 0.0); break;
    }
  }

  static Element zero(const EvolutionAlgebra& a) { return Element(a.dim(), a.field()); }

  static Element basis(const EvolutionAlgebra& a, int i) {
    Element e(a.dim(), a.field());
    e.set(i, Scalar::one(a.field()));
    return e;
  }

  int size() const { return n_; }
  const FieldDescriptor& field() const { return field_; }

  Scalar get(int i) const {
    check_index(i);
    switch (field_.kind) {
      case FieldKind::Rational: return Scalar::from_rational(q_[i]);
      case FieldKind::Prime: return Scalar::from_residue(r_[i], field_);
      case FieldKind::Real: return Scalar::from_real(d_[i]);
    }
    throw DomainError("bad field kind");
  }

  void set(int i, const Scalar& v) {
    check_index(i);
    require_same_field(field_, v.field(), "Element::set");
    switch (field_.kind) {
      case FieldKind::Rational: q_[i] = v.rat(); break;
      case FieldKind::Prime: r_[i] = v.res(); break;
      case FieldKind::Real: d_[i] = v.dbl(); break;
    }
  }

  bool coeff_is_zero(int i) const {
    check_index(i);
    switch (field_.kind) {
      case FieldKind::Rational: return mpq_sgn(q_[i].get_mpq_t()) == 0;
      case FieldKind::Prime: return r_[i] == 0;
      case FieldKind::Real: return d_[i] == 0.0;
    }
    return true;
  }

  const std::vector<mpq_class>& rat_data() const { return q_; }
  const std::vector<std::uint64_t>& res_data() const { return r_; }
  const std::vector<double>& real_data() const { return d_; }
  std::vector<mpq_class>& rat_data() { return q_; }
  std::vector<std::uint64_t>& res_data() { return r_; }
  std::vector<double>& real_data() { return d_; }

  friend Element operator+(const Element& a, const Element& b) {
    require_same_field(a.field_, b.field_, "element +");
    if (a.n_ != b.n_) throw DimensionMismatchError("element + length mismatch");
    Element out(a.n_, a.field_);
    switch (a.field_.kind) {
      case FieldKind::Rational:
        for (int i = 0; i < a.n_; ++i) out.q_[i] = a.q_[i] + b.q_[i];
        break;
      case FieldKind::Prime:
        for (int i = 0; i < a.n_; ++i) out.r_[i] = add_mod(a.r_[i], b.r_[i], a.field_.p);
        break;
      case FieldKind::Real:
        for (int i = 0; i < a.n_; ++i) out.d_[i] = a.d_[i] + b.d_[i];
        break;
    }
    return out;
  }

  friend bool operator==(const Element& a, const Element& b) {
    if (!(a.field_ == b.field_) || a.n_ != b.n_) return false;
    switch (a.field_.kind) {
      case FieldKind::Rational: return a.q_ == b.q_;
      case FieldKind::Prime: return a.r_ == b.r_;
      case FieldKind::Real: return a.d_ == b.d_;
    }
    return false;
  }

  std::string str() const {
    std::string s = "(";
    for (int i = 0; i < n_; ++i) {
      if (i) s += ", ";
      s += get(i).str();
    }
    return s + ")";
  }

 private:
  void check_index(int i) const {
    if (i < 0 || i >= n_) throw DimensionMismatchError("coefficient index out of range");
  }

  int n_;
  FieldDescriptor field_;
  std::vector<mpq_class> q_;
  std::vector<std::uint64_t> r_;
  std::vector<double> d_;
};

namespace detail {

template <class Ring>
void multiply_impl(const Ring& R, int n, const typename Ring::value_type* A,
                   const typename Ring::value_type* x, const typename Ring::value_type* y,
                   typename Ring::value_type* out) {
  for (int i = 0; i < n; ++i) {
    auto prod = R.mul(x[i], y[i]);
    if (R.is_zero(prod)) continue;
    const auto* row = A + static_cast<std::size_t>(i) * n;
    for (int k = 0; k < n; ++k) {
      if (R.is_zero(row[k])) continue;
      out[k] = R.add(out[k], R.mul(prod, row[k]));
    }
  }
}

inline void check_element(const EvolutionAlgebra& a, const Element& x, const char* where) {
  require_same_field(a.field(), x.field(), where);
  if (a.dim() != x.size())
    throw DimensionMismatchError(std::string(where) + ": element length " +
                                 std::to_string(x.size()) + " vs dimension " +
                                 std::to_string(a.dim()));
}

}  // namespace detail

// x . y with e_i e_j = 0 (i != j) and e_i^2 = sum_k a_ik e_k:
// coefficient of e_k is sum_i x_i y_i a_ik.
inline Element multiply(const EvolutionAlgebra& a, const Element& x, const Element& y) {
  detail::check_element(a, x, "multiply");
  detail::check_element(a, y, "multiply");
  Element out = Element::zero(a);
  const int n = a.dim();
  switch (a.field().kind) {
    case FieldKind::Rational:
      detail::multiply_impl(RationalRing{}, n, a.rat_data().data(), x.rat_data().data(),
                            y.rat_data().data(), out.rat_data().data());
      break;
    case FieldKind::Prime:
      detail::multiply_impl(PrimeRing{a.field().p}, n, a.res_data().data(),
                            x.res_data().data(), y.res_data().data(), out.res_data().data());
      break;
    case FieldKind::Real:
      detail::multiply_impl(RealRing{}, n, a.real_data().data(), x.real_data().data(),
                            y.real_data().data(), out.real_data().data());
      break;
  }
  return out;
}

// x^m = x^{m-1} . x, x^1 = x.
inline Element principal_power(const EvolutionAlgebra& a, const Element& x, long m) {
  if (m < 1) throw DomainError("principal power exponent must be >= 1");
  detail::check_element(a, x, "principal_power");
  Element acc = x;
  for (long i = 2; i <= m; ++i) acc = multiply(a, acc, x);
  return acc;
}

struct PlenaryOptions {
  // Abort (ResourceLimitError) when any exact coefficient exceeds this many
  // bits; plenary coefficients grow doubly exponentially.
  std::uint64_t max_coeff_bits = 1'000'000;
};

namespace detail {

inline std::uint64_t rational_bits(const mpq_class& q) {
  return mpz_sizeinbase(q.get_num_mpz_t(), 2) + mpz_sizeinbase(q.get_den_mpz_t(), 2);
}

inline void check_plenary_cap(const Element& x, const PlenaryOptions& opt) {
  if (x.field().kind != FieldKind::Rational) return;
  for (const auto& q : x.rat_data())
    if (rational_bits(q) > opt.max_coeff_bits)
      throw ResourceLimitError("plenary coefficient exceeded " +
                               std::to_string(opt.max_coeff_bits) + " bits");
}

}  // namespace detail

// x^[k]: x^[0] = x, x^[k] = (x^[k-1])^2.
inline Element plenary_power(const EvolutionAlgebra& a, const Element& x, long k,
                             const PlenaryOptions& opt = {}) {
  if (k < 0) throw DomainError("plenary power exponent must be >= 0");
  detail::check_element(a, x, "plenary_power");
  Element acc = x;
  for (long i = 1; i <= k; ++i) {
    acc = multiply(a, acc, acc);
    detail::check_plenary_cap(acc, opt);
  }
  return acc;
}

// Indices with nonzero coefficient.  Over the reals "nonzero" is relative:
// |a_k| > rel_tol * max_j |a_j|.
inline std::vector<int> support(const EvolutionAlgebra& a, const Element& x,
                                double rel_tol = 1e-12) {
  detail::check_element(a, x, "support");
  std::vector<int> out;
  if (x.field().kind == FieldKind::Real) {
    double mx = 0.0;
    for (double v : x.real_data()) mx = std::max(mx, std::abs(v));
    if (mx == 0.0) return out;
    for (int i = 0; i < x.size(); ++i)
      if (std::abs(x.real_data()[i]) > rel_tol * mx) out.push_back(i);
    return out;
  }
  for (int i = 0; i < x.size(); ++i)
    if (!x.coeff_is_zero(i)) out.push_back(i);
  return out;
}

// The linear evolution operator E(sum a_i e_i) = sum a_i e_i^2.  Linear in
// the coefficients, unlike plenary squaring which squares them.
inline Element evolution_operator_apply(const EvolutionAlgebra& a, const Element& x) {
  detail::check_element(a, x, "evolution_operator_apply");
  Element out = Element::zero(a);
  const int n = a.dim();
  switch (a.field().kind) {
    case FieldKind::Rational: {
      for (int i = 0; i < n; ++i) {
        const mpq_class& c = x.rat_data()[i];
        if (mpq_sgn(c.get_mpq_t()) == 0) continue;
        for (int k = 0; k < n; ++k) {
          const mpq_class& aik = a.rat_data()[a.idx(i, k)];
          if (mpq_sgn(aik.get_mpq_t()) != 0) out.rat_data()[k] += c * aik;
        }
      }
      break;
    }
    case FieldKind::Prime: {
      const std::uint64_t p = a.field().p;
      for (int i = 0; i < n; ++i) {
        std::uint64_t c = x.res_data()[i];
        if (c == 0) continue;
        for (int k = 0; k < n; ++k) {
          std::uint64_t aik = a.res_data()[a.idx(i, k)];
          if (aik) out.res_data()[k] = add_mod(out.res_data()[k], mul_mod(c, aik, p), p);
        }
      }
      break;
    }
    case FieldKind::Real: {
      for (int i = 0; i < n; ++i) {
        double c = x.real_data()[i];
        if (c == 0.0) continue;
        for (int k = 0; k < n; ++k) out.real_data()[k] += c * a.real_data()[a.idx(i, k)];
      }
      break;
    }
  }
  return out;
}

// a_ij == a_ji for all i != j.  Exact fields compare exactly; the real field
// uses |a_ij - a_ji| <= tol * max(1, max|a|).
inline bool is_symmetric(const EvolutionAlgebra& a, double tol = 1e-12) {
  const int n = a.dim();
  if (a.field().kind == FieldKind::Real) {
    double mx = 0.0;
    for (double v : a.real_data()) mx = std::max(mx, std::abs(v));
    double bound = tol * std::max(1.0, mx);
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        if (std::abs(a.real_data()[a.idx(i, j)] - a.real_data()[a.idx(j, i)]) > bound)
          return false;
    return true;
  }
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (!(a.entry(i, j) == a.entry(j, i))) return false;
  return true;
}

// Off-diagonal entries all 0 or 1 and zero diagonal (loops excluded, per the
// loopless underlying-graph convention).  allow_loops relaxes the diagonal.
inline bool is_graphicable(const EvolutionAlgebra& a, bool allow_loops = false) {
  const int n = a.dim();
  const Scalar one = Scalar::one(a.field());
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (i == j) {
        if (!allow_loops && !a.entry_is_zero(i, i)) return false;
        continue;
      }
      if (!a.entry_is_zero(i, j) && !(a.entry(i, j) == one)) return false;
    }
  return true;
}

namespace detail {

// rank by fraction-free (Bareiss) elimination on the cleared-denominator
// integer matrix; columns without a pivot are skipped.
inline int rank_bareiss(std::vector<mpz_class> m, int n) {
  mpz_class prev(1);
  int row = 0;
  for (int col = 0; col < n && row < n; ++col) {
    int piv = -1;
    for (int i = row; i < n; ++i)
      if (m[static_cast<std::size_t>(i) * n + col] != 0) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    if (piv != row)
      for (int j = 0; j < n; ++j)
        std::swap(m[static_cast<std::size_t>(piv) * n + j],
                  m[static_cast<std::size_t>(row) * n + j]);
    const mpz_class pivot = m[static_cast<std::size_t>(row) * n + col];
    for (int i = row + 1; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        if (j == col) continue;
        mpz_class t = m[static_cast<std::size_t>(i) * n + j] * pivot -
                      m[static_cast<std::size_t>(i) * n + col] *
                          m[static_cast<std::size_t>(row) * n + j];
        mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
        m[static_cast<std::size_t>(i) * n + j] = t;
      }
      m[static_cast<std::size_t>(i) * n + col] = 0;
    }
    prev = pivot;
    ++row;
  }
  return row;
}

inline int rank_mod_p(std::vector<std::uint64_t> m, int n, std::uint64_t p) {
  int row = 0;
  for (int col = 0; col < n && row < n; ++col) {
    int piv = -1;
    for (int i = row; i < n; ++i)
      if (m[static_cast<std::size_t>(i) * n + col] != 0) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    if (piv != row)
      for (int j = 0; j < n; ++j)
        std::swap(m[static_cast<std::size_t>(piv) * n + j],
                  m[static_cast<std::size_t>(row) * n + j]);
    std::uint64_t inv = inv_mod(m[static_cast<std::size_t>(row) * n + col], p);
    for (int i = row + 1; i < n; ++i) {
      std::uint64_t f = mul_mod(m[static_cast<std::size_t>(i) * n + col], inv, p);
      if (!f) continue;
      for (int j = col; j < n; ++j)
        m[static_cast<std::size_t>(i) * n + j] =
            sub_mod(m[static_cast<std::size_t>(i) * n + j],
                    mul_mod(f, m[static_cast<std::size_t>(row) * n + j], p), p);
    }
    ++row;
  }
  return row;
}

inline int rank_real(std::vector<double> m, int n, double rel_tol) {
  double mx = 0.0;
  for (double v : m) mx = std::max(mx, std::abs(v));
  if (mx == 0.0) return 0;
  const double tol = rel_tol * mx;
  int row = 0;
  for (int col = 0; col < n && row < n; ++col) {
    int piv = row;
    for (int i = row + 1; i < n; ++i)
      if (std::abs(m[static_cast<std::size_t>(i) * n + col]) >
          std::abs(m[static_cast<std::size_t>(piv) * n + col]))
        piv = i;
    if (std::abs(m[static_cast<std::size_t>(piv) * n + col]) <= tol) continue;
    if (piv != row)
      for (int j = 0; j < n; ++j)
        std::swap(m[static_cast<std::size_t>(piv) * n + j],
                  m[static_cast<std::size_t>(row) * n + j]);
    for (int i = row + 1; i < n; ++i) {
      double f = m[static_cast<std::size_t>(i) * n + col] /
                 m[static_cast<std::size_t>(row) * n + col];
      for (int j = col; j < n; ++j)
        m[static_cast<std::size_t>(i) * n + j] -=
            f * m[static_cast<std::size_t>(row) * n + j];
    }
    ++row;
  }
  return row;
}

}  // namespace detail

// rank(A) == n.
inline bool is_nonsingular(const EvolutionAlgebra& a) {
  const int n = a.dim();
  switch (a.field().kind) {
    case FieldKind::Rational: {
      std::vector<mpz_class> m(static_cast<std::size_t>(n) * n);
      for (int i = 0; i < n; ++i) {
        mpz_class lcm(1);
        for (int j = 0; j < n; ++j)
          mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(),
                  a.rat_data()[a.idx(i, j)].get_den_mpz_t());
        for (int j = 0; j < n; ++j) {
          const mpq_class& q = a.rat_data()[a.idx(i, j)];
          m[a.idx(i, j)] = q.get_num() * (lcm / q.get_den());
        }
      }
      return detail::rank_bareiss(std::move(m), n) == n;
    }
    case FieldKind::Prime:
      return detail::rank_mod_p(a.res_data(), n, a.field().p) == n;
    case FieldKind::Real:
      return detail::rank_real(a.real_data(), n, 1e-10) == n;
  }
  return false;
}

// Natural-basis rescaling e_i -> lambda_i e_i: a'_ij = a_ij * lambda_j / lambda_i^2.
// Preserves the support pattern exactly.
inline EvolutionAlgebra rescale_basis(const EvolutionAlgebra& a,
                                      const std::vector<Scalar>& lambdas) {
  const int n = a.dim();
  if (static_cast<int>(lambdas.size()) != n)
    throw DimensionMismatchError("rescale_basis: need one lambda per generator");
  for (const Scalar& l : lambdas) {
    require_same_field(a.field(), l.field(), "rescale_basis");
    if (l.is_zero()) throw DomainError("rescale_basis: zero lambda");
  }
  EvolutionAlgebra out(n, a.field());
  for (int i = 0; i < n; ++i) {
    Scalar li2 = lambdas[i] * lambdas[i];
    for (int j = 0; j < n; ++j) {
      if (a.entry_is_zero(i, j)) continue;
      out.set_entry(i, j, div(a.entry(i, j) * lambdas[j], li2));
    }
  }
  return out;
}

// Relabeling e_i -> e_{sigma(i)}: a'_{sigma(i),sigma(j)} = a_{ij}.
inline EvolutionAlgebra permute_basis(const EvolutionAlgebra& a,
                                      const std::vector<int>& sigma) {
  const int n = a.dim();
  if (static_cast<int>(sigma.size()) != n)
    throw DomainError("permute_basis: permutation length mismatch");
  std::vector<bool> seen(n, false);
  for (int v : sigma) {
    if (v < 0 || v >= n || seen[v]) throw DomainError("permute_basis: not a permutation");
    seen[v] = true;
  }
  EvolutionAlgebra out(n, a.field());
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (!a.entry_is_zero(i, j)) out.set_entry(sigma[i], sigma[j], a.entry(i, j));
  return out;
}

}  // namespace eea
