#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <unordered_map>
#include <vector>

#include "eea/field.hpp"

namespace eea {

inline constexpr int kGroupClosureCap = 200'000;
// Multiplication tables are materialized up to this order; larger groups
// multiply through their element representation.
inline constexpr int kGroupTableCap = 4096;

enum class GroupQuotient { None, PSL, PGL };

namespace detail {

using Mat2 = std::array<std::uint64_t, 4>;  // row-major [[m0,m1],[m2,m3]]

inline Mat2 mat_mul(const Mat2& a, const Mat2& b, std::uint64_t p) {
  return {add_mod(mul_mod(a[0], b[0], p), mul_mod(a[1], b[2], p), p),
          add_mod(mul_mod(a[0], b[1], p), mul_mod(a[1], b[3], p), p),
          add_mod(mul_mod(a[2], b[0], p), mul_mod(a[3], b[2], p), p),
          add_mod(mul_mod(a[2], b[1], p), mul_mod(a[3], b[3], p), p)};
}

inline std::uint64_t mat_det(const Mat2& m, std::uint64_t p) {
  return sub_mod(mul_mod(m[0], m[3], p), mul_mod(m[1], m[2], p), p);
}

inline Mat2 mat_adjugate(const Mat2& m, std::uint64_t p) {
  auto neg = [p](std::uint64_t v) { return v == 0 ? 0 : p - v; };
  return {m[3], neg(m[1]), neg(m[2]), m[0]};
}

// PSL: rescale to determinant 1 (the determinant must be a square mod p),
// then take the lexicographically smaller of {M, -M} (row-major).  PGL:
// scale so the first nonzero entry in column-major order (m0, m2, m1, m3)
// equals 1.
inline Mat2 mat_canonical(Mat2 m, std::uint64_t p, GroupQuotient quo) {
  for (auto& v : m) v %= p;
  switch (quo) {
    case GroupQuotient::None:
      return m;
    case GroupQuotient::PSL: {
      std::uint64_t det = mat_det(m, p);
      if (det == 0) throw DomainError("singular matrix has no PSL class");
      if (det != 1) {
        std::uint64_t root = 0;
        for (std::uint64_t r = 1; r < p; ++r)
          if (mul_mod(r, r, p) == det) {
            root = r;
            break;
          }
        if (root == 0)
          throw DomainError("matrix determinant is a non-square: not a PSL2 element");
        std::uint64_t inv = inv_mod(root, p);
        for (auto& v : m) v = mul_mod(v, inv, p);
      }
      Mat2 neg;
      for (int k = 0; k < 4; ++k) neg[k] = m[k] == 0 ? 0 : p - m[k];
      return neg < m ? neg : m;
    }
    case GroupQuotient::PGL: {
      for (int k : {0, 2, 1, 3}) {
        if (m[k] != 0) {
          std::uint64_t inv = inv_mod(m[k], p);
          for (auto& v : m) v = mul_mod(v, inv, p);
          return m;
        }
      }
      throw DomainError("zero matrix has no PGL class");
    }
  }
  return m;
}

inline std::uint64_t mat_key(const Mat2& m) {
  return (m[0] << 48) | (m[1] << 32) | (m[2] << 16) | m[3];
}

inline std::string mat_label(const Mat2& m) {
  std::ostringstream os;
  os << "[[" << m[0] << "," << m[1] << "],[" << m[2] << "," << m[3] << "]]";
  return os.str();
}

inline std::string perm_label(const std::vector<int>& p) {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < p.size(); ++i) os << (i ? "," : "") << p[i];
  os << "]";
  return os.str();
}

inline std::vector<int> perm_compose(const std::vector<int>& a, const std::vector<int>& b) {
  std::vector<int> c(a.size());
  for (std::size_t x = 0; x < a.size(); ++x) c[x] = a[b[x]];
  return c;
}

inline std::vector<int> perm_inverse(const std::vector<int>& a) {
  std::vector<int> inv(a.size());
  for (std::size_t x = 0; x < a.size(); ++x) inv[a[x]] = static_cast<int>(x);
  return inv;
}

}  // namespace detail

// A finite group with canonical element numbering.  Elements are stored as
// permutations or as 2x2 matrices over F_p modulo a declared quotient; the
// multiplication table is materialized for orders <= kGroupTableCap and
// products are computed through the representation beyond that.
class FiniteGroup {
 public:
  enum class Rep { Permutation, Matrix };

  int order() const { return static_cast<int>(labels_.size()); }
  int identity() const { return identity_; }
  int inverse(int g) const {
    check(g);
    return inverse_[g];
  }
  const std::string& label(int g) const {
    check(g);
    return labels_[g];
  }

  int op(int a, int b) const {
    check(a);
    check(b);
    if (!table_.empty()) return table_[static_cast<std::size_t>(a) * order() + b];
    return compute_op(a, b);
  }

  bool has_table() const { return !table_.empty(); }
  const std::vector<int>& table() const {
    if (table_.empty())
      throw ResourceLimitError("multiplication table not materialized for order " +
                               std::to_string(order()));
    return table_;
  }

  std::optional<int> find_matrix(detail::Mat2 m) const {
    if (rep_ != Rep::Matrix) return std::nullopt;
    auto it = mat_index_.find(detail::mat_key(detail::mat_canonical(m, p_, quo_)));
    if (it == mat_index_.end()) return std::nullopt;
    return it->second;
  }

  std::optional<int> find_permutation(const std::vector<int>& p) const {
    if (rep_ != Rep::Permutation) return std::nullopt;
    auto it = perm_index_.find(p);
    if (it == perm_index_.end()) return std::nullopt;
    return it->second;
  }

  Rep representation() const { return rep_; }
  GroupQuotient quotient() const { return quo_; }
  std::uint64_t modulus() const { return p_; }

  // --- construction ---

  // Breadth-first closure of permutation generators; element numbering by
  // discovery order from the identity.
  static FiniteGroup from_permutation_generators(
      const std::vector<std::vector<int>>& gens, int closure_cap = kGroupClosureCap) {
    if (gens.empty()) throw DomainError("no generators");
    const std::size_t deg = gens[0].size();
    for (const auto& g : gens) {
      if (g.size() != deg) throw DomainError("generator degree mismatch");
      std::vector<bool> seen(deg, false);
      for (int v : g) {
        if (v < 0 || static_cast<std::size_t>(v) >= deg || seen[v])
          throw DomainError("malformed permutation generator");
        seen[v] = true;
      }
    }
    FiniteGroup grp;
    grp.rep_ = Rep::Permutation;
    std::vector<int> id(deg);
    for (std::size_t i = 0; i < deg; ++i) id[i] = static_cast<int>(i);
    grp.perms_.push_back(id);
    grp.perm_index_[id] = 0;
    for (std::size_t head = 0; head < grp.perms_.size(); ++head) {
      for (const auto& s : gens) {
        auto next = detail::perm_compose(grp.perms_[head], s);
        if (grp.perm_index_.emplace(next, static_cast<int>(grp.perms_.size())).second) {
          grp.perms_.push_back(std::move(next));
          if (static_cast<int>(grp.perms_.size()) > closure_cap)
            throw ResourceLimitError("group closure exceeded cap " +
                                     std::to_string(closure_cap));
        }
      }
    }
    grp.finish_permutation();
    return grp;
  }

  // Same closure engine for 2x2 matrices over F_p with a declared quotient.
  static FiniteGroup from_matrix_generators(const std::vector<detail::Mat2>& gens,
                                            std::uint64_t p, GroupQuotient quo,
                                            int closure_cap = kGroupClosureCap) {
    if (!is_prime_u64(p)) throw DomainError("matrix group modulus must be prime");
    if (gens.empty()) throw DomainError("no generators");
    FiniteGroup grp;
    grp.rep_ = Rep::Matrix;
    grp.p_ = p;
    grp.quo_ = quo;
    std::vector<detail::Mat2> canon;
    for (auto g : gens) {
      auto c = detail::mat_canonical(g, p, quo);
      if (detail::mat_det(c, p) == 0) throw DomainError("singular matrix generator");
      canon.push_back(c);
    }
    detail::Mat2 id{1, 0, 0, 1};
    id = detail::mat_canonical(id, p, quo);
    grp.mats_.push_back(id);
    grp.mat_index_[detail::mat_key(id)] = 0;
    for (std::size_t head = 0; head < grp.mats_.size(); ++head) {
      for (const auto& s : canon) {
        auto next = detail::mat_canonical(detail::mat_mul(grp.mats_[head], s, p), p, quo);
        if (grp.mat_index_.emplace(detail::mat_key(next), static_cast<int>(grp.mats_.size()))
                .second) {
          grp.mats_.push_back(next);
          if (static_cast<int>(grp.mats_.size()) > closure_cap)
            throw ResourceLimitError("group closure exceeded cap " +
                                     std::to_string(closure_cap));
        }
      }
    }
    grp.finish_matrix();
    return grp;
  }

  // Full enumeration with numbering by sorted canonical form; used by the
  // named SL2/PSL2/PGL2 constructors.
  static FiniteGroup from_matrix_enumeration(std::vector<detail::Mat2> elements,
                                             std::uint64_t p, GroupQuotient quo) {
    FiniteGroup grp;
    grp.rep_ = Rep::Matrix;
    grp.p_ = p;
    grp.quo_ = quo;
    std::sort(elements.begin(), elements.end());
    elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
    grp.mats_ = std::move(elements);
    for (std::size_t i = 0; i < grp.mats_.size(); ++i)
      grp.mat_index_[detail::mat_key(grp.mats_[i])] = static_cast<int>(i);
    grp.finish_matrix();
    return grp;
  }

 private:
  void check(int g) const {
    if (g < 0 || g >= order()) throw DomainError("group element index out of range");
  }

  int compute_op(int a, int b) const {
    if (rep_ == Rep::Permutation) {
      auto it = perm_index_.find(detail::perm_compose(perms_[a], perms_[b]));
      if (it == perm_index_.end()) throw DomainError("group not closed under product");
      return it->second;
    }
    auto prod = detail::mat_canonical(detail::mat_mul(mats_[a], mats_[b], p_), p_, quo_);
    auto it = mat_index_.find(detail::mat_key(prod));
    if (it == mat_index_.end()) throw DomainError("group not closed under product");
    return it->second;
  }

  void finish_permutation() {
    const int m = static_cast<int>(perms_.size());
    labels_.reserve(m);
    inverse_.resize(m);
    for (int g = 0; g < m; ++g) {
      labels_.push_back(detail::perm_label(perms_[g]));
      auto it = perm_index_.find(detail::perm_inverse(perms_[g]));
      if (it == perm_index_.end()) throw DomainError("closure lost an inverse");
      inverse_[g] = it->second;
    }
    std::vector<int> id(perms_[0].size());
    for (std::size_t i = 0; i < id.size(); ++i) id[i] = static_cast<int>(i);
    auto it = perm_index_.find(id);
    if (it == perm_index_.end()) throw DomainError("identity missing from closure");
    identity_ = it->second;
    materialize_and_verify();
  }

  void finish_matrix() {
    const int m = static_cast<int>(mats_.size());
    labels_.reserve(m);
    inverse_.resize(m);
    detail::Mat2 id = detail::mat_canonical({1, 0, 0, 1}, p_, quo_);
    auto idit = mat_index_.find(detail::mat_key(id));
    if (idit == mat_index_.end()) throw DomainError("identity missing from group");
    identity_ = idit->second;
    for (int g = 0; g < m; ++g) {
      labels_.push_back(detail::mat_label(mats_[g]));
      detail::Mat2 inv = detail::mat_adjugate(mats_[g], p_);
      if (quo_ == GroupQuotient::None) {
        std::uint64_t det = detail::mat_det(mats_[g], p_);
        std::uint64_t dinv = inv_mod(det, p_);
        for (auto& v : inv) v = mul_mod(v, dinv, p_);
      }
      auto it = mat_index_.find(detail::mat_key(detail::mat_canonical(inv, p_, quo_)));
      if (it == mat_index_.end()) throw DomainError("group not closed under inverse");
      inverse_[g] = it->second;
    }
    materialize_and_verify();
  }

  void materialize_and_verify() {
    const int m = order();
    if (m <= kGroupTableCap) {
      table_.assign(static_cast<std::size_t>(m) * m, 0);
      for (int a = 0; a < m; ++a)
        for (int b = 0; b < m; ++b) table_[static_cast<std::size_t>(a) * m + b] = compute_op(a, b);
    }
    // identity and inverse laws
    for (int g = 0; g < m; ++g) {
      if (op(identity_, g) != g || op(g, identity_) != g)
        throw DomainError("identity law violated");
      if (op(g, inverse_[g]) != identity_) throw DomainError("inverse law violated");
    }
    // associativity: full for m <= 256, randomized triple sampling above
    // (capped beyond the table range, where products are not O(1))
    if (m <= 256) {
      for (int a = 0; a < m; ++a)
        for (int b = 0; b < m; ++b) {
          int ab = op(a, b);
          for (int c = 0; c < m; ++c)
            if (op(ab, c) != op(a, op(b, c))) throw DomainError("associativity violated");
        }
    } else {
      std::mt19937_64 rng(0x5ee9a110u ^ static_cast<std::uint64_t>(m));
      long long samples = 10LL * m * m;
      if (!has_table() && samples > 1'000'000) samples = 1'000'000;
      for (long long t = 0; t < samples; ++t) {
        int a = static_cast<int>(rng() % m);
        int b = static_cast<int>(rng() % m);
        int c = static_cast<int>(rng() % m);
        if (op(op(a, b), c) != op(a, op(b, c))) throw DomainError("associativity violated");
      }
    }
  }

  Rep rep_ = Rep::Permutation;
  GroupQuotient quo_ = GroupQuotient::None;
  std::uint64_t p_ = 0;
  std::vector<std::vector<int>> perms_;
  std::vector<detail::Mat2> mats_;
  std::map<std::vector<int>, int> perm_index_;
  std::unordered_map<std::uint64_t, int> mat_index_;
  int identity_ = 0;
  std::vector<int> inverse_;
  std::vector<std::string> labels_;
  std::vector<int> table_;
};

// Symmetric generating set: closed under inversion, identity excluded.
struct GeneratingSet {
  std::vector<int> indices;  // sorted, unique
  bool symmetric = true;
};

inline GeneratingSet make_generating_set(const FiniteGroup& g, std::vector<int> indices) {
  std::set<int> s(indices.begin(), indices.end());
  if (s.count(g.identity())) throw DomainError("generating set contains the identity");
  for (int x : s)
    if (!s.count(g.inverse(x)))
      throw DomainError("generating set is not symmetric (missing inverse of " +
                        g.label(x) + ")");
  GeneratingSet out;
  out.indices.assign(s.begin(), s.end());
  return out;
}

// ---- named groups ----

inline FiniteGroup cyclic_group(int n) {
  if (n < 1) throw DomainError("cyclic_group needs n >= 1");
  if (n == 1) return FiniteGroup::from_permutation_generators({{0}});
  std::vector<int> rot(n);
  for (int i = 0; i < n; ++i) rot[i] = (i + 1) % n;
  return FiniteGroup::from_permutation_generators({rot});
}

inline FiniteGroup dihedral_group(int n) {
  if (n < 3) throw DomainError("dihedral_group needs n >= 3");
  std::vector<int> rot(n), refl(n);
  for (int i = 0; i < n; ++i) {
    rot[i] = (i + 1) % n;
    refl[i] = (n - i) % n;
  }
  return FiniteGroup::from_permutation_generators({rot, refl});
}

inline FiniteGroup symmetric_group(int m) {
  if (m < 2 || m > 7) throw DomainError("symmetric_group supports 2 <= m <= 7");
  std::vector<int> swap01(m), cyc(m);
  for (int i = 0; i < m; ++i) {
    swap01[i] = i;
    cyc[i] = (i + 1) % m;
  }
  std::swap(swap01[0], swap01[1]);
  if (m == 2) return FiniteGroup::from_permutation_generators({swap01});
  return FiniteGroup::from_permutation_generators({swap01, cyc});
}

namespace detail {

inline void check_matrix_group_modulus(std::uint64_t p) {
  if (!is_prime_u64(p) || p == 2 || p > 37)
    throw DomainError("matrix groups support odd primes p <= 37");
}

}  // namespace detail

inline FiniteGroup sl2(std::uint64_t p) {
  detail::check_matrix_group_modulus(p);
  std::vector<detail::Mat2> elems;
  for (std::uint64_t a = 0; a < p; ++a)
    for (std::uint64_t b = 0; b < p; ++b)
      for (std::uint64_t c = 0; c < p; ++c)
        for (std::uint64_t d = 0; d < p; ++d)
          if (detail::mat_det({a, b, c, d}, p) == 1) elems.push_back({a, b, c, d});
  return FiniteGroup::from_matrix_enumeration(std::move(elems), p, GroupQuotient::None);
}

inline FiniteGroup psl2(std::uint64_t q) {
  detail::check_matrix_group_modulus(q);
  std::vector<detail::Mat2> elems;
  for (std::uint64_t a = 0; a < q; ++a)
    for (std::uint64_t b = 0; b < q; ++b)
      for (std::uint64_t c = 0; c < q; ++c)
        for (std::uint64_t d = 0; d < q; ++d)
          if (detail::mat_det({a, b, c, d}, q) == 1)
            elems.push_back(detail::mat_canonical({a, b, c, d}, q, GroupQuotient::PSL));
  return FiniteGroup::from_matrix_enumeration(std::move(elems), q, GroupQuotient::PSL);
}

inline FiniteGroup pgl2(std::uint64_t q) {
  detail::check_matrix_group_modulus(q);
  std::vector<detail::Mat2> elems;
  // normalized forms: first nonzero entry in column-major order equals 1
  for (std::uint64_t b = 0; b < q; ++b)       // m00 = 1 block
    for (std::uint64_t c = 0; c < q; ++c)
      for (std::uint64_t d = 0; d < q; ++d)
        if (detail::mat_det({1, b, c, d}, q) != 0) elems.push_back({1, b, c, d});
  for (std::uint64_t b = 1; b < q; ++b)       // m00 = 0 block: m10 = 1, det = -b != 0
    for (std::uint64_t d = 0; d < q; ++d) elems.push_back({0, b, 1, d});
  return FiniteGroup::from_matrix_enumeration(std::move(elems), q, GroupQuotient::PGL);
}

inline int legendre_symbol(std::uint64_t a, std::uint64_t q) {
  a %= q;
  if (a == 0) return 0;
  std::uint64_t r = 1, base = a, e = (q - 1) / 2;
  while (e) {
    if (e & 1) r = mul_mod(r, base, q);
    base = mul_mod(base, base, q);
    e >>= 1;
  }
  return r == 1 ? 1 : -1;
}

// Lubotzky-Phillips-Sarnak generating set from the p+1 integer quadruples
// a^2+b^2+c^2+d^2 = p (a odd positive, b,c,d even), mapped into PSL2(F_q)
// when p is a quadratic residue mod q and PGL2(F_q) otherwise.
struct LpsConstruction {
  FiniteGroup group;
  GeneratingSet gens;
  bool in_pgl = false;
  std::vector<std::array<int, 4>> quadruples;
  std::uint64_t sqrt_minus_one = 0;  // i with i^2 = -1 (mod q)
};

inline LpsConstruction lps_generating_set(int p, int q) {
  if (p == q) throw DomainError("lps_generating_set: p and q must be distinct");
  if (!is_prime_u64(p) || !is_prime_u64(q))
    throw DomainError("lps_generating_set: p and q must be prime");
  if (p % 4 != 1 || q % 4 != 1)
    throw DomainError("lps_generating_set: need p = q = 1 (mod 4)");

  std::vector<std::array<int, 4>> quads;
  int bound = 1;
  while (bound * bound < p) ++bound;          // ceil(sqrt(p))
  const int ebound = bound + (bound % 2);     // even range endpoint
  for (int a = 1; a * a <= p; a += 2)
    for (int b = -ebound; b <= ebound; b += 2)
      for (int c = -ebound; c <= ebound; c += 2)
        for (int d = -ebound; d <= ebound; d += 2)
          if (a * a + b * b + c * c + d * d == p) quads.push_back({a, b, c, d});
  if (static_cast<int>(quads.size()) != p + 1)
    throw Error("lps_generating_set: expected p+1 quadruples, found " +
                std::to_string(quads.size()));

  std::uint64_t iq = 0;
  for (std::uint64_t i = 1; i < static_cast<std::uint64_t>(q); ++i)
    if (mul_mod(i, i, q) == static_cast<std::uint64_t>(q - 1)) {
      iq = i;
      break;
    }
  if (iq == 0) throw Error("lps_generating_set: no sqrt(-1) mod q");

  LpsConstruction out;
  out.in_pgl = legendre_symbol(static_cast<std::uint64_t>(p), static_cast<std::uint64_t>(q)) != 1;
  out.group = out.in_pgl ? pgl2(static_cast<std::uint64_t>(q))
                         : psl2(static_cast<std::uint64_t>(q));
  out.quadruples = quads;
  out.sqrt_minus_one = iq;

  auto residue = [q](long long v) {
    long long m = v % q;
    if (m < 0) m += q;
    return static_cast<std::uint64_t>(m);
  };
  std::vector<int> indices;
  for (const auto& [a, b, c, d] : quads) {
    const long long I = static_cast<long long>(iq);
    detail::Mat2 m{residue(a + I * b), residue(c + I * d), residue(-c + I * d),
                   residue(a - I * b)};
    auto idx = out.group.find_matrix(m);
    if (!idx) throw Error("lps_generating_set: generator not found in target group");
    indices.push_back(*idx);
  }
  std::set<int> uniq(indices.begin(), indices.end());
  if (static_cast<int>(uniq.size()) != p + 1)
    throw Error("lps_generating_set: generators are not distinct in the quotient");
  out.gens = make_generating_set(out.group, indices);
  return out;
}

}  // namespace eea
