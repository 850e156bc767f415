#pragma once

#include <gmpxx.h>

#include <cctype>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <string>
#include <string_view>

#include "eea/errors.hpp"

namespace eea {

enum class FieldKind { Rational, Prime, Real };

inline bool is_prime_u64(std::uint64_t p) {
  if (p < 2) return false;
  if (p % 2 == 0) return p == 2;
  for (std::uint64_t q = 3; q * q <= p; q += 2)
    if (p % q == 0) return false;
  return true;
}

// The field K an algebra lives over: exact rationals, a prime field F_p,
// or double-precision reals.
struct FieldDescriptor {
  FieldKind kind = FieldKind::Rational;
  std::uint64_t p = 0;  // modulus, Prime only

  static FieldDescriptor rational() { return {FieldKind::Rational, 0}; }
  static FieldDescriptor real() { return {FieldKind::Real, 0}; }
  static FieldDescriptor prime(std::uint64_t p) {
    if (!is_prime_u64(p))
      throw DomainError("prime field modulus " + std::to_string(p) + " is not prime");
    return {FieldKind::Prime, p};
  }

  bool operator==(const FieldDescriptor&) const = default;

  std::string name() const {
    switch (kind) {
      case FieldKind::Rational: return "rational";
      case FieldKind::Prime: return "prime(" + std::to_string(p) + ")";
      case FieldKind::Real: return "real";
    }
    return "?";
  }
};

inline void require_same_field(const FieldDescriptor& a, const FieldDescriptor& b,
                               const char* where) {
  if (!(a == b))
    throw FieldMismatchError(std::string(where) + ": field mismatch (" + a.name() +
                             " vs " + b.name() + ")");
}

// ---- modular arithmetic helpers (p < 2^63) ----

inline std::uint64_t add_mod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  std::uint64_t s = a + b;
  return s >= p ? s - p : s;
}

inline std::uint64_t sub_mod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return a >= b ? a - b : a + p - b;
}

inline std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % p);
}

inline std::uint64_t inv_mod(std::uint64_t a, std::uint64_t p) {
  if (a % p == 0) throw DomainError("division by zero in F_" + std::to_string(p));
  // extended Euclid on (a, p)
  std::int64_t t = 0, new_t = 1;
  std::int64_t r = static_cast<std::int64_t>(p), new_r = static_cast<std::int64_t>(a % p);
  while (new_r != 0) {
    std::int64_t qq = r / new_r;
    std::int64_t tmp = t - qq * new_t;
    t = new_t; new_t = tmp;
    tmp = r - qq * new_r;
    r = new_r; new_r = tmp;
  }
  if (t < 0) t += static_cast<std::int64_t>(p);
  return static_cast<std::uint64_t>(t);
}

namespace detail {

inline bool valid_integer_token(std::string_view s) {
  if (!s.empty() && (s[0] == '+' || s[0] == '-')) s.remove_prefix(1);
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

// Exact rational from "p/q", "12", "-0.25" style strings.
inline mpq_class parse_rational(std::string_view text) {
  std::string s(text);
  // strip surrounding whitespace
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.erase(s.begin());
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.pop_back();
  if (s.empty()) throw ParseError("empty rational literal");

  if (auto slash = s.find('/'); slash != std::string::npos) {
    std::string num = s.substr(0, slash), den = s.substr(slash + 1);
    if (!valid_integer_token(num) || !valid_integer_token(den))
      throw ParseError("bad rational literal '" + s + "'");
    mpz_class n(num, 10), d(den, 10);
    if (d == 0) throw ParseError("zero denominator in '" + s + "'");
    return mpq_class(n) / mpq_class(d);  // canonical by mpq_class division
  }
  if (auto dot = s.find('.'); dot != std::string::npos) {
    std::string ip = s.substr(0, dot), fp = s.substr(dot + 1);
    bool neg = false;
    if (!ip.empty() && (ip[0] == '+' || ip[0] == '-')) {
      neg = ip[0] == '-';
      ip.erase(ip.begin());
    }
    if (ip.empty()) ip = "0";
    if (fp.empty()) fp = "0";
    if (!valid_integer_token(ip) || !valid_integer_token(fp))
      throw ParseError("bad decimal literal '" + s + "'");
    mpz_class whole(ip + fp, 10);
    mpz_class den(1);
    for (std::size_t i = 0; i < fp.size(); ++i) den *= 10;
    mpq_class q = mpq_class(whole) / mpq_class(den);
    if (neg) q = -q;
    return q;
  }
  if (!valid_integer_token(s)) throw ParseError("bad integer literal '" + s + "'");
  return mpq_class(mpz_class(s, 10));
}

inline std::string real_to_string(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

}  // namespace detail

// A single field element.  Carries its field descriptor; bulk storage in
// algebras/elements uses the typed payloads directly instead.
class Scalar {
 public:
  Scalar() : field_(FieldDescriptor::rational()) {}

  static Scalar zero(const FieldDescriptor& f) {
    Scalar s;
    s.field_ = f;
    return s;
  }
  static Scalar one(const FieldDescriptor& f) {
    Scalar s;
    s.field_ = f;
    switch (f.kind) {
      case FieldKind::Rational: s.q_ = 1; break;
      case FieldKind::Prime: s.r_ = f.p == 1 ? 0 : 1; break;
      case FieldKind::Real: s.d_ = 1.0; break;
    }
    return s;
  }
  static Scalar from_rational(mpq_class q) {
    Scalar s;
    s.field_ = FieldDescriptor::rational();
    q.canonicalize();
    s.q_ = std::move(q);
    return s;
  }
  static Scalar from_integer(long v, const FieldDescriptor& f) {
    switch (f.kind) {
      case FieldKind::Rational: return from_rational(mpq_class(v));
      case FieldKind::Prime: {
        Scalar s;
        s.field_ = f;
        long m = v % static_cast<long>(f.p);
        if (m < 0) m += static_cast<long>(f.p);
        s.r_ = static_cast<std::uint64_t>(m);
        return s;
      }
      case FieldKind::Real: return from_real(static_cast<double>(v));
    }
    throw DomainError("bad field kind");
  }
  static Scalar from_residue(std::uint64_t r, const FieldDescriptor& f) {
    if (f.kind != FieldKind::Prime) throw FieldMismatchError("from_residue: not a prime field");
    Scalar s;
    s.field_ = f;
    s.r_ = r % f.p;
    return s;
  }
  static Scalar from_real(double x) {
    Scalar s;
    s.field_ = FieldDescriptor::real();
    s.d_ = x;
    return s;
  }

  // Exact decimal/fraction value-strings (the algebra JSON entry format).
  static Scalar parse(std::string_view text, const FieldDescriptor& f) {
    switch (f.kind) {
      case FieldKind::Rational: return from_rational(detail::parse_rational(text));
      case FieldKind::Prime: {
        mpq_class q = detail::parse_rational(text);
        // residue of num/den mod p
        mpz_class p(static_cast<unsigned long>(f.p));
        mpz_class num = q.get_num() % p;
        if (num < 0) num += p;
        mpz_class den = q.get_den() % p;
        std::uint64_t n64 = num.get_ui();
        std::uint64_t d64 = den.get_ui();
        return from_residue(mul_mod(n64, inv_mod(d64, f.p), f.p), f);
      }
      case FieldKind::Real: {
        std::string s(text);
        char* end = nullptr;
        double v = std::strtod(s.c_str(), &end);
        if (end == s.c_str() || *end != '\0')
          throw ParseError("bad real literal '" + s + "'");
        return from_real(v);
      }
    }
    throw DomainError("bad field kind");
  }

  const FieldDescriptor& field() const { return field_; }
  bool is_zero() const {
    switch (field_.kind) {
      case FieldKind::Rational: return mpq_sgn(q_.get_mpq_t()) == 0;
      case FieldKind::Prime: return r_ == 0;
      case FieldKind::Real: return d_ == 0.0;
    }
    return true;
  }

  const mpq_class& rat() const { return q_; }
  std::uint64_t res() const { return r_; }
  double dbl() const { return d_; }

  std::string str() const {
    switch (field_.kind) {
      case FieldKind::Rational: return q_.get_str();
      case FieldKind::Prime: return std::to_string(r_);
      case FieldKind::Real: return detail::real_to_string(d_);
    }
    return "?";
  }

  friend Scalar operator+(const Scalar& a, const Scalar& b) {
    require_same_field(a.field_, b.field_, "scalar +");
    Scalar s = zero(a.field_);
    switch (a.field_.kind) {
      case FieldKind::Rational: s.q_ = a.q_ + b.q_; break;
      case FieldKind::Prime: s.r_ = add_mod(a.r_, b.r_, a.field_.p); break;
      case FieldKind::Real: s.d_ = a.d_ + b.d_; break;
    }
    return s;
  }
  friend Scalar operator-(const Scalar& a, const Scalar& b) {
    require_same_field(a.field_, b.field_, "scalar -");
    Scalar s = zero(a.field_);
    switch (a.field_.kind) {
      case FieldKind::Rational: s.q_ = a.q_ - b.q_; break;
      case FieldKind::Prime: s.r_ = sub_mod(a.r_, b.r_, a.field_.p); break;
      case FieldKind::Real: s.d_ = a.d_ - b.d_; break;
    }
    return s;
  }
  friend Scalar operator*(const Scalar& a, const Scalar& b) {
    require_same_field(a.field_, b.field_, "scalar *");
    Scalar s = zero(a.field_);
    switch (a.field_.kind) {
      case FieldKind::Rational: s.q_ = a.q_ * b.q_; break;
      case FieldKind::Prime: s.r_ = mul_mod(a.r_, b.r_, a.field_.p); break;
      case FieldKind::Real: s.d_ = a.d_ * b.d_; break;
    }
    return s;
  }
  Scalar operator-() const {
    Scalar s = zero(field_);
    switch (field_.kind) {
      case FieldKind::Rational: s.q_ = -q_; break;
      case FieldKind::Prime: s.r_ = r_ == 0 ? 0 : field_.p - r_; break;
      case FieldKind::Real: s.d_ = -d_; break;
    }
    return s;
  }
  friend Scalar div(const Scalar& a, const Scalar& b) {
    require_same_field(a.field_, b.field_, "scalar /");
    if (b.is_zero()) throw DomainError("scalar division by zero");
    Scalar s = zero(a.field_);
    switch (a.field_.kind) {
      case FieldKind::Rational: s.q_ = a.q_ / b.q_; break;
      case FieldKind::Prime: s.r_ = mul_mod(a.r_, inv_mod(b.r_, a.field_.p), a.field_.p); break;
      case FieldKind::Real: s.d_ = a.d_ / b.d_; break;
    }
    return s;
  }
  friend bool operator==(const Scalar& a, const Scalar& b) {
    if (!(a.field_ == b.field_)) return false;
    switch (a.field_.kind) {
      case FieldKind::Rational: return a.q_ == b.q_;
      case FieldKind::Prime: return a.r_ == b.r_;
      case FieldKind::Real: return a.d_ == b.d_;
    }
    return false;
  }

 private:
  FieldDescriptor field_;
  mpq_class q_;
  std::uint64_t r_ = 0;
  double d_ = 0.0;
};

// ---- ring policies used by the templated bulk algorithms ----

struct RationalRing {
  using value_type = mpq_class;
  value_type zero() const { return value_type(); }
  value_type one() const { return value_type(1); }
  bool is_zero(const value_type& v) const { return mpq_sgn(v.get_mpq_t()) == 0; }
  value_type add(const value_type& a, const value_type& b) const { return a + b; }
  value_type sub(const value_type& a, const value_type& b) const { return a - b; }
  value_type mul(const value_type& a, const value_type& b) const { return a * b; }
  value_type div(const value_type& a, const value_type& b) const {
    if (is_zero(b)) throw DomainError("rational division by zero");
    return a / b;
  }
  value_type neg(const value_type& a) const { return -a; }
};

struct PrimeRing {
  std::uint64_t p;
  using value_type = std::uint64_t;
  value_type zero() const { return 0; }
  value_type one() const { return 1 % p; }
  bool is_zero(value_type v) const { return v == 0; }
  value_type add(value_type a, value_type b) const { return add_mod(a, b, p); }
  value_type sub(value_type a, value_type b) const { return sub_mod(a, b, p); }
  value_type mul(value_type a, value_type b) const { return mul_mod(a, b, p); }
  value_type div(value_type a, value_type b) const { return mul_mod(a, inv_mod(b, p), p); }
  value_type neg(value_type a) const { return a == 0 ? 0 : p - a; }
};

struct RealRing {
  using value_type = double;
  value_type zero() const { return 0.0; }
  value_type one() const { return 1.0; }
  bool is_zero(value_type v) const { return v == 0.0; }
  value_type add(value_type a, value_type b) const { return a + b; }
  value_type sub(value_type a, value_type b) const { return a - b; }
  value_type mul(value_type a, value_type b) const { return a * b; }
  value_type div(value_type a, value_type b) const {
    if (b == 0.0) throw DomainError("real division by zero");
    return a / b;
  }
  value_type neg(value_type a) const { return -a; }
};

}  // namespace eea
