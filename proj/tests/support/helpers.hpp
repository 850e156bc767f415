#pragma once

#include <random>
#include <string>
#include <vector>

#include "eea/eea.hpp"

namespace eea::testing {

// Dense matrix of value-strings -> algebra.
inline EvolutionAlgebra make_algebra(const std::vector<std::vector<std::string>>& rows,
                                     FieldDescriptor field = FieldDescriptor::rational()) {
  const int n = static_cast<int>(rows.size());
  EvolutionAlgebra a(n, field);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (rows[i][j] != "0") a.set_entry(i, j, Scalar::parse(rows[i][j], field));
  return a;
}

inline Element make_element(const EvolutionAlgebra& a, const std::vector<std::string>& coeffs) {
  Element x = Element::zero(a);
  for (int i = 0; i < a.dim(); ++i)
    if (coeffs[i] != "0") x.set(i, Scalar::parse(coeffs[i], a.field()));
  return x;
}

inline mpq_class random_rational(std::mt19937_64& rng, int max_abs = 5) {
  long num = static_cast<long>(rng() % (2 * max_abs + 1)) - max_abs;
  long den = 1 + static_cast<long>(rng() % static_cast<unsigned long>(max_abs));
  mpq_class q(num, den);
  q.canonicalize();
  return q;
}

inline Element random_element(const EvolutionAlgebra& a, std::mt19937_64& rng) {
  Element x = Element::zero(a);
  for (int i = 0; i < a.dim(); ++i) {
    switch (a.field().kind) {
      case FieldKind::Rational:
        x.set(i, Scalar::from_rational(random_rational(rng)));
        break;
      case FieldKind::Prime:
        x.set(i, Scalar::from_residue(rng() % a.field().p, a.field()));
        break;
      case FieldKind::Real:
        x.set(i, Scalar::from_real(static_cast<double>(static_cast<long>(rng() % 11) - 5) / 2.0));
        break;
    }
  }
  return x;
}

// Random algebra with a random support pattern (density per mille).
inline EvolutionAlgebra random_algebra(int n, FieldDescriptor field, std::mt19937_64& rng,
                                       int density_pct = 40) {
  EvolutionAlgebra a(n, field);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (static_cast<int>(rng() % 100) >= density_pct) continue;
      switch (field.kind) {
        case FieldKind::Rational: {
          mpq_class q = random_rational(rng);
          if (q != 0) a.set_entry(i, j, Scalar::from_rational(q));
          break;
        }
        case FieldKind::Prime: {
          std::uint64_t r = rng() % field.p;
          if (r) a.set_entry(i, j, Scalar::from_residue(r, field));
          break;
        }
        case FieldKind::Real: {
          double v = static_cast<double>(static_cast<long>(rng() % 9) - 4);
          if (v != 0.0) a.set_entry(i, j, Scalar::from_real(v));
          break;
        }
      }
    }
  return a;
}

}  // namespace eea::testing
