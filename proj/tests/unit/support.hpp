#pragma once

#include <random>
#include <vector>

#include "hf/polynomial.hpp"
#include "hf/rational.hpp"
#include "hf/scalars.hpp"

namespace hf::testing {

inline Rational random_rational(std::mt19937_64 &rng, long span = 12, long max_den = 6) {
  std::uniform_int_distribution<long> num(-span, span), den(1, max_den);
  return Rational(num(rng), den(rng));
}

inline Polynomial poly(std::vector<Rational> c) { return Polynomial(std::move(c)); }

/// Nonzero g of degree at most max_degree with small rational coefficients.
inline Deformation random_deformation(std::mt19937_64 &rng, unsigned max_degree = 3) {
  std::uniform_int_distribution<unsigned> deg(0, max_degree);
  while (true) {
    std::vector<Rational> c(deg(rng) + 1);
    for (auto &x : c) x = random_rational(rng, 4, 3);
    Polynomial g(c);
    if (!g.is_zero()) return Deformation::from_g(g);
  }
}

/// The deformations used throughout: g = 1, 1 + T, T(8T+1), 8T - 3 + T^3.
inline std::vector<Deformation> sample_deformations() {
  return {Deformation::parse_f("0"), Deformation::parse_f("0,1"), Deformation::parse_f("-1,1,8"),
          Deformation::parse_f("-4,8,0,1")};
}

} // namespace hf::testing
