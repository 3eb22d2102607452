#pragma once

#include <set>
#include <string_view>

#include "hf/polynomial.hpp"
#include "hf/rational.hpp"

namespace hf {

/// The deformation parameter.  Stores g = 1 + f, the polynomial by which the
/// Casimir enters the relation [Y, X] = g(Casimir).  g = 0 is rejected.
class Deformation {
public:
  /// From the coefficients of f (ascending).  Throws InvalidDeformation if 1 + f = 0.
  static Deformation from_f(const Polynomial &f);
  static Deformation from_g(const Polynomial &g);
  /// Comma-separated ascending coefficients of f, e.g. "-1,1,8".
  static Deformation parse_f(std::string_view csv);

  const Polynomial &g() const { return g_; }
  Polynomial f() const { return g_ - Polynomial::constant(1); }
  /// deg(1 + f).
  unsigned degree() const { return static_cast<unsigned>(g_.degree()); }

  friend bool operator==(const Deformation &, const Deformation &) = default;

private:
  explicit Deformation(Polynomial g) : g_(std::move(g)) {}
  Polynomial g_;
};

/// g_d with g_d(0) = 0 and g_d(T) - g_d(T - 1) = T^d.
Polynomial sum_power_poly(unsigned d);

/// Casimir eigenvalue on an sl2-maximal vector of weight t: (t^2 + 2t) / 8.
Rational casimir_scalar(const Rational &t);

/// g(casimir_scalar(t)).
Rational deformed_scalar(const Deformation &def, const Rational &t);

/// Sum_{i=0}^{m-2} (r + 1 - i) deformed_scalar(r - i); zero for m = 1.
Rational alpha(const Deformation &def, const Rational &r, unsigned m);

/// alpha(r, m) as a polynomial in (r, m).
BiPolynomial alpha_bipoly(const Deformation &def);

/// alpha(r, m) / ((r - m + 2)(r - m + 3)).  Throws UndefinedDenominator when
/// r is m - 2 or m - 3.
Rational d_coeff(const Deformation &def, const Rational &r, unsigned m);

/// Complete set of integer roots.  Throws ZeroPolynomial for p = 0.
std::set<Integer> integer_roots(const Polynomial &p);

/// Integer roots of m -> alpha(r, m) as a polynomial in m.
std::set<Integer> alpha_integer_roots_in_m(const Deformation &def, const Rational &r);

} // namespace hf
