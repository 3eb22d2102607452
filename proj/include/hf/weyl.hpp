#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "hf/rational.hpp"
#include "hf/relations.hpp"

namespace hf {

/// Element of the first Weyl algebra in normal order x^a y^b, where x is
/// multiplication by the coordinate and y is d/dx, so y x = x y + 1.
class WeylAlgebraElement {
public:
  using Key = std::pair<unsigned, unsigned>; // (x-exponent, y-exponent)

  WeylAlgebraElement() = default;
  static WeylAlgebraElement scalar(const Rational &c) { return term(0, 0, c); }
  static WeylAlgebraElement term(unsigned a, unsigned b, const Rational &c = Rational(1));
  static WeylAlgebraElement x() { return term(1, 0); }
  static WeylAlgebraElement y() { return term(0, 1); }

  const std::map<Key, Rational> &terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  void add(unsigned a, unsigned b, const Rational &c);
  /// True if the element is a scalar; stores it in *value.
  bool is_scalar(Rational *value = nullptr) const;

  WeylAlgebraElement &operator+=(const WeylAlgebraElement &o);
  WeylAlgebraElement &operator-=(const WeylAlgebraElement &o);
  friend WeylAlgebraElement operator+(WeylAlgebraElement a, const WeylAlgebraElement &b) { return a += b; }
  friend WeylAlgebraElement operator-(WeylAlgebraElement a, const WeylAlgebraElement &b) { return a -= b; }
  friend WeylAlgebraElement operator*(const Rational &s, WeylAlgebraElement a);
  friend WeylAlgebraElement operator*(const WeylAlgebraElement &a, const WeylAlgebraElement &b);
  friend bool operator==(const WeylAlgebraElement &, const WeylAlgebraElement &) = default;

private:
  std::map<Key, Rational> terms_;
};

std::string to_string(const WeylAlgebraElement &w);

struct WeilReport {
  std::vector<std::pair<std::string, bool>> relations; // name, maps to zero
  Rational casimir_image;                              // scalar image of the Casimir
  bool casimir_is_scalar = false;
  bool ok() const;
};

/// Images of the generators of the undeformed algebra (f = 0) under the
/// oscillator representation X -> x, Y -> y, H -> xy + 1/2, E -> -x^2/2,
/// F -> y^2/2.
GeneratorImages<WeylAlgebraElement> weil_images();

/// Checks every defining relation maps to zero and that the Casimir maps to
/// -3/32.  Throws RelationViolation naming the first failing relation.
WeilReport weil_check();

} // namespace hf
