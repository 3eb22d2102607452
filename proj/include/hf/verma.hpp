#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "hf/linalg.hpp"
#include "hf/pbw.hpp"
#include "hf/rational.hpp"
#include "hf/scalars.hpp"

namespace hf {

/// Element of the Verma module Z(r) = k[Y,F] v_r, stored as
/// sum of coeff * F^j Y^i v_r keyed by (j, i).
class VermaElement {
public:
  using Key = std::pair<unsigned, unsigned>; // (j, i)

  VermaElement() = default;
  explicit VermaElement(Rational r) : r_(std::move(r)) {}
  static VermaElement highest(const Rational &r) { return basis(r, 0, 0); }
  static VermaElement basis(const Rational &r, unsigned j, unsigned i, const Rational &c = Rational(1));

  const Rational &highest_weight() const { return r_; }
  const std::map<Key, Rational> &terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Rational coefficient(unsigned j, unsigned i) const;
  void add(unsigned j, unsigned i, const Rational &c);

  /// Depth i + 2j of every term if they all agree.
  std::optional<unsigned> depth() const;
  /// F^a Y^b times this element.
  VermaElement shifted(unsigned a, unsigned b) const;

  VermaElement &operator+=(const VermaElement &o);
  VermaElement &operator-=(const VermaElement &o);
  friend VermaElement operator+(VermaElement a, const VermaElement &b) { return a += b; }
  friend VermaElement operator-(VermaElement a, const VermaElement &b) { return a -= b; }
  friend VermaElement operator*(const Rational &s, VermaElement a);
  friend bool operator==(const VermaElement &, const VermaElement &) = default;

private:
  Rational r_;
  std::map<Key, Rational> terms_;
};

/// "Y^2 - 2 F" (the polynomial in Y, F applied to v_r); "0" for zero.
std::string to_string(const VermaElement &v);

/// Parses "(j,i):c,(j,i):c,..." into an element of Z(r).
VermaElement parse_verma_element(const Rational &r, std::string_view text);

struct WeightSpaceBasis {
  Rational r;
  unsigned n = 0;
  std::vector<VermaElement::Key> basis; // i + 2j = n, descending i

  std::size_t size() const { return basis.size(); }
  Rational weight() const { return r - Rational(static_cast<long>(n)); }
};

WeightSpaceBasis weight_space(const Rational &r, unsigned n);

/// Coordinates of a homogeneous element in weight_space(r, n).
RationalVector coordinates(const VermaElement &v, const WeightSpaceBasis &basis);
VermaElement from_coordinates(const RationalVector &x, const WeightSpaceBasis &basis);

enum class KernelKind { E, X, Both };

/// Z(r) for a fixed deformation, with memoised generator actions.
class VermaModule {
public:
  VermaModule(Deformation def, Rational r);

  const Deformation &deformation() const { return def_; }
  const Rational &highest_weight() const { return r_; }

  /// Generator action through PBW normal forms: normalize gen F^j Y^i, drop
  /// monomials containing X or E, replace H by r.
  VermaElement act(Generator g, const VermaElement &v) const;
  /// Generator action from the closed commutator formulas for X and E.
  VermaElement act_direct(Generator g, const VermaElement &v) const;
  /// w = g1 ... gk applied as g1(g2(...gk v)) with act_direct.
  VermaElement act_word(const Word &w, const VermaElement &v) const;

  /// Matrix of g from Z(r)_{r-n} to Z(r)_{r-n+weight(g)} in the weight-space bases.
  RationalMatrix action_matrix(Generator g, unsigned n) const;

  std::vector<VermaElement> kernel(KernelKind which, unsigned n) const;
  VermaElement vt_vector(const Rational &t) const;
  std::vector<std::pair<Rational, VermaElement>> find_maximal_weights() const;

private:
  const VermaElement &x_on_basis(unsigned j, unsigned i) const;
  const VermaElement &e_on_basis(unsigned j, unsigned i) const;
  const VermaElement &delta0_on_y_power(unsigned l) const;
  VermaElement delta0_apply(const VermaElement &w, unsigned depth) const;
  VermaElement e_apply(const VermaElement &w) const;
  const HfAlgebra &algebra() const;

  Deformation def_;
  Rational r_;
  mutable std::unique_ptr<HfAlgebra> algebra_;
  mutable std::map<VermaElement::Key, VermaElement> x_memo_, e_memo_;
  mutable std::map<unsigned, VermaElement> delta0_memo_;
};

VermaElement act(Generator g, const VermaElement &v, const Deformation &def);
VermaElement act_direct(Generator g, const VermaElement &v, const Deformation &def);
std::vector<VermaElement> kernel(KernelKind which, const Rational &r, unsigned n, const Deformation &def);
/// The sl2-maximal vector v_t of Z(r).  Throws OutOfRange unless t is in r - N0,
/// and for r in N0 unless t >= -1.
VermaElement vt_vector(const Rational &r, const Rational &t, const Deformation &def);
/// Confirmed maximal vectors below v_r, weights descending.
std::vector<std::pair<Rational, VermaElement>> find_maximal_weights(const Rational &r, const Deformation &def);

} // namespace hf
