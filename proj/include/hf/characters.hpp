#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <utility>

#include "hf/rational.hpp"

namespace hf {

/// Formal character t -> multiplicity on rational weights.  A character is
/// either finite (exact everywhere) or windowed: exact at every weight
/// >= top - depth, with nothing stored below.
class Character {
public:
  struct Window {
    Rational top;
    unsigned depth = 0;
    Rational bottom() const { return top - Rational(static_cast<long>(depth)); }
    friend bool operator==(const Window &, const Window &) = default;
  };

  Character() = default;
  static Character epsilon(const Rational &mu, long value = 1);
  static Character windowed(Window w);

  bool is_finite() const { return !window_.has_value(); }
  const std::optional<Window> &window() const { return window_; }
  const std::map<Rational, long> &support() const { return values_; }
  /// Value at mu; throws OutOfRange below the window.
  long operator()(const Rational &mu) const;
  /// Whether mu lies where the character is exact.
  bool is_exact_at(const Rational &mu) const;
  void add(const Rational &mu, long value);
  std::optional<Rational> max_weight() const;
  long total() const;

  Character &operator+=(const Character &o);
  Character &operator-=(const Character &o);
  friend Character operator+(Character a, const Character &b) { return a += b; }
  friend Character operator-(Character a, const Character &b) { return a -= b; }
  friend Character operator*(long s, Character a);
  friend bool operator==(const Character &, const Character &) = default;

private:
  void combine(const Character &o, long sign);

  std::map<Rational, long> values_;
  std::optional<Window> window_;
};

std::string to_string(const Character &c);

/// Kostant function: 1 + floor(n/2) at -n for n in N0, else 0.
long kostant_p(const Rational &x);

/// Character of Z(r) exact to depth cutoff_depth below r.
Character verma_character(const Rational &r, unsigned cutoff_depth);
/// The Kostant function as a character on weights 0, -1, ..., -cutoff_depth.
Character kostant_character(unsigned cutoff_depth);

/// (a * b)(nu) = sum_mu a(mu) b(nu - mu).  At least one operand must be
/// finite; two windowed operands raise IncompatibleWindows.
Character convolve(const Character &a, const Character &b);

/// e(a) - e(b) - e(-b) + e(-a).
Character omega(const Rational &a, const Rational &b);
/// omega(3/2, 1/2).
Character weyl_q();

inline const Rational kDelta(3, 2);
inline const Rational kDeltaPrime(1, 2);

/// The sign group acting on pairs (m, n) and its image under phi(m, n) = m + 2n.
struct OrbitData {
  /// Group elements in the order 1, s1 (negate m), s2 (negate n), -1.
  static constexpr std::array<int, 4> kSigns{1, -1, -1, 1};

  std::pair<Rational, Rational> psi;
  std::array<Rational, 4> images; // phi(sigma(psi)), same order as kSigns

  /// psi(r, s) = ((r - s + 1)/2, (r + s + 2)/4).
  static OrbitData of(const Rational &r, const Rational &s);
  /// phi(sigma(m, n)) for the four sigma.
  static std::array<Rational, 4> orbit(const Rational &m, const Rational &n);
};

/// Sum over sigma of sn(sigma) e(phi sigma psi(r, s)).
Character orbit_character(const OrbitData &o);

/// p(t - r) - p(t - s + 1) - p(t + s + 2) + p(t + r + 3).
long kostant_multiplicity(unsigned r, unsigned s, const Rational &t);
Character kostant_multiplicity_character(unsigned r, unsigned s);
/// (r + s + 2)(r - s + 1)/2.
Rational weyl_dimension(unsigned r, unsigned s);
/// sum_{i=s}^r ch V_C(i): the sl2 decomposition of V(r, s).
Character synthetic_character(unsigned r, unsigned s);

struct WcfReport {
  unsigned r = 0, s = 0, depth = 0;
  Character lhs, rhs;         // q * ch and omega(r + 3/2, s + 1/2)
  Character alt_lhs, alt_rhs; // e(3/2) * ch and the signed sum of Verma characters
  bool weyl_ok = false, alternate_ok = false;
  bool ok() const { return weyl_ok && alternate_ok; }
};

/// Checks both forms of the Weyl character formula for ch.  Throws
/// FormulaViolation naming the first weight where they differ.
WcfReport wcf_verify(unsigned r, unsigned s, unsigned cutoff_depth, const Character &ch);
/// Same, with the synthetic character.
WcfReport wcf_verify(unsigned r, unsigned s, unsigned cutoff_depth);

} // namespace hf
