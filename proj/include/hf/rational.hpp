#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace hf {

using Integer = mpz_class;

/// Exact element of the ground field: a reduced fraction with positive
/// denominator.  Thin value wrapper over GMP so that gmpxx expression
/// templates never leak into generic (Eigen) code.
class Rational {
public:
  Rational() = default;
  Rational(int v) : q_(v) {}
  Rational(long v) : q_(v) {}
  Rational(long long v) : q_(static_cast<long>(v)) {}
  Rational(const Integer &v) : q_(v) {}
  Rational(const Integer &num, const Integer &den);
  Rational(long num, long den) : Rational(Integer(num), Integer(den)) {}
  explicit Rational(mpq_class q) : q_(std::move(q)) { q_.canonicalize(); }

  /// Parses `p/q`, `-p/q` or an integer literal.  Throws ParseError.
  static Rational parse(std::string_view text);

  Integer num() const { return q_.get_num(); }
  Integer den() const { return q_.get_den(); }
  const mpq_class &raw() const { return q_; }

  bool is_zero() const { return sgn(q_) == 0; }
  bool is_integer() const { return q_.get_den() == 1; }
  /// True for 0, 1, 2, ...
  bool is_natural() const { return is_integer() && sgn(q_) >= 0; }
  int sign() const { return sgn(q_); }

  /// Value as a machine integer; only valid when is_integer() and it fits.
  std::optional<long> to_long() const;
  Integer floor() const;
  double to_double() const { return q_.get_d(); }

  /// `p/q`, with `/q` omitted when q = 1.
  std::string str() const;

  Rational operator-() const { return Rational(mpq_class(-q_)); }
  Rational &operator+=(const Rational &o) { q_ += o.q_; return *this; }
  Rational &operator-=(const Rational &o) { q_ -= o.q_; return *this; }
  Rational &operator*=(const Rational &o) { q_ *= o.q_; return *this; }
  Rational &operator/=(const Rational &o);

  friend Rational operator+(Rational a, const Rational &b) { return a += b; }
  friend Rational operator-(Rational a, const Rational &b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational &b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational &b) { return a /= b; }

  friend bool operator==(const Rational &a, const Rational &b) { return a.q_ == b.q_; }
  friend std::strong_ordering operator<=>(const Rational &a, const Rational &b) {
    const int c = cmp(a.q_, b.q_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

private:
  mpq_class q_;
};

Rational abs(const Rational &x);
Rational pow(const Rational &x, unsigned e);

std::ostream &operator<<(std::ostream &os, const Rational &x);

} // namespace hf
