#pragma once

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "hf/rational.hpp"

namespace hf {

/// Dense univariate polynomial, coefficients in ascending degree.  The zero
/// polynomial has no coefficients and trailing zeros are never stored.
template <typename Scalar>
class BasicPolynomial {
public:
  BasicPolynomial() = default;
  BasicPolynomial(std::initializer_list<Scalar> c) : c_(c) { trim(); }
  explicit BasicPolynomial(std::vector<Scalar> c) : c_(std::move(c)) { trim(); }

  static BasicPolynomial constant(const Scalar &c) { return BasicPolynomial({c}); }
  /// The indeterminate T.
  static BasicPolynomial variable() { return BasicPolynomial({Scalar(0), Scalar(1)}); }
  static BasicPolynomial monomial(std::size_t degree, const Scalar &c = Scalar(1)) {
    std::vector<Scalar> v(degree + 1, Scalar(0));
    v[degree] = c;
    return BasicPolynomial(std::move(v));
  }

  bool is_zero() const { return c_.empty(); }
  /// Degree; -1 for the zero polynomial.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  const std::vector<Scalar> &coefficients() const { return c_; }
  Scalar operator[](std::size_t i) const { return i < c_.size() ? c_[i] : Scalar(0); }
  Scalar leading() const { return c_.empty() ? Scalar(0) : c_.back(); }

  Scalar operator()(const Scalar &x) const {
    Scalar acc(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
  }

  /// p(q(T)).
  BasicPolynomial compose(const BasicPolynomial &q) const {
    BasicPolynomial acc;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * q + constant(*it);
    return acc;
  }

  BasicPolynomial derivative() const {
    std::vector<Scalar> d;
    for (std::size_t i = 1; i < c_.size(); ++i) d.push_back(c_[i] * Scalar(static_cast<long>(i)));
    return BasicPolynomial(std::move(d));
  }

  BasicPolynomial &operator+=(const BasicPolynomial &o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Scalar(0));
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
  }
  BasicPolynomial &operator-=(const BasicPolynomial &o) { return *this += -o; }
  BasicPolynomial &operator*=(const Scalar &s) {
    for (auto &c : c_) c *= s;
    trim();
    return *this;
  }
  BasicPolynomial operator-() const {
    BasicPolynomial out = *this;
    for (auto &c : out.c_) c = -c;
    return out;
  }

  friend BasicPolynomial operator+(BasicPolynomial a, const BasicPolynomial &b) { return a += b; }
  friend BasicPolynomial operator-(BasicPolynomial a, const BasicPolynomial &b) { return a -= b; }
  friend BasicPolynomial operator*(BasicPolynomial a, const Scalar &s) { return a *= s; }
  friend BasicPolynomial operator*(const Scalar &s, BasicPolynomial a) { return a *= s; }
  friend BasicPolynomial operator*(const BasicPolynomial &a, const BasicPolynomial &b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Scalar> out(a.c_.size() + b.c_.size() - 1, Scalar(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i)
      for (std::size_t j = 0; j < b.c_.size(); ++j) out[i + j] += a.c_[i] * b.c_[j];
    return BasicPolynomial(std::move(out));
  }
  friend bool operator==(const BasicPolynomial &, const BasicPolynomial &) = default;

private:
  void trim() {
    while (!c_.empty() && c_.back() == Scalar(0)) c_.pop_back();
  }

  std::vector<Scalar> c_;
};

template <typename Scalar>
BasicPolynomial<Scalar> pow(const BasicPolynomial<Scalar> &p, unsigned e) {
  BasicPolynomial<Scalar> out = BasicPolynomial<Scalar>::constant(Scalar(1));
  for (unsigned i = 0; i < e; ++i) out = out * p;
  return out;
}

/// Sparse polynomial in two variables (r, m); zero coefficients are never
/// stored.  Key is (degree in r, degree in m).
template <typename Scalar>
class BasicBiPolynomial {
public:
  using Key = std::pair<unsigned, unsigned>;

  BasicBiPolynomial() = default;

  static BasicBiPolynomial term(unsigned dr, unsigned dm, const Scalar &c) {
    BasicBiPolynomial out;
    out.add(dr, dm, c);
    return out;
  }
  /// Lifts p(r) (in_r = true) or p(m) into two variables.
  static BasicBiPolynomial lift(const BasicPolynomial<Scalar> &p, bool in_r) {
    BasicBiPolynomial out;
    for (std::size_t i = 0; i < p.coefficients().size(); ++i)
      out.add(in_r ? i : 0, in_r ? 0 : i, p.coefficients()[i]);
    return out;
  }

  void add(unsigned dr, unsigned dm, const Scalar &c) {
    if (c == Scalar(0)) return;
    auto [it, inserted] = c_.try_emplace({dr, dm}, c);
    if (!inserted) {
      it->second += c;
      if (it->second == Scalar(0)) c_.erase(it);
    }
  }

  const std::map<Key, Scalar> &coefficients() const { return c_; }
  bool is_zero() const { return c_.empty(); }

  int degree_r() const {
    int d = -1;
    for (const auto &[k, v] : c_) d = std::max(d, static_cast<int>(k.first));
    return d;
  }
  int degree_m() const {
    int d = -1;
    for (const auto &[k, v] : c_) d = std::max(d, static_cast<int>(k.second));
    return d;
  }

  Scalar operator()(const Scalar &r, const Scalar &m) const {
    Scalar acc(0);
    for (const auto &[k, v] : c_) acc += v * pow(r, k.first) * pow(m, k.second);
    return acc;
  }

  /// P(x(T), y(T)) as a univariate polynomial.
  BasicPolynomial<Scalar> substitute(const BasicPolynomial<Scalar> &x,
                                     const BasicPolynomial<Scalar> &y) const {
    BasicPolynomial<Scalar> acc;
    for (const auto &[k, v] : c_) acc += hf::pow(x, k.first) * hf::pow(y, k.second) * v;
    return acc;
  }

  BasicBiPolynomial &operator+=(const BasicBiPolynomial &o) {
    for (const auto &[k, v] : o.c_) add(k.first, k.second, v);
    return *this;
  }
  friend BasicBiPolynomial operator+(BasicBiPolynomial a, const BasicBiPolynomial &b) { return a += b; }
  friend BasicBiPolynomial operator*(const BasicBiPolynomial &a, const BasicBiPolynomial &b) {
    BasicBiPolynomial out;
    for (const auto &[ka, va] : a.c_)
      for (const auto &[kb, vb] : b.c_) out.add(ka.first + kb.first, ka.second + kb.second, va * vb);
    return out;
  }
  friend bool operator==(const BasicBiPolynomial &, const BasicBiPolynomial &) = default;

private:
  std::map<Key, Scalar> c_;
};

using Polynomial = BasicPolynomial<Rational>;
using BiPolynomial = BasicBiPolynomial<Rational>;

/// Human-readable rendering in the variable `var`, highest degree first.
std::string to_string(const Polynomial &p, std::string_view var = "T");

} // namespace hf
