#include "hf/rational.hpp"

#include <ostream>

#include "hf/errors.hpp"

namespace hf {

Rational::Rational(const Integer &num, const Integer &den) {
  if (den == 0) throw UndefinedDenominator("rational with zero denominator");
  q_ = mpq_class(num, den);
  q_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
  auto trim = [](std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
    return s;
  };
  auto parse_int = [&](std::string_view s) {
    s = trim(s);
    std::string digits(s);
    if (!digits.empty() && digits.front() == '+') digits.erase(0, 1);
    const std::size_t start = (!digits.empty() && digits.front() == '-') ? 1 : 0;
    if (digits.size() == start)
      throw ParseError("empty integer in rational '" + std::string(text) + "'");
    for (std::size_t i = start; i < digits.size(); ++i)
      if (digits[i] < '0' || digits[i] > '9')
        throw ParseError("not a rational: '" + std::string(text) + "'");
    return Integer(digits);
  };
  text = trim(text);
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_int(text));
  const Integer den = parse_int(text.substr(slash + 1));
  if (den == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
  return Rational(parse_int(text.substr(0, slash)), den);
}

std::optional<long> Rational::to_long() const {
  if (!is_integer() || !q_.get_num().fits_slong_p()) return std::nullopt;
  return q_.get_num().get_si();
}

Integer Rational::floor() const {
  Integer out;
  mpz_fdiv_q(out.get_mpz_t(), q_.get_num_mpz_t(), q_.get_den_mpz_t());
  return out;
}

std::string Rational::str() const {
  if (is_integer()) return q_.get_num().get_str();
  return q_.get_num().get_str() + "/" + q_.get_den().get_str();
}

Rational &Rational::operator/=(const Rational &o) {
  if (o.is_zero()) throw UndefinedDenominator("division by zero");
  q_ /= o.q_;
  return *this;
}

Rational abs(const Rational &x) { return x.sign() < 0 ? -x : x; }

Rational pow(const Rational &x, unsigned e) {
  Rational out(1), base = x;
  while (e) {
    if (e & 1u) out *= base;
    base *= base;
    e >>= 1u;
  }
  return out;
}

std::ostream &operator<<(std::ostream &os, const Rational &x) { return os << x.str(); }

} // namespace hf
