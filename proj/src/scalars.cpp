#include "hf/scalars.hpp"

#include <string>
#include <vector>

#include <fmt/format.h>

#include "hf/errors.hpp"

namespace hf {

Deformation Deformation::from_g(const Polynomial &g) {
  if (g.is_zero())
    throw InvalidDeformation("g = 1 + f must be nonzero (f = -1 is excluded)");
  return Deformation(g);
}

Deformation Deformation::from_f(const Polynomial &f) {
  return from_g(f + Polynomial::constant(1));
}

Deformation Deformation::parse_f(std::string_view csv) {
  std::vector<Rational> coeffs;
  std::size_t start = 0;
  while (start <= csv.size()) {
    const auto comma = csv.find(',', start);
    const auto piece = csv.substr(start, comma == std::string_view::npos ? std::string_view::npos
                                                                         : comma - start);
    coeffs.push_back(Rational::parse(piece));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return from_f(Polynomial(std::move(coeffs)));
}

Polynomial sum_power_poly(unsigned d) {
  // g_d = ((T+1)^{d+1} - 1 - sum_{i<d} binom(d+1, i) g_i) / (d+1)
  std::vector<Polynomial> g;
  g.reserve(d + 1);
  const Polynomial t_plus_1({Rational(1), Rational(1)});
  for (unsigned k = 0; k <= d; ++k) {
    Polynomial acc = pow(t_plus_1, k + 1) - Polynomial::constant(1);
    Integer binom = 1;
    for (unsigned i = 0; i < k; ++i) {
      acc -= g[i] * Rational(binom);
      binom = binom * (k + 1 - i) / (i + 1);
    }
    g.push_back(acc * Rational(1, static_cast<long>(k) + 1));
  }
  return g.back();
}

Rational casimir_scalar(const Rational &t) { return (t * t + Rational(2) * t) / Rational(8); }

Rational deformed_scalar(const Deformation &def, const Rational &t) {
  return def.g()(casimir_scalar(t));
}

Rational alpha(const Deformation &def, const Rational &r, unsigned m) {
  Rational acc(0);
  for (unsigned i = 0; i + 2 <= m; ++i) {
    const Rational shift(static_cast<long>(i));
    acc += (r + Rational(1) - shift) * deformed_scalar(def, r - shift);
  }
  return acc;
}

BiPolynomial alpha_bipoly(const Deformation &def) {
  // Summand as a polynomial in (r, i); the second slot temporarily holds i.
  const BiPolynomial r_minus_i = BiPolynomial::term(1, 0, 1) + BiPolynomial::term(0, 1, -1);
  const BiPolynomial casimir =
      (r_minus_i * r_minus_i + r_minus_i * BiPolynomial::term(0, 0, 2)) *
      BiPolynomial::term(0, 0, Rational(1, 8));
  BiPolynomial g_of_c;
  const auto &gc = def.g().coefficients();
  for (auto it = gc.rbegin(); it != gc.rend(); ++it)
    g_of_c = g_of_c * casimir + BiPolynomial::term(0, 0, *it);
  const BiPolynomial summand =
      (r_minus_i + BiPolynomial::term(0, 0, 1)) * g_of_c;

  // sum_{i=0}^{m-2} i^b = [b = 0] + g_b(m - 2)
  const Polynomial m_minus_2({Rational(-2), Rational(1)});
  BiPolynomial out;
  for (const auto &[key, coeff] : summand.coefficients()) {
    const auto [dr, di] = key;
    Polynomial power_sum = sum_power_poly(di).compose(m_minus_2);
    if (di == 0) power_sum += Polynomial::constant(1);
    for (std::size_t k = 0; k < power_sum.coefficients().size(); ++k)
      out.add(dr, static_cast<unsigned>(k), coeff * power_sum.coefficients()[k]);
  }
  return out;
}

Rational d_coeff(const Deformation &def, const Rational &r, unsigned m) {
  const Rational t = r - Rational(static_cast<long>(m));
  const Rational den = (t + Rational(2)) * (t + Rational(3));
  if (den.is_zero())
    throw UndefinedDenominator("d_{r-m} undefined for r = " + r.str() + ", m = " + std::to_string(m));
  return alpha(def, r, m) / den;
}

namespace {

std::vector<Integer> divisors_of(Integer n) {
  // n > 0.  Trial division with a primality test on the cofactor.
  std::vector<std::pair<Integer, unsigned>> factors;
  for (Integer p = 2; p * p <= n && p < 2000000; ++p) {
    unsigned e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    if (e) factors.emplace_back(p, e);
  }
  if (n > 1) {
    if (n >= Integer(2000000) * Integer(2000000) && mpz_probab_prime_p(n.get_mpz_t(), 30) == 0)
      throw ZeroPolynomial("constant term too large to factor for integer-root search");
    factors.emplace_back(n, 1);
  }
  std::vector<Integer> divs{1};
  for (const auto &[p, e] : factors) {
    const std::size_t count = divs.size();
    Integer pk = 1;
    for (unsigned k = 1; k <= e; ++k) {
      pk *= p;
      for (std::size_t i = 0; i < count; ++i) divs.push_back(divs[i] * pk);
    }
  }
  return divs;
}

} // namespace

std::set<Integer> integer_roots(const Polynomial &p) {
  if (p.is_zero()) throw ZeroPolynomial("integer_roots of the zero polynomial");
  Integer lcm_den = 1;
  for (const auto &c : p.coefficients()) mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), c.den().get_mpz_t());
  std::vector<Integer> a;
  for (const auto &c : p.coefficients()) a.push_back(c.num() * (lcm_den / c.den()));

  std::set<Integer> roots;
  std::size_t low = 0;
  while (a[low] == 0) ++low;
  if (low > 0) roots.insert(0);
  if (low + 1 == a.size()) return roots;

  auto eval = [&](const Integer &x) {
    Integer acc = 0;
    for (std::size_t i = a.size(); i-- > low;) acc = acc * x + a[i];
    return acc;
  };
  Integer bound = 0;
  for (std::size_t i = low; i + 1 < a.size(); ++i) {
    Integer q = abs(a[i]) / abs(a.back()) + 1;
    if (q > bound) bound = q;
  }
  bound += 1;
  for (const Integer &d : divisors_of(abs(a[low]))) {
    if (d > bound) continue;
    if (eval(d) == 0) roots.insert(d);
    if (eval(-d) == 0) roots.insert(-d);
  }
  return roots;
}

std::set<Integer> alpha_integer_roots_in_m(const Deformation &def, const Rational &r) {
  const Polynomial in_m = alpha_bipoly(def).substitute(Polynomial::constant(r), Polynomial::variable());
  if (in_m.is_zero()) throw ZeroPolynomial("alpha(r, m) vanishes identically in m for r = " + r.str());
  return integer_roots(in_m);
}

} // namespace hf

namespace hf {

std::string to_string(const Polynomial &p, std::string_view var) {
  if (p.degree() < 0) return "0";
  std::string out;
  const auto &c = p.coefficients();
  for (std::size_t k = c.size(); k-- > 0;) {
    if (c[k].is_zero()) continue;
    std::string mono;
    if (k == 1) mono = std::string(var);
    else if (k > 1) mono = fmt::format("{}^{}", var, k);
    const Rational mag = abs(c[k]);
    const std::string body = mono.empty() ? mag.str() : (mag == Rational(1) ? mono : mag.str() + " " + mono);
    if (out.empty()) out = (c[k].sign() < 0 ? "-" : "") + body;
    else out += (c[k].sign() < 0 ? " - " : " + ") + body;
  }
  return out;
}

} // namespace hf
