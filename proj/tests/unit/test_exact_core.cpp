#include <doctest.h>

#include <random>

#include "hf/errors.hpp"
#include "hf/polynomial.hpp"
#include "hf/rational.hpp"
#include "hf/scalars.hpp"
#include "support.hpp"

using namespace hf;
using hf::testing::random_deformation;
using hf::testing::random_rational;

TEST_CASE("rational parsing and rendering") {
  CHECK(Rational::parse("6/4") == Rational(3, 2));
  CHECK(Rational::parse("-7/3").str() == "-7/3");
  CHECK(Rational::parse("5").str() == "5");
  CHECK(Rational(4, 2).str() == "2");
  CHECK_THROWS_AS(Rational::parse("1/0"), ParseError);
  CHECK_THROWS_AS(Rational::parse("x"), ParseError);
  CHECK_THROWS_AS(Rational(1) / Rational(0), UndefinedDenominator);
  CHECK(Rational(-7, 2).floor() == Integer(-4));
  CHECK(Rational(3).is_natural());
  CHECK_FALSE(Rational(-1).is_natural());
  CHECK_FALSE(Rational(1, 2).is_integer());
}

TEST_CASE("deformation construction") {
  CHECK_THROWS_AS(Deformation::parse_f("-1"), InvalidDeformation);
  CHECK_THROWS_AS(Deformation::parse_f("-1,0,0"), InvalidDeformation);
  const auto def = Deformation::parse_f("-1,1,8");
  CHECK(def.g() == Polynomial({0, 1, 8}));
  CHECK(def.degree() == 2);
  CHECK(def.f() == Polynomial({-1, 1, 8}));
  CHECK_THROWS_AS(Deformation::parse_f("1,a"), ParseError);
}

TEST_CASE("sum of powers polynomials against brute force") {
  for (unsigned d = 0; d <= 6; ++d) {
    const Polynomial gd = sum_power_poly(d);
    CHECK(gd.degree() == static_cast<int>(d) + 1);
    CHECK(gd(Rational(0)) == Rational(0));
    Rational acc(0);
    for (long t = 1; t <= 15; ++t) {
      acc += pow(Rational(t), d);
      CHECK(gd(Rational(t)) == acc);
    }
    for (long t = -5; t <= 5; ++t) CHECK(gd(Rational(t)) - gd(Rational(t - 1)) == pow(Rational(t), d));
  }
}

TEST_CASE("casimir scalars") {
  CHECK(casimir_scalar(0) == Rational(0));
  CHECK(casimir_scalar(-2) == Rational(0));
  CHECK(casimir_scalar(1) == Rational(3, 8));
  CHECK(casimir_scalar(-1) == Rational(-1, 8));
  // c_t is invariant under t -> -t - 2
  std::mt19937_64 rng(3);
  for (int k = 0; k < 50; ++k) {
    const Rational t = random_rational(rng);
    CHECK(casimir_scalar(t) == casimir_scalar(-t - Rational(2)));
  }
}

TEST_CASE("alpha with f = 0 is (m - 1)(2r + 4 - m)/2") {
  const auto def = Deformation::parse_f("0");
  std::mt19937_64 rng(5);
  for (int k = 0; k < 100; ++k) {
    const Rational r = random_rational(rng);
    const unsigned m = 1 + static_cast<unsigned>(rng() % 20);
    const Rational mm(static_cast<long>(m));
    CHECK(alpha(def, r, m) == (mm - 1) * (Rational(2) * r + 4 - mm) / Rational(2));
  }
  CHECK(alpha(def, 2, 8) == Rational(0));
  CHECK(alpha(def, 5, 2) == Rational(6));
  CHECK(d_coeff(def, 5, 2) == Rational(1, 5));
}

TEST_CASE("alpha bipolynomial agrees with the defining sum") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 20; ++trial) {
    const auto def = random_deformation(rng);
    const BiPolynomial a = alpha_bipoly(def);
    CHECK(a.degree_m() == 2 * static_cast<int>(def.degree()) + 2);
    for (int k = 0; k < 30; ++k) {
      const Rational r = random_rational(rng);
      const unsigned m = 1 + static_cast<unsigned>(rng() % 15);
      CHECK(a(r, Rational(static_cast<long>(m))) == alpha(def, r, m));
    }
  }
}

TEST_CASE("alpha cocycle identity") {
  std::mt19937_64 rng(13);
  for (int k = 0; k < 100; ++k) {
    const auto def = random_deformation(rng);
    const Rational r = random_rational(rng);
    const unsigned a = static_cast<unsigned>(rng() % 8), b = static_cast<unsigned>(rng() % 8);
    CHECK(alpha(def, r, a + b + 1) == alpha(def, r, a + 1) + alpha(def, r - Rational(static_cast<long>(a)), b + 1));
  }
}

TEST_CASE("d coefficient denominators") {
  const auto def = Deformation::parse_f("0");
  CHECK_THROWS_AS(d_coeff(def, 0, 2), UndefinedDenominator);  // t = -2
  CHECK_THROWS_AS(d_coeff(def, -1, 2), UndefinedDenominator); // t = -3
  CHECK_NOTHROW(d_coeff(def, Rational(1, 2), 2));
}

TEST_CASE("integer roots match a brute-force scan") {
  std::mt19937_64 rng(17);
  CHECK_THROWS_AS(integer_roots(Polynomial()), ZeroPolynomial);
  CHECK(integer_roots(Polynomial({1})).empty());
  for (int trial = 0; trial < 40; ++trial) {
    Polynomial p = Polynomial::constant(random_rational(rng, 5, 4));
    if (p.is_zero()) p = Polynomial::constant(1);
    const unsigned nroots = static_cast<unsigned>(rng() % 4);
    for (unsigned k = 0; k < nroots; ++k) {
      const long root = static_cast<long>(rng() % 20001) - 10000;
      p = p * Polynomial({Rational(-root), Rational(1)});
    }
    if (rng() % 2) p = p * Polynomial({1, 0, 3});          // no real roots
    if (rng() % 2) p = p * Polynomial({Rational(1), Rational(2)}); // root -1/2
    std::set<Integer> brute;
    for (long t = -10000; t <= 10000; ++t)
      if (p(Rational(t)).is_zero()) brute.insert(Integer(t));
    CHECK(integer_roots(p) == brute);
  }
}

TEST_CASE("alpha roots in m") {
  const auto def = Deformation::parse_f("0");
  CHECK(alpha_integer_roots_in_m(def, 2) == std::set<Integer>{1, 8});
  CHECK(alpha_integer_roots_in_m(def, Rational(1, 3)) == std::set<Integer>{1});
  const auto weyl_fail = Deformation::parse_f("-1,1,8");
  const auto roots = alpha_integer_roots_in_m(weyl_fail, 0);
  CHECK(roots.count(2));
  CHECK(roots.count(3));
  CHECK(roots.count(4));
}

TEST_CASE("polynomial rendering") {
  CHECK(to_string(Polynomial({0, 1, 8})) == "8 T^2 + T");
  CHECK(to_string(Polynomial({-1})) == "-1");
  CHECK(to_string(Polynomial()) == "0");
}
