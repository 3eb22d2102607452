#include <doctest.h>

#include <random>

#include "hf/errors.hpp"
#include "hf/verma.hpp"
#include "support.hpp"

using namespace hf;
using G = Generator;
using hf::testing::random_deformation;
using hf::testing::random_rational;

namespace {

Rational nat(unsigned n) { return Rational(static_cast<long>(n)); }

VermaElement random_homogeneous(std::mt19937_64 &rng, const Rational &r, unsigned depth) {
  const auto basis = weight_space(r, depth);
  VermaElement v(r);
  for (const auto &[j, i] : basis.basis)
    if (rng() % 3) v.add(j, i, random_rational(rng, 5, 3));
  return v;
}

} // namespace

TEST_CASE("weight spaces") {
  CHECK(weight_space(0, 0).basis == std::vector<VermaElement::Key>{{0, 0}});
  CHECK(weight_space(0, 4).basis == std::vector<VermaElement::Key>{{0, 4}, {1, 2}, {2, 0}});
  CHECK(weight_space(0, 5).size() == 3);
  for (unsigned n = 0; n <= 20; ++n) CHECK(weight_space(Rational(1, 2), n).size() == 1 + n / 2);
}

TEST_CASE("parsing and rendering of Verma elements") {
  const auto v = parse_verma_element(2, "(0,2):1,(1,0):-2");
  CHECK(to_string(v) == "Y^2 - 2 F");
  CHECK(v.depth() == 2u);
  CHECK(to_string(parse_verma_element(2, "(0,0):3/2")) == "3/2");
  CHECK_THROWS_AS(parse_verma_element(2, "(0,2)1"), ParseError);
  CHECK_THROWS_AS(parse_verma_element(2, "(0,x):1"), ParseError);
  CHECK_FALSE(parse_verma_element(2, "(0,1):1,(0,0):1").depth().has_value());
}

TEST_CASE("generator actions on low vectors") {
  std::mt19937_64 rng(23);
  for (int k = 0; k < 10; ++k) {
    const auto def = random_deformation(rng);
    const Rational r = random_rational(rng);
    VermaModule z(def, r);
    const auto v = VermaElement::highest(r);
    const Rational c0r = deformed_scalar(def, r);
    CHECK(z.act(G::Y, v) == VermaElement::basis(r, 0, 1));
    CHECK(z.act(G::X, z.act(G::Y, v)) == (-c0r) * v);
    CHECK(z.act(G::E, z.act(G::F, v)) == r * v);
    CHECK(z.act_direct(G::X, v).is_zero());
    CHECK(z.act_direct(G::X, VermaElement::basis(r, 0, 1)) == (-c0r) * v);
    CHECK(z.act_direct(G::E, VermaElement::basis(r, 1, 0)) == r * v);
    CHECK(z.act(G::E, v).is_zero());
    CHECK(z.act(G::X, v).is_zero());
  }
}

TEST_CASE("PBW projection and closed formulas agree") {
  std::mt19937_64 rng(29);
  for (int trial = 0; trial < 200; ++trial) {
    const auto def = random_deformation(rng, 2);
    const Rational r = random_rational(rng);
    VermaModule z(def, r);
    const unsigned depth = static_cast<unsigned>(rng() % 6);
    const auto v = random_homogeneous(rng, r, depth);
    for (G g : kGenerators) CHECK(z.act(g, v) == z.act_direct(g, v));
  }
}

TEST_CASE("H acts by the weight and generators shift the depth") {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 50; ++trial) {
    const auto def = random_deformation(rng);
    const Rational r = random_rational(rng);
    VermaModule z(def, r);
    const unsigned depth = 2 + static_cast<unsigned>(rng() % 8);
    const auto v = random_homogeneous(rng, r, depth);
    CHECK(z.act_direct(G::H, v) == (r - nat(depth)) * v);
    for (G g : kGenerators) {
      const auto w = z.act_direct(g, v);
      if (!w.is_zero()) CHECK(*w.depth() == static_cast<unsigned>(static_cast<int>(depth) - weight(g)));
    }
  }
}

TEST_CASE("relations hold as operators on Z(r)") {
  std::mt19937_64 rng(37);
  for (int trial = 0; trial < 20; ++trial) {
    const auto def = random_deformation(rng);
    const Rational r = random_rational(rng);
    VermaModule z(def, r);
    const auto v = random_homogeneous(rng, r, 1 + static_cast<unsigned>(rng() % 7));
    auto ab = [&](G a, G b) { return z.act_direct(a, z.act_direct(b, v)) - z.act_direct(b, z.act_direct(a, v)); };
    CHECK(ab(G::E, G::F) == z.act_direct(G::H, v));
    CHECK(ab(G::E, G::Y) == z.act_direct(G::X, v));
    CHECK(ab(G::F, G::X) == z.act_direct(G::Y, v));
    CHECK(ab(G::H, G::X) == z.act_direct(G::X, v));
    CHECK(ab(G::E, G::X).is_zero());
    // [Y, X] v = g(Delta) v, Delta = (EF + FE + H^2/2)/4
    const auto e = [&](const VermaElement &u) { return z.act_direct(G::E, u); };
    const auto f = [&](const VermaElement &u) { return z.act_direct(G::F, u); };
    const auto h = [&](const VermaElement &u) { return z.act_direct(G::H, u); };
    auto delta = [&](const VermaElement &u) {
      return Rational(1, 4) * (e(f(u)) + f(e(u))) + Rational(1, 8) * h(h(u));
    };
    VermaElement acc(r);
    const auto &c = def.g().coefficients();
    for (auto it = c.rbegin(); it != c.rend(); ++it) acc = delta(acc) + (*it) * v;
    CHECK(ab(G::Y, G::X) == acc);
  }
}

TEST_CASE("kernel examples") {
  const auto f0 = Deformation::parse_f("0");
  const auto kx = kernel(KernelKind::X, 5, 2, f0);
  REQUIRE(kx.size() == 1);
  CHECK(to_string(kx[0]) == "Y^2 - 2 F");
  const auto ke = kernel(KernelKind::E, Rational(3, 7), 0, f0);
  REQUIRE(ke.size() == 1);
  CHECK(ke[0] == VermaElement::highest(Rational(3, 7)));
  // alpha_{2,8} = 0 but with g = 1 the Verma module of integral weight is simple
  CHECK(alpha(f0, 2, 8).is_zero());
  CHECK(kernel(KernelKind::Both, 2, 7, f0).empty());
  CHECK(kernel(KernelKind::Both, Rational(1, 2), 4, f0).size() == 1);
}

TEST_CASE("v_t vectors") {
  const auto f0 = Deformation::parse_f("0");
  CHECK(vt_vector(5, 5, f0) == VermaElement::highest(5));
  CHECK(vt_vector(5, 4, f0) == VermaElement::basis(5, 0, 1));
  CHECK(to_string(vt_vector(5, 3, f0)) == "Y^2 + 1/5 F");
  CHECK_THROWS_AS(vt_vector(2, -2, f0), OutOfRange);
  CHECK_THROWS_AS(vt_vector(2, Rational(1, 2), f0), OutOfRange);
  CHECK_THROWS_AS(vt_vector(2, 3, f0), OutOfRange);
  CHECK_NOTHROW(vt_vector(2, -1, f0));
}

TEST_CASE("v_t is sl2-maximal and satisfies the X recursion") {
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 30; ++trial) {
    const auto def = random_deformation(rng);
    const bool natural = trial % 3 == 0;
    const Rational r = natural ? Rational(static_cast<long>(rng() % 6)) : random_rational(rng) + Rational(1, 7);
    VermaModule z(def, r);
    const unsigned steps = natural ? static_cast<unsigned>(*r.to_long()) + 1 : 8;
    for (unsigned m = 0; m <= steps; ++m) {
      const Rational t = r - nat(m);
      const auto vt = z.vt_vector(t);
      CHECK(vt.coefficient(0, m) == Rational(1));
      CHECK(z.act_direct(G::E, vt).is_zero());
      if (m >= 2 && !(t + Rational(3)).is_zero()) {
        const Rational coeff = -alpha(def, r, m) / (t + Rational(3));
        CHECK(z.act_direct(G::X, z.vt_vector(t + Rational(1))) == coeff * z.vt_vector(t + Rational(2)));
      }
    }
  }
}

TEST_CASE("maximal vectors occur only at roots of alpha") {
  std::vector<Rational> rs;
  for (long r = -5; r <= 5; ++r) rs.emplace_back(r);
  rs.emplace_back(1, 2);
  rs.emplace_back(-7, 3);
  for (const auto &def : {Deformation::parse_f("0"), Deformation::parse_f("-1,1,8"), Deformation::parse_f("0,8")}) {
    for (const auto &r : rs) {
      VermaModule z(def, r);
      for (unsigned n = 1; n <= 12; ++n)
        if (!z.kernel(KernelKind::Both, n).empty()) CHECK(alpha(def, r, n + 1).is_zero());
    }
  }
}

TEST_CASE("kernel dimensions of X and E") {
  std::vector<Rational> rs;
  for (long r = -5; r <= 5; ++r) rs.emplace_back(r);
  rs.emplace_back(1, 2);
  rs.emplace_back(-7, 3);
  for (const auto &def : {Deformation::parse_f("0"), Deformation::parse_f("-1,1,8")}) {
    for (const auto &r : rs) {
      VermaModule z(def, r);
      for (unsigned n = 0; n <= 10; ++n) {
        const auto kx = z.kernel(KernelKind::X, n).size();
        CHECK(kx <= 1);
        if (n % 2 == 0) CHECK(kx == 1);
        const auto ke = z.kernel(KernelKind::E, n).size();
        CHECK(ke >= 1);
        CHECK(ke <= 2);
        const Rational r1 = r + Rational(1);
        const bool exceptional = r1.is_natural() && r1 <= nat(n) && nat(n) <= Rational(2) * r1;
        if (!exceptional) CHECK(ke == 1);
      }
    }
  }
}

TEST_CASE("leading terms of X-kernel vectors") {
  std::mt19937_64 rng(43);
  for (int trial = 0; trial < 20; ++trial) {
    const auto def = random_deformation(rng);
    const Rational r = random_rational(rng);
    VermaModule z(def, r);
    for (unsigned n = 2; n <= 8; n += 2) {
      const auto kx = z.kernel(KernelKind::X, n);
      REQUIRE(kx.size() == 1);
      CHECK(kx[0].coefficient(0, n) == Rational(1));
      Rational sum(0);
      for (unsigned l = 0; l < n; ++l) sum += deformed_scalar(def, r - nat(l));
      CHECK(kx[0].coefficient(1, n - 2) == -sum);
    }
  }
}

TEST_CASE("maximal weights") {
  const auto f0 = Deformation::parse_f("0");
  auto weights = [](const std::vector<std::pair<Rational, VermaElement>> &found) {
    std::vector<Rational> out;
    for (const auto &[t, v] : found) out.push_back(t);
    return out;
  };
  for (long r = 0; r <= 5; ++r) CHECK(find_maximal_weights(r, f0).empty());
  const auto wf = Deformation::parse_f("-1,1,8");
  const auto zero = find_maximal_weights(0, wf);
  CHECK(weights(zero) == std::vector<Rational>{-1, -2, -3});
  for (std::size_t k = 0; k < zero.size(); ++k) CHECK(zero[k].second == VermaElement::basis(0, 0, static_cast<unsigned>(k + 1)));
  const auto half = find_maximal_weights(Rational(1, 2), f0);
  REQUIRE(weights(half) == std::vector<Rational>{Rational(-7, 2)});
  CHECK(half[0].second.coefficient(0, 4) == Rational(1));
  CHECK(find_maximal_weights(Rational(-7, 3), f0).empty());
}
