#include <doctest.h>

#include <random>

#include "hf/errors.hpp"
#include "hf/pbw.hpp"
#include "support.hpp"

using namespace hf;
using G = Generator;
using hf::testing::sample_deformations;

namespace {

AlgebraElement gen(G g) { return AlgebraElement::generator(g); }

AlgebraElement commutator(const HfAlgebra &alg, const AlgebraElement &a, const AlgebraElement &b) {
  return alg.multiply(a, b) - alg.multiply(b, a);
}

} // namespace

TEST_CASE("word parsing") {
  CHECK(parse_word("E F^2 X Y") == Word{G::E, G::F, G::F, G::X, G::Y});
  CHECK(parse_word("") == Word{});
  CHECK(to_string(Word{G::X, G::Y, G::Y}) == "X Y Y");
  CHECK_THROWS_AS(parse_word("E Q"), ParseError);
  CHECK_THROWS_AS(parse_word("E^"), ParseError);
}

TEST_CASE("single rewrite steps") {
  const auto def = Deformation::parse_f("0");
  CHECK(to_string(normalize(parse_word("X Y"), def)) == "Y X - 1");
  CHECK(to_string(normalize(parse_word("E F"), def)) == "F E + H");
  CHECK(to_string(normalize(parse_word("H F"), def)) == "F H - 2 F");
  CHECK(to_string(normalize(parse_word("X F"), def)) == "F X - Y");
  CHECK(to_string(normalize(parse_word("E Y"), def)) == "Y E + X");
  CHECK(to_string(normalize(parse_word("E X"), def)) == "X E");
  CHECK(to_string(normalize(parse_word("F Y H X E"), def)) == "F Y H X E");
}

TEST_CASE("casimir normal forms") {
  CHECK(to_string(delta_normal_form()) == "1/2 F E + 1/8 H^2 + 1/4 H");
  CHECK(to_string(delta0_normal_form(Deformation::parse_f("0,8"))) == "4 F E + H^2 + 2 H + 1");
  CHECK(to_string(delta0_normal_form(Deformation::parse_f("0"))) == "1");
}

TEST_CASE("the relations hold in normal form") {
  for (const auto &def : sample_deformations()) {
    HfAlgebra alg(def);
    CHECK(commutator(alg, gen(G::E), gen(G::F)) == gen(G::H));
    CHECK(commutator(alg, gen(G::H), gen(G::E)) == Rational(2) * gen(G::E));
    CHECK(commutator(alg, gen(G::H), gen(G::F)) == Rational(-2) * gen(G::F));
    CHECK(commutator(alg, gen(G::E), gen(G::Y)) == gen(G::X));
    CHECK(commutator(alg, gen(G::F), gen(G::X)) == gen(G::Y));
    CHECK(commutator(alg, gen(G::H), gen(G::X)) == gen(G::X));
    CHECK(commutator(alg, gen(G::H), gen(G::Y)) == -gen(G::Y));
    CHECK(commutator(alg, gen(G::E), gen(G::X)).is_zero());
    CHECK(commutator(alg, gen(G::F), gen(G::Y)).is_zero());
    CHECK(commutator(alg, gen(G::Y), gen(G::X)) == alg.delta0());
  }
}

TEST_CASE("the Casimir is central in the sl2 part and Delta0 = g(Delta)") {
  for (const auto &def : sample_deformations()) {
    HfAlgebra alg(def);
    for (G g : {G::E, G::F, G::H}) CHECK(commutator(alg, gen(g), alg.delta()).is_zero());
    AlgebraElement horner;
    const auto &c = def.g().coefficients();
    for (auto it = c.rbegin(); it != c.rend(); ++it)
      horner = alg.multiply(horner, alg.delta()) + AlgebraElement::scalar(*it);
    CHECK(horner == alg.delta0());
  }
}

TEST_CASE("every rule strictly decreases the termination order") {
  for (const auto &def : sample_deformations()) {
    HfAlgebra alg(def);
    for (G u : kGenerators)
      for (G v : kGenerators) {
        if (u <= v) continue;
        const Word lhs{u, v};
        for (const auto &[w, c] : alg.rules().rhs(u, v)) {
          const auto a = weighted_degree(w, def), b = weighted_degree(lhs, def);
          CHECK((a < b || (a == b && inversions(w) < inversions(lhs))));
        }
      }
  }
}

TEST_CASE("confluence and associativity for deg(g) <= 3") {
  for (const auto &def : sample_deformations()) {
    const auto report = confluence_report(def, 100, 7);
    CHECK(report.overlaps.size() == 10);
    CHECK(report.ok());
  }
}

TEST_CASE("negative controls") {
  HfAlgebra good(Deformation::parse_f("0,1"));
  SUBCASE("sign flip of X in the EY rule breaks confluence") {
    HfAlgebra bad(good.deformation(), corrupted_rules(good, Corruption::FlipXInEY));
    CHECK_THROWS_AS(confluence_report(bad, 10, 1), ConfluenceFailure);
    CHECK_FALSE(confluence_report(bad, 10, 1, false).ok());
  }
  SUBCASE("sign flip of Delta0 in the XY rule is the algebra for -g") {
    HfAlgebra flipped(good.deformation(), corrupted_rules(good, Corruption::FlipDelta0InXY));
    HfAlgebra negated(Deformation::from_g(Polynomial::constant(0) - good.deformation().g()));
    std::mt19937_64 rng(2);
    for (int k = 0; k < 30; ++k) {
      const auto a = random_element(rng), b = random_element(rng);
      CHECK(flipped.multiply(a, b) == negated.multiply(a, b));
    }
    CHECK(confluence_report(flipped, 20, 1, false).ok());
  }
}

TEST_CASE("anti-involution") {
  std::mt19937_64 rng(19);
  for (const auto &def : sample_deformations()) {
    HfAlgebra alg(def);
    CHECK(alg.anti_involution(gen(G::X)) == gen(G::Y));
    CHECK(alg.anti_involution(gen(G::E)) == -gen(G::F));
    CHECK(alg.anti_involution(gen(G::H)) == gen(G::H));
    for (int k = 0; k < 25; ++k) {
      const auto a = random_element(rng), b = random_element(rng);
      CHECK(alg.anti_involution(alg.anti_involution(a)) == a);
      CHECK(alg.anti_involution(alg.multiply(a, b)) ==
            alg.multiply(alg.anti_involution(b), alg.anti_involution(a)));
      const auto ia = alg.anti_involution(a);
      for (const auto &[m, c] : ia.terms()) {
        bool found = false;
        for (const auto &[m2, c2] : a.terms()) found = found || m2.weight() == -m.weight();
        CHECK(found);
      }
    }
  }
}

TEST_CASE("random elements are deterministic per seed") {
  std::mt19937_64 a(42), b(42);
  CHECK(random_element(a) == random_element(b));
}
