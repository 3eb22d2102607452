#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "hf/rational.hpp"
#include "hf/scalars.hpp"

namespace hf {

/// Generators in normal-form order F < Y < H < X < E.
enum class Generator : std::uint8_t { F = 0, Y = 1, H = 2, X = 3, E = 4 };

inline constexpr std::array<Generator, 5> kGenerators{Generator::F, Generator::Y, Generator::H,
                                                      Generator::X, Generator::E};

char to_char(Generator g);
Generator generator_from_char(char c);
/// ad-H eigenvalue: F -2, Y -1, H 0, X 1, E 2.
int weight(Generator g);

using Word = std::vector<Generator>;

/// Parses "E F^2 X Y" (whitespace-separated letters with optional ^k).
Word parse_word(std::string_view text);
std::string to_string(const Word &w);

/// F^a Y^b H^c X^d E^e, exponents indexed by Generator.
struct PbwMonomial {
  std::array<unsigned, 5> exp{};

  static PbwMonomial of(unsigned a, unsigned b, unsigned c, unsigned d, unsigned e) {
    return PbwMonomial{{a, b, c, d, e}};
  }
  static PbwMonomial generator(Generator g) {
    PbwMonomial m;
    m.exp[static_cast<std::size_t>(g)] = 1;
    return m;
  }

  unsigned operator[](Generator g) const { return exp[static_cast<std::size_t>(g)]; }
  unsigned degree() const { return exp[0] + exp[1] + exp[2] + exp[3] + exp[4]; }
  int weight() const {
    return -2 * static_cast<int>(exp[0]) - static_cast<int>(exp[1]) + static_cast<int>(exp[3]) +
           2 * static_cast<int>(exp[4]);
  }
  bool is_one() const { return degree() == 0; }
  /// The monomial spelled as a word in normal order.
  Word word() const;

  friend auto operator<=>(const PbwMonomial &, const PbwMonomial &) = default;
};

/// Finite linear combination of PBW monomials; zero coefficients are never stored.
class AlgebraElement {
public:
  using Terms = std::map<PbwMonomial, Rational>;

  AlgebraElement() = default;
  static AlgebraElement scalar(const Rational &c);
  static AlgebraElement monomial(const PbwMonomial &m, const Rational &c = Rational(1));
  static AlgebraElement generator(Generator g) { return monomial(PbwMonomial::generator(g)); }

  const Terms &terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Rational coefficient(const PbwMonomial &m) const;
  void add(const PbwMonomial &m, const Rational &c);
  /// Weights present in the support.
  std::vector<int> weights() const;

  AlgebraElement &operator+=(const AlgebraElement &o);
  AlgebraElement &operator-=(const AlgebraElement &o);
  AlgebraElement &operator*=(const Rational &s);
  AlgebraElement operator-() const;

  friend AlgebraElement operator+(AlgebraElement a, const AlgebraElement &b) { return a += b; }
  friend AlgebraElement operator-(AlgebraElement a, const AlgebraElement &b) { return a -= b; }
  friend AlgebraElement operator*(AlgebraElement a, const Rational &s) { return a *= s; }
  friend AlgebraElement operator*(const Rational &s, AlgebraElement a) { return a *= s; }
  friend bool operator==(const AlgebraElement &, const AlgebraElement &) = default;

private:
  Terms terms_;
};

/// "Y X - 1" style rendering, highest degree first.
std::string to_string(const AlgebraElement &a);

/// A linear combination of (not necessarily sorted) words.
using WordCombination = std::vector<std::pair<Word, Rational>>;

/// Directed rules u v -> rhs for every pair of generators with u > v.
class RewriteSystem {
public:
  /// The ten defining rules of H_f for the given normal form of g(Casimir).
  static RewriteSystem standard(const AlgebraElement &delta0);

  const WordCombination &rhs(Generator u, Generator v) const;
  void set_rule(Generator u, Generator v, WordCombination rhs);

private:
  std::array<std::array<WordCombination, 5>, 5> rules_;
};

/// Weighted degree of the termination order: E, F, H weigh 1, X and Y weigh deg(g) + 1.
unsigned weighted_degree(const Word &w, const Deformation &def);
/// Number of pairs i < j with w[i] > w[j].
unsigned inversions(const Word &w);

/// Rewriting engine for H_f.  Normal forms are computed by left-multiplying
/// generators onto normal monomials with memoisation.  An engine is cheap to
/// build; share one per thread.
class HfAlgebra {
public:
  explicit HfAlgebra(Deformation def);
  /// Engine with a caller-supplied rule table (used for negative controls).
  HfAlgebra(Deformation def, RewriteSystem rules);

  const Deformation &deformation() const { return def_; }
  const RewriteSystem &rules() const { return rules_; }
  /// Casimir (EF + FE + H^2/2) / 4 in normal form.
  const AlgebraElement &delta() const { return delta_; }
  /// 1 + f(Casimir) in normal form.
  const AlgebraElement &delta0() const { return delta0_; }

  AlgebraElement normalize(const Word &w) const;
  AlgebraElement normalize(const WordCombination &c) const;
  AlgebraElement multiply(const AlgebraElement &a, const AlgebraElement &b) const;
  /// Product g1 g2 ... gk acting on the left of `a`.
  AlgebraElement apply_word(const Word &w, const AlgebraElement &a) const;

  /// Anti-automorphism with X <-> Y, E -> -F, F -> -E, H -> H.
  AlgebraElement anti_involution(const AlgebraElement &a) const;

  /// Number of rule applications performed so far (memo hits are free).
  std::uint64_t steps() const { return steps_; }
  /// Abort with std::runtime_error after this many rule applications.
  void set_step_limit(std::uint64_t limit) { step_limit_ = limit; }
  void clear_cache() const { memo_.clear(); }

private:
  AlgebraElement left_multiply(Generator g, const PbwMonomial &m) const;
  AlgebraElement left_multiply(Generator g, const AlgebraElement &a) const;

  Deformation def_;
  RewriteSystem rules_;
  AlgebraElement delta_, delta0_;
  mutable std::map<std::pair<Generator, PbwMonomial>, AlgebraElement> memo_;
  mutable std::uint64_t steps_ = 0;
  std::uint64_t step_limit_ = 0;
};

AlgebraElement delta_normal_form();
AlgebraElement delta0_normal_form(const Deformation &def);
AlgebraElement normalize(const Word &word, const Deformation &def);
AlgebraElement multiply(const AlgebraElement &a, const AlgebraElement &b, const Deformation &def);
AlgebraElement anti_involution(const AlgebraElement &a, const Deformation &def);

struct OverlapResult {
  Word overlap;              // u v w with u > v > w
  AlgebraElement left;       // reduce (u v) first
  AlgebraElement right;      // reduce (v w) first
  bool resolved() const { return left == right; }
};

struct ConfluenceReport {
  std::vector<OverlapResult> overlaps;
  unsigned associativity_trials = 0;
  unsigned associativity_failures = 0;
  bool ok() const;
};

/// Random element: at most `max_terms` monomials of total degree <= `max_degree`
/// with small rational coefficients.
AlgebraElement random_element(std::mt19937_64 &rng, unsigned max_degree = 3, unsigned max_terms = 4);

/// Resolves every overlap u v w (u > v > w) and checks associativity on random
/// triples.  With `throw_on_failure` a ConfluenceFailure names the first
/// offending overlap and both normal forms.
ConfluenceReport confluence_report(const HfAlgebra &algebra, unsigned trials, std::uint64_t seed,
                                   bool throw_on_failure = true);
ConfluenceReport confluence_report(const Deformation &def, unsigned trials, std::uint64_t seed = 1);

/// Standard rules with a single rule replaced: the negative controls.
enum class Corruption { FlipDelta0InXY, FlipXInEY };
RewriteSystem corrupted_rules(const HfAlgebra &algebra, Corruption which);

} // namespace hf
