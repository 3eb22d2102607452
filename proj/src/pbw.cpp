#include "hf/pbw.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <stdexcept>

#include <fmt/format.h>

#include "hf/errors.hpp"

namespace hf {

char to_char(Generator g) { return "FYHXE"[static_cast<std::size_t>(g)]; }

Generator generator_from_char(char c) {
  switch (c) {
  case 'F': return Generator::F;
  case 'Y': return Generator::Y;
  case 'H': return Generator::H;
  case 'X': return Generator::X;
  case 'E': return Generator::E;
  default: throw ParseError(fmt::format("unknown generator '{}'", c));
  }
}

int weight(Generator g) {
  static constexpr std::array<int, 5> w{-2, -1, 0, 1, 2};
  return w[static_cast<std::size_t>(g)];
}

Word parse_word(std::string_view text) {
  Word out;
  std::size_t i = 0;
  while (i < text.size()) {
    if (std::isspace(static_cast<unsigned char>(text[i]))) {
      ++i;
      continue;
    }
    const Generator g = generator_from_char(text[i++]);
    unsigned power = 1;
    if (i < text.size() && text[i] == '^') {
      ++i;
      const std::size_t start = i;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
      if (start == i) throw ParseError("missing exponent after '^' in word");
      power = static_cast<unsigned>(std::stoul(std::string(text.substr(start, i - start))));
    }
    out.insert(out.end(), power, g);
  }
  return out;
}

std::string to_string(const Word &w) {
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) out += ' ';
    out += to_char(w[i]);
  }
  return out;
}

Word PbwMonomial::word() const {
  Word w;
  for (Generator g : kGenerators) w.insert(w.end(), (*this)[g], g);
  return w;
}

AlgebraElement AlgebraElement::scalar(const Rational &c) { return monomial(PbwMonomial{}, c); }

AlgebraElement AlgebraElement::monomial(const PbwMonomial &m, const Rational &c) {
  AlgebraElement out;
  out.add(m, c);
  return out;
}

Rational AlgebraElement::coefficient(const PbwMonomial &m) const {
  const auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

void AlgebraElement::add(const PbwMonomial &m, const Rational &c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

std::vector<int> AlgebraElement::weights() const {
  std::set<int> w;
  for (const auto &[m, c] : terms_) w.insert(m.weight());
  return {w.begin(), w.end()};
}

AlgebraElement &AlgebraElement::operator+=(const AlgebraElement &o) {
  for (const auto &[m, c] : o.terms_) add(m, c);
  return *this;
}

AlgebraElement &AlgebraElement::operator-=(const AlgebraElement &o) {
  for (const auto &[m, c] : o.terms_) add(m, -c);
  return *this;
}

AlgebraElement &AlgebraElement::operator*=(const Rational &s) {
  if (s.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto &[m, c] : terms_) c *= s;
  return *this;
}

AlgebraElement AlgebraElement::operator-() const {
  AlgebraElement out = *this;
  return out *= Rational(-1);
}

std::string to_string(const AlgebraElement &a) {
  if (a.is_zero()) return "0";
  std::vector<std::pair<PbwMonomial, Rational>> terms(a.terms().begin(), a.terms().end());
  std::sort(terms.begin(), terms.end(), [](const auto &x, const auto &y) {
    if (x.first.degree() != y.first.degree()) return x.first.degree() > y.first.degree();
    return x.first > y.first;
  });
  std::string out;
  bool first = true;
  for (const auto &[m, c] : terms) {
    std::string mono;
    for (Generator g : kGenerators) {
      const unsigned e = m[g];
      if (!e) continue;
      if (!mono.empty()) mono += ' ';
      mono += to_char(g);
      if (e > 1) mono += fmt::format("^{}", e);
    }
    const Rational mag = abs(c);
    std::string body;
    if (mono.empty()) body = mag.str();
    else if (mag == Rational(1)) body = mono;
    else body = mag.str() + " " + mono;
    if (first) out += (c.sign() < 0 ? "-" : "") + body;
    else out += (c.sign() < 0 ? " - " : " + ") + body;
    first = false;
  }
  return out;
}

// ---------------------------------------------------------------------------

namespace {

using G = Generator;

WordCombination words_of(const AlgebraElement &a, const Rational &scale) {
  WordCombination out;
  for (const auto &[m, c] : a.terms()) out.emplace_back(m.word(), c * scale);
  return out;
}

} // namespace

RewriteSystem RewriteSystem::standard(const AlgebraElement &delta0) {
  RewriteSystem s;
  s.set_rule(G::Y, G::F, {{{G::F, G::Y}, 1}});
  s.set_rule(G::H, G::F, {{{G::F, G::H}, 1}, {{G::F}, -2}});
  s.set_rule(G::H, G::Y, {{{G::Y, G::H}, 1}, {{G::Y}, -1}});
  s.set_rule(G::X, G::F, {{{G::F, G::X}, 1}, {{G::Y}, -1}});
  s.set_rule(G::X, G::H, {{{G::H, G::X}, 1}, {{G::X}, -1}});
  WordCombination xy{{{G::Y, G::X}, 1}};
  for (auto &term : words_of(delta0, Rational(-1))) xy.push_back(std::move(term));
  s.set_rule(G::X, G::Y, std::move(xy));
  s.set_rule(G::E, G::F, {{{G::F, G::E}, 1}, {{G::H}, 1}});
  s.set_rule(G::E, G::Y, {{{G::Y, G::E}, 1}, {{G::X}, 1}});
  s.set_rule(G::E, G::H, {{{G::H, G::E}, 1}, {{G::E}, -2}});
  s.set_rule(G::E, G::X, {{{G::X, G::E}, 1}});
  return s;
}

const WordCombination &RewriteSystem::rhs(Generator u, Generator v) const {
  return rules_[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)];
}

void RewriteSystem::set_rule(Generator u, Generator v, WordCombination rhs) {
  if (u <= v) throw std::invalid_argument("rewrite rules are only defined for u > v");
  rules_[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)] = std::move(rhs);
}

unsigned weighted_degree(const Word &w, const Deformation &def) {
  unsigned total = 0;
  for (Generator g : w) total += (g == G::X || g == G::Y) ? def.degree() + 1 : 1;
  return total;
}

unsigned inversions(const Word &w) {
  unsigned n = 0;
  for (std::size_t i = 0; i < w.size(); ++i)
    for (std::size_t j = i + 1; j < w.size(); ++j)
      if (w[i] > w[j]) ++n;
  return n;
}

// ---------------------------------------------------------------------------

HfAlgebra::HfAlgebra(Deformation def)
    : HfAlgebra(def, RewriteSystem::standard(AlgebraElement{})) {
  rules_ = RewriteSystem::standard(delta0_);
  memo_.clear();
}

HfAlgebra::HfAlgebra(Deformation def, RewriteSystem rules)
    : def_(std::move(def)), rules_(std::move(rules)) {
  // The Casimir only involves E, F, H, so the X/Y rules are not consulted here.
  delta_ = normalize(WordCombination{{{G::E, G::F}, Rational(1, 4)},
                                     {{G::F, G::E}, Rational(1, 4)},
                                     {{G::H, G::H}, Rational(1, 8)}});
  const auto &g = def_.g().coefficients();
  AlgebraElement acc;
  for (auto it = g.rbegin(); it != g.rend(); ++it)
    acc = multiply(acc, delta_) + AlgebraElement::scalar(*it);
  delta0_ = std::move(acc);
}

AlgebraElement HfAlgebra::left_multiply(Generator g, const PbwMonomial &m) const {
  Generator lowest = G::E;
  bool found = false;
  for (Generator h : kGenerators)
    if (m[h]) {
      lowest = h;
      found = true;
      break;
    }
  if (!found || g <= lowest) {
    PbwMonomial out = m;
    ++out.exp[static_cast<std::size_t>(g)];
    return AlgebraElement::monomial(out);
  }
  const auto key = std::make_pair(g, m);
  if (const auto it = memo_.find(key); it != memo_.end()) return it->second;

  if (step_limit_ && steps_ >= step_limit_)
    throw std::runtime_error("rewrite step limit exhausted");
  ++steps_;
  PbwMonomial rest = m;
  --rest.exp[static_cast<std::size_t>(lowest)];
  const AlgebraElement tail = AlgebraElement::monomial(rest);
  AlgebraElement result;
  for (const auto &[w, c] : rules_.rhs(g, lowest)) result += apply_word(w, tail) * c;
  memo_.emplace(key, result);
  return result;
}

AlgebraElement HfAlgebra::left_multiply(Generator g, const AlgebraElement &a) const {
  AlgebraElement out;
  for (const auto &[m, c] : a.terms()) out += left_multiply(g, m) * c;
  return out;
}

AlgebraElement HfAlgebra::apply_word(const Word &w, const AlgebraElement &a) const {
  AlgebraElement out = a;
  for (auto it = w.rbegin(); it != w.rend(); ++it) out = left_multiply(*it, out);
  return out;
}

AlgebraElement HfAlgebra::normalize(const Word &w) const {
  return apply_word(w, AlgebraElement::scalar(1));
}

AlgebraElement HfAlgebra::normalize(const WordCombination &c) const {
  AlgebraElement out;
  for (const auto &[w, coeff] : c) out += normalize(w) * coeff;
  return out;
}

AlgebraElement HfAlgebra::multiply(const AlgebraElement &a, const AlgebraElement &b) const {
  AlgebraElement out;
  if (b.is_zero()) return out;
  for (const auto &[m, c] : a.terms()) out += apply_word(m.word(), b) * c;
  return out;
}

AlgebraElement HfAlgebra::anti_involution(const AlgebraElement &a) const {
  AlgebraElement out;
  for (const auto &[m, c] : a.terms()) {
    // i(F^a Y^b H^c X^d E^e) = i(E)^e i(X)^d i(H)^c i(Y)^b i(F)^a
    Word w;
    w.insert(w.end(), m[G::E], G::F);
    w.insert(w.end(), m[G::X], G::Y);
    w.insert(w.end(), m[G::H], G::H);
    w.insert(w.end(), m[G::Y], G::X);
    w.insert(w.end(), m[G::F], G::E);
    const bool negative = (m[G::E] + m[G::F]) % 2 == 1;
    out += normalize(w) * (negative ? -c : c);
  }
  return out;
}

AlgebraElement delta_normal_form() { return HfAlgebra(Deformation::from_f({})).delta(); }

AlgebraElement delta0_normal_form(const Deformation &def) { return HfAlgebra(def).delta0(); }

AlgebraElement normalize(const Word &word, const Deformation &def) {
  return HfAlgebra(def).normalize(word);
}

AlgebraElement multiply(const AlgebraElement &a, const AlgebraElement &b, const Deformation &def) {
  return HfAlgebra(def).multiply(a, b);
}

AlgebraElement anti_involution(const AlgebraElement &a, const Deformation &def) {
  return HfAlgebra(def).anti_involution(a);
}

// ---------------------------------------------------------------------------

bool ConfluenceReport::ok() const {
  return associativity_failures == 0 &&
         std::all_of(overlaps.begin(), overlaps.end(), [](const auto &o) { return o.resolved(); });
}

AlgebraElement random_element(std::mt19937_64 &rng, unsigned max_degree, unsigned max_terms) {
  std::uniform_int_distribution<unsigned> n_terms(1, max_terms), gen(0, 4), deg(0, max_degree);
  std::uniform_int_distribution<long> num(-5, 5), den(1, 4);
  AlgebraElement out;
  const unsigned n = n_terms(rng);
  for (unsigned t = 0; t < n; ++t) {
    PbwMonomial m;
    const unsigned d = deg(rng);
    for (unsigned k = 0; k < d; ++k) ++m.exp[gen(rng)];
    long p = num(rng);
    if (p == 0) p = 1;
    out.add(m, Rational(p, den(rng)));
  }
  return out;
}

ConfluenceReport confluence_report(const HfAlgebra &algebra, unsigned trials, std::uint64_t seed,
                                   bool throw_on_failure) {
  ConfluenceReport report;
  const auto &rules = algebra.rules();
  for (Generator u : kGenerators)
    for (Generator v : kGenerators)
      for (Generator w : kGenerators) {
        if (!(u > v && v > w)) continue;
        WordCombination left, right;
        for (const auto &[word, c] : rules.rhs(u, v)) {
          Word x = word;
          x.push_back(w);
          left.emplace_back(std::move(x), c);
        }
        for (const auto &[word, c] : rules.rhs(v, w)) {
          Word x{u};
          x.insert(x.end(), word.begin(), word.end());
          right.emplace_back(std::move(x), c);
        }
        OverlapResult res{{u, v, w}, algebra.normalize(left), algebra.normalize(right)};
        if (throw_on_failure && !res.resolved())
          throw ConfluenceFailure(fmt::format("overlap {}: {} != {}", to_string(res.overlap),
                                              to_string(res.left), to_string(res.right)));
        report.overlaps.push_back(std::move(res));
      }

  std::mt19937_64 rng(seed);
  for (unsigned t = 0; t < trials; ++t) {
    const AlgebraElement a = random_element(rng), b = random_element(rng), c = random_element(rng);
    const AlgebraElement lhs = algebra.multiply(algebra.multiply(a, b), c);
    const AlgebraElement rhs = algebra.multiply(a, algebra.multiply(b, c));
    ++report.associativity_trials;
    if (lhs != rhs) {
      ++report.associativity_failures;
      if (throw_on_failure)
        throw ConfluenceFailure(fmt::format("associativity fails for a = {}, b = {}, c = {}",
                                            to_string(a), to_string(b), to_string(c)));
    }
  }
  return report;
}

ConfluenceReport confluence_report(const Deformation &def, unsigned trials, std::uint64_t seed) {
  return confluence_report(HfAlgebra(def), trials, seed, true);
}

RewriteSystem corrupted_rules(const HfAlgebra &algebra, Corruption which) {
  RewriteSystem rules = algebra.rules();
  switch (which) {
  case Corruption::FlipDelta0InXY: {
    WordCombination xy{{{G::Y, G::X}, 1}};
    for (const auto &[m, c] : algebra.delta0().terms()) xy.emplace_back(m.word(), c);
    rules.set_rule(G::X, G::Y, std::move(xy));
    break;
  }
  case Corruption::FlipXInEY:
    rules.set_rule(G::E, G::Y, {{{G::Y, G::E}, 1}, {{G::X}, -1}});
    break;
  }
  return rules;
}

} // namespace hf
