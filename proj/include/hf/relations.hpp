#pragma once

#include <array>
#include <string>
#include <utility>
#include <vector>

#include "hf/pbw.hpp"
#include "hf/rational.hpp"

namespace hf {

/// One defining relation [u, v] = rhs, named "[u,v]".
struct Relation {
  Generator u, v;
  std::string name() const { return std::string("[") + to_char(u) + "," + to_char(v) + "]"; }
};

/// The ten defining commutator relations, one per unordered pair of generators.
inline const std::array<Relation, 10> &defining_relations() {
  using G = Generator;
  static const std::array<Relation, 10> rels{{{G::E, G::F}, {G::H, G::E}, {G::H, G::F},
                                              {G::E, G::X}, {G::F, G::Y}, {G::E, G::Y},
                                              {G::F, G::X}, {G::H, G::X}, {G::H, G::Y},
                                              {G::Y, G::X}}};
  return rels;
}

/// Images of E, F, H, X, Y in some associative algebra T (matrices, Weyl
/// algebra elements, ...).  T needs +, -, *, scalar * T and a unit.
template <typename T>
struct GeneratorImages {
  std::array<T, 5> image; // indexed by Generator
  T one;

  const T &operator[](Generator g) const { return image[static_cast<std::size_t>(g)]; }

  /// (EF + FE + H^2/2) / 4
  T casimir() const {
    using G = Generator;
    const T &e = (*this)[G::E], &f = (*this)[G::F], &h = (*this)[G::H];
    return Rational(1, 4) * (e * f + f * e) + Rational(1, 8) * (h * h);
  }

  /// g(casimir) by Horner's rule.
  T deformed_casimir(const Polynomial &g) const {
    const T c = casimir();
    T acc = Rational(0) * one;
    const auto &coeffs = g.coefficients();
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = T(acc * c) + (*it) * one;
    return acc;
  }
};

/// Residual uv - vu - rhs for each defining relation.
template <typename T>
std::vector<std::pair<Relation, T>> relation_residuals(const GeneratorImages<T> &img,
                                                       const Polynomial &g) {
  using G = Generator;
  std::vector<std::pair<Relation, T>> out;
  for (const Relation &rel : defining_relations()) {
    const T &a = img[rel.u], &b = img[rel.v];
    T rhs = Rational(0) * img.one;
    if (rel.u == G::E && rel.v == G::F) rhs = img[G::H];
    else if (rel.u == G::H && rel.v == G::E) rhs = Rational(2) * img[G::E];
    else if (rel.u == G::H && rel.v == G::F) rhs = Rational(-2) * img[G::F];
    else if (rel.u == G::E && rel.v == G::Y) rhs = img[G::X];
    else if (rel.u == G::F && rel.v == G::X) rhs = img[G::Y];
    else if (rel.u == G::H && rel.v == G::X) rhs = img[G::X];
    else if (rel.u == G::H && rel.v == G::Y) rhs = Rational(-1) * img[G::Y];
    else if (rel.u == G::Y && rel.v == G::X) rhs = img.deformed_casimir(g);
    out.emplace_back(rel, T(T(a * b) - T(b * a)) - rhs);
  }
  return out;
}

} // namespace hf
