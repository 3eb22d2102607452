#include "hf/weyl.hpp"

#include <fmt/format.h>

#include "hf/errors.hpp"

namespace hf {

WeylAlgebraElement WeylAlgebraElement::term(unsigned a, unsigned b, const Rational &c) {
  WeylAlgebraElement out;
  out.add(a, b, c);
  return out;
}

void WeylAlgebraElement::add(unsigned a, unsigned b, const Rational &c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace({a, b}, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

bool WeylAlgebraElement::is_scalar(Rational *value) const {
  if (terms_.empty()) {
    if (value) *value = Rational(0);
    return true;
  }
  if (terms_.size() == 1 && terms_.begin()->first == Key{0, 0}) {
    if (value) *value = terms_.begin()->second;
    return true;
  }
  return false;
}

WeylAlgebraElement &WeylAlgebraElement::operator+=(const WeylAlgebraElement &o) {
  for (const auto &[k, c] : o.terms_) add(k.first, k.second, c);
  return *this;
}

WeylAlgebraElement &WeylAlgebraElement::operator-=(const WeylAlgebraElement &o) {
  for (const auto &[k, c] : o.terms_) add(k.first, k.second, -c);
  return *this;
}

WeylAlgebraElement operator*(const Rational &s, WeylAlgebraElement a) {
  if (s.is_zero()) return {};
  for (auto &[k, c] : a.terms_) c *= s;
  return a;
}

namespace {

// y * (x^a y^b) = x^a y^{b+1} + a x^{a-1} y^b, i.e. the rule y x -> x y + 1
// pushed through x^a.
WeylAlgebraElement y_times(const WeylAlgebraElement &v) {
  WeylAlgebraElement out;
  for (const auto &[k, c] : v.terms()) {
    out.add(k.first, k.second + 1, c);
    if (k.first) out.add(k.first - 1, k.second, c * Rational(static_cast<long>(k.first)));
  }
  return out;
}

} // namespace

WeylAlgebraElement operator*(const WeylAlgebraElement &a, const WeylAlgebraElement &b) {
  WeylAlgebraElement out;
  for (const auto &[ka, ca] : a.terms_) {
    WeylAlgebraElement acc = b;
    for (unsigned i = 0; i < ka.second; ++i) acc = y_times(acc);
    for (const auto &[k, c] : acc.terms_) out.add(k.first + ka.first, k.second, c * ca);
  }
  return out;
}

std::string to_string(const WeylAlgebraElement &w) {
  if (w.is_zero()) return "0";
  std::string out;
  for (auto it = w.terms().rbegin(); it != w.terms().rend(); ++it) {
    const auto &[k, c] = *it;
    std::string mono;
    if (k.first) mono += k.first > 1 ? fmt::format("x^{}", k.first) : "x";
    if (k.second) mono += (mono.empty() ? "" : " ") + (k.second > 1 ? fmt::format("y^{}", k.second) : std::string("y"));
    const std::string body = mono.empty() ? abs(c).str() : (abs(c) == Rational(1) ? mono : abs(c).str() + " " + mono);
    if (out.empty()) out = (c.sign() < 0 ? "-" : "") + body;
    else out += (c.sign() < 0 ? " - " : " + ") + body;
  }
  return out;
}

bool WeilReport::ok() const {
  for (const auto &[name, zero] : relations)
    if (!zero) return false;
  return casimir_is_scalar && casimir_image == Rational(-3, 32);
}

GeneratorImages<WeylAlgebraElement> weil_images() {
  using W = WeylAlgebraElement;
  GeneratorImages<W> img;
  img.one = W::scalar(1);
  img.image[static_cast<std::size_t>(Generator::X)] = W::x();
  img.image[static_cast<std::size_t>(Generator::Y)] = W::y();
  img.image[static_cast<std::size_t>(Generator::H)] = W::term(1, 1) + W::scalar(Rational(1, 2));
  img.image[static_cast<std::size_t>(Generator::E)] = W::term(2, 0, Rational(-1, 2));
  img.image[static_cast<std::size_t>(Generator::F)] = W::term(0, 2, Rational(1, 2));
  return img;
}

WeilReport weil_check() {
  const auto img = weil_images();
  WeilReport report;
  for (const auto &[rel, residual] : relation_residuals(img, Polynomial::constant(1))) {
    report.relations.emplace_back(rel.name(), residual.is_zero());
    if (!residual.is_zero())
      throw RelationViolation(fmt::format("{} maps to {} instead of 0", rel.name(), to_string(residual)));
  }
  report.casimir_is_scalar = img.casimir().is_scalar(&report.casimir_image);
  if (!report.ok())
    throw RelationViolation(fmt::format("Casimir maps to {} instead of -3/32", to_string(img.casimir())));
  return report;
}

} // namespace hf
