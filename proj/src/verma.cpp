#include "hf/verma.hpp"

#include <algorithm>
#include <cctype>

#include <fmt/format.h>

#include "hf/errors.hpp"

namespace hf {

using G = Generator;

namespace {

Rational nat(unsigned n) { return Rational(static_cast<long>(n)); }

} // namespace

VermaElement VermaElement::basis(const Rational &r, unsigned j, unsigned i, const Rational &c) {
  VermaElement v(r);
  v.add(j, i, c);
  return v;
}

Rational VermaElement::coefficient(unsigned j, unsigned i) const {
  auto it = terms_.find({j, i});
  return it == terms_.end() ? Rational(0) : it->second;
}

void VermaElement::add(unsigned j, unsigned i, const Rational &c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace({j, i}, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

std::optional<unsigned> VermaElement::depth() const {
  std::optional<unsigned> d;
  for (const auto &[k, c] : terms_) {
    const unsigned n = k.second + 2 * k.first;
    if (d && *d != n) return std::nullopt;
    d = n;
  }
  return d ? d : std::optional<unsigned>(0);
}

VermaElement VermaElement::shifted(unsigned a, unsigned b) const {
  VermaElement out(r_);
  for (const auto &[k, c] : terms_) out.terms_.emplace(Key{k.first + a, k.second + b}, c);
  return out;
}

VermaElement &VermaElement::operator+=(const VermaElement &o) {
  for (const auto &[k, c] : o.terms_) add(k.first, k.second, c);
  return *this;
}

VermaElement &VermaElement::operator-=(const VermaElement &o) {
  for (const auto &[k, c] : o.terms_) add(k.first, k.second, -c);
  return *this;
}

VermaElement operator*(const Rational &s, VermaElement a) {
  if (s.is_zero()) a.terms_.clear();
  for (auto &[k, c] : a.terms_) c *= s;
  return a;
}

std::string to_string(const VermaElement &v) {
  if (v.is_zero()) return "0";
  std::vector<std::pair<VermaElement::Key, Rational>> terms(v.terms().begin(), v.terms().end());
  std::sort(terms.begin(), terms.end(), [](const auto &a, const auto &b) {
    const unsigned da = a.first.second + 2 * a.first.first, db = b.first.second + 2 * b.first.first;
    if (da != db) return da > db;
    return a.first.second > b.first.second;
  });
  std::string out;
  for (const auto &[k, c] : terms) {
    std::string mono;
    if (k.first) mono += k.first > 1 ? fmt::format("F^{}", k.first) : "F";
    if (k.second) mono += (mono.empty() ? "" : " ") + (k.second > 1 ? fmt::format("Y^{}", k.second) : std::string("Y"));
    const Rational mag = abs(c);
    const std::string body = mono.empty() ? mag.str() : (mag == Rational(1) ? mono : mag.str() + " " + mono);
    if (out.empty()) out = (c.sign() < 0 ? "-" : "") + body;
    else out += (c.sign() < 0 ? " - " : " + ") + body;
  }
  return out;
}

VermaElement parse_verma_element(const Rational &r, std::string_view text) {
  VermaElement v(r);
  std::size_t pos = 0;
  auto skip = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  auto expect = [&](char ch) {
    skip();
    if (pos >= text.size() || text[pos] != ch)
      throw ParseError(fmt::format("expected '{}' at position {} in '{}'", ch, pos, text));
    ++pos;
  };
  auto number = [&] {
    skip();
    const std::size_t start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (start == pos) throw ParseError(fmt::format("expected exponent at position {} in '{}'", start, text));
    return static_cast<unsigned>(std::stoul(std::string(text.substr(start, pos - start))));
  };
  skip();
  if (pos == text.size()) return v;
  while (true) {
    expect('(');
    const unsigned j = number();
    expect(',');
    const unsigned i = number();
    expect(')');
    expect(':');
    skip();
    const std::size_t start = pos;
    while (pos < text.size() && text[pos] != ',') ++pos;
    v.add(j, i, Rational::parse(text.substr(start, pos - start)));
    if (pos == text.size()) break;
    ++pos;
  }
  return v;
}

WeightSpaceBasis weight_space(const Rational &r, unsigned n) {
  WeightSpaceBasis b{r, n, {}};
  for (unsigned j = 0; 2 * j <= n; ++j) b.basis.emplace_back(j, n - 2 * j);
  return b;
}

RationalVector coordinates(const VermaElement &v, const WeightSpaceBasis &basis) {
  RationalVector x = RationalVector::Constant(static_cast<Eigen::Index>(basis.size()), Rational(0));
  for (const auto &[k, c] : v.terms()) {
    if (k.second + 2 * k.first != basis.n)
      throw OutOfRange(fmt::format("term F^{} Y^{} is not in depth {}", k.first, k.second, basis.n));
    x(static_cast<Eigen::Index>(k.first)) = c;
  }
  return x;
}

VermaElement from_coordinates(const RationalVector &x, const WeightSpaceBasis &basis) {
  VermaElement v(basis.r);
  for (std::size_t k = 0; k < basis.size(); ++k)
    v.add(basis.basis[k].first, basis.basis[k].second, x(static_cast<Eigen::Index>(k)));
  return v;
}

VermaModule::VermaModule(Deformation def, Rational r) : def_(std::move(def)), r_(std::move(r)) {}

const HfAlgebra &VermaModule::algebra() const {
  if (!algebra_) algebra_ = std::make_unique<HfAlgebra>(def_);
  return *algebra_;
}

VermaElement VermaModule::act(Generator g, const VermaElement &v) const {
  VermaElement out(r_);
  for (const auto &[k, c] : v.terms()) {
    const auto image = algebra().apply_word({g}, AlgebraElement::monomial(PbwMonomial::of(k.first, k.second, 0, 0, 0)));
    for (const auto &[m, coeff] : image.terms()) {
      if (m[G::X] || m[G::E]) continue;
      out.add(m[G::F], m[G::Y], c * coeff * pow(r_, m[G::H]));
    }
  }
  return out;
}

VermaElement VermaModule::e_apply(const VermaElement &w) const {
  VermaElement out(r_);
  for (const auto &[k, c] : w.terms()) out += c * e_on_basis(k.first, k.second);
  return out;
}

// Delta w = 1/2 F (E w) + (h/4 + h^2/8) w on a vector of H-weight h.
VermaElement VermaModule::delta0_apply(const VermaElement &w, unsigned depth) const {
  const Rational h = r_ - nat(depth);
  const Rational diag = h / Rational(4) + h * h / Rational(8);
  auto delta = [&](const VermaElement &u) {
    return Rational(1, 2) * e_apply(u).shifted(1, 0) + diag * u;
  };
  const auto &coeffs = def_.g().coefficients();
  VermaElement acc(r_);
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = delta(acc) + (*it) * w;
  return acc;
}

const VermaElement &VermaModule::delta0_on_y_power(unsigned l) const {
  if (auto it = delta0_memo_.find(l); it != delta0_memo_.end()) return it->second;
  VermaElement value = delta0_apply(VermaElement::basis(r_, 0, l), l);
  return delta0_memo_.emplace(l, std::move(value)).first->second;
}

// X F^j Y^i v = -F^j sum_{l<i} Y^{i-l-1} Delta0 Y^l v - j F^{j-1} Y^{i+1} v
const VermaElement &VermaModule::x_on_basis(unsigned j, unsigned i) const {
  if (auto it = x_memo_.find({j, i}); it != x_memo_.end()) return it->second;
  VermaElement value(r_);
  for (unsigned l = 0; l < i; ++l) value -= delta0_on_y_power(l).shifted(j, i - l - 1);
  if (j) value.add(j - 1, i + 1, -nat(j));
  return x_memo_.emplace(VermaElement::Key{j, i}, std::move(value)).first->second;
}

// E F^j Y^i v = -F^j sum_{m<=i-2} (i-1-m) Y^{i-2-m} Delta0 Y^m v + j (r-i-j+1) F^{j-1} Y^i v
const VermaElement &VermaModule::e_on_basis(unsigned j, unsigned i) const {
  if (auto it = e_memo_.find({j, i}); it != e_memo_.end()) return it->second;
  VermaElement value(r_);
  for (unsigned m = 0; m + 2 <= i; ++m)
    value -= nat(i - 1 - m) * delta0_on_y_power(m).shifted(j, i - 2 - m);
  if (j) value.add(j - 1, i, nat(j) * (r_ - nat(i) - nat(j) + Rational(1)));
  return e_memo_.emplace(VermaElement::Key{j, i}, std::move(value)).first->second;
}

VermaElement VermaModule::act_direct(Generator g, const VermaElement &v) const {
  VermaElement out(r_);
  switch (g) {
  case G::F: return v.shifted(1, 0);
  case G::Y: return v.shifted(0, 1);
  case G::H:
    for (const auto &[k, c] : v.terms()) out.add(k.first, k.second, c * (r_ - nat(k.second + 2 * k.first)));
    return out;
  case G::X:
    for (const auto &[k, c] : v.terms()) out += c * x_on_basis(k.first, k.second);
    return out;
  case G::E: return e_apply(v);
  }
  return out;
}

VermaElement VermaModule::act_word(const Word &w, const VermaElement &v) const {
  VermaElement out = v;
  for (auto it = w.rbegin(); it != w.rend(); ++it) out = act_direct(*it, out);
  return out;
}

RationalMatrix VermaModule::action_matrix(Generator g, unsigned n) const {
  const auto src = weight_space(r_, n);
  const int target = static_cast<int>(n) - weight(g);
  if (target < 0) return RationalMatrix::Constant(0, static_cast<Eigen::Index>(src.size()), Rational(0));
  const auto dst = weight_space(r_, static_cast<unsigned>(target));
  RationalMatrix m = RationalMatrix::Constant(static_cast<Eigen::Index>(dst.size()),
                                              static_cast<Eigen::Index>(src.size()), Rational(0));
  for (std::size_t col = 0; col < src.size(); ++col) {
    const auto [j, i] = src.basis[col];
    m.col(static_cast<Eigen::Index>(col)) = coordinates(act_direct(g, VermaElement::basis(r_, j, i)), dst);
  }
  return m;
}

std::vector<VermaElement> VermaModule::kernel(KernelKind which, unsigned n) const {
  RationalMatrix m;
  if (which == KernelKind::X) {
    m = action_matrix(G::X, n);
  } else if (which == KernelKind::E) {
    m = action_matrix(G::E, n);
  } else {
    const RationalMatrix mx = action_matrix(G::X, n), me = action_matrix(G::E, n);
    m.resize(mx.rows() + me.rows(), mx.cols());
    m << mx, me;
  }
  const RationalMatrix ns = null_space(m);
  const auto basis = weight_space(r_, n);
  std::vector<VermaElement> out;
  for (Eigen::Index k = 0; k < ns.cols(); ++k) out.push_back(from_coordinates(ns.col(k), basis));
  return out;
}

VermaElement VermaModule::vt_vector(const Rational &t) const {
  const Rational diff = r_ - t;
  if (!diff.is_natural())
    throw OutOfRange(fmt::format("t = {} is not in r - N0 for r = {}", t.str(), r_.str()));
  if (r_.is_natural() && t < Rational(-1))
    throw OutOfRange(fmt::format("t = {} < -1 with r = {} in N0", t.str(), r_.str()));
  const unsigned m = static_cast<unsigned>(*diff.to_long());
  VermaElement prev2 = VermaElement::highest(r_);
  if (m == 0) return prev2;
  VermaElement prev1 = prev2.shifted(0, 1);
  for (unsigned k = 2; k <= m; ++k) {
    VermaElement next = prev1.shifted(0, 1) + d_coeff(def_, r_, k) * prev2.shifted(1, 0);
    prev2 = std::move(prev1);
    prev1 = std::move(next);
  }
  return prev1;
}

std::vector<std::pair<Rational, VermaElement>> VermaModule::find_maximal_weights() const {
  std::vector<std::pair<Rational, VermaElement>> out;
  for (const Integer &m : alpha_integer_roots_in_m(def_, r_)) {
    if (m < 2) continue;
    const unsigned n = static_cast<unsigned>(m.get_ui()) - 1;
    auto ker = kernel(KernelKind::Both, n);
    if (ker.empty()) continue;
    out.emplace_back(r_ - nat(n), std::move(ker.front()));
  }
  return out;
}

VermaElement act(Generator g, const VermaElement &v, const Deformation &def) {
  return VermaModule(def, v.highest_weight()).act(g, v);
}

VermaElement act_direct(Generator g, const VermaElement &v, const Deformation &def) {
  return VermaModule(def, v.highest_weight()).act_direct(g, v);
}

std::vector<VermaElement> kernel(KernelKind which, const Rational &r, unsigned n, const Deformation &def) {
  return VermaModule(def, r).kernel(which, n);
}

VermaElement vt_vector(const Rational &r, const Rational &t, const Deformation &def) {
  return VermaModule(def, r).vt_vector(t);
}

std::vector<std::pair<Rational, VermaElement>> find_maximal_weights(const Rational &r, const Deformation &def) {
  return VermaModule(def, r).find_maximal_weights();
}

} // namespace hf
