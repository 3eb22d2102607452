#include "hf/characters.hpp"

#include <fmt/format.h>

#include "hf/errors.hpp"

namespace hf {

namespace {

Rational nat(long n) { return Rational(n); }

/// Natural number n with a - b = n, or IncompatibleWindows.
unsigned natural_gap(const Rational &a, const Rational &b) {
  const Rational d = a - b;
  if (!d.is_natural())
    throw IncompatibleWindows(fmt::format("window edges {} and {} are not an integer step apart", a.str(), b.str()));
  return static_cast<unsigned>(*d.to_long());
}

} // namespace

Character Character::epsilon(const Rational &mu, long value) {
  Character c;
  c.add(mu, value);
  return c;
}

Character Character::windowed(Window w) {
  Character c;
  c.window_ = std::move(w);
  return c;
}

bool Character::is_exact_at(const Rational &mu) const { return !window_ || mu >= window_->bottom(); }

long Character::operator()(const Rational &mu) const {
  if (!is_exact_at(mu))
    throw OutOfRange(fmt::format("weight {} is below the window bottom {}", mu.str(), window_->bottom().str()));
  auto it = values_.find(mu);
  return it == values_.end() ? 0 : it->second;
}

void Character::add(const Rational &mu, long value) {
  if (value == 0 || !is_exact_at(mu)) return;
  auto [it, inserted] = values_.try_emplace(mu, value);
  if (!inserted) {
    it->second += value;
    if (it->second == 0) values_.erase(it);
  }
}

std::optional<Rational> Character::max_weight() const {
  if (values_.empty()) return std::nullopt;
  return values_.rbegin()->first;
}

long Character::total() const {
  long sum = 0;
  for (const auto &[mu, v] : values_) sum += v;
  return sum;
}

void Character::combine(const Character &o, long sign) {
  if (window_ && o.window_) {
    if (window_->bottom() != o.window_->bottom())
      throw IncompatibleWindows(fmt::format("windows end at {} and {}", window_->bottom().str(),
                                            o.window_->bottom().str()));
    if (o.window_->top > window_->top) window_ = o.window_;
  } else if (o.window_) {
    Window w = *o.window_;
    if (auto m = max_weight(); m && *m > w.top) w = {*m, natural_gap(*m, w.bottom())};
    window_ = w;
    for (auto it = values_.begin(); it != values_.end();)
      it = it->first < w.bottom() ? values_.erase(it) : std::next(it);
  } else if (window_) {
    if (auto m = o.max_weight(); m && *m > window_->top) window_ = Window{*m, natural_gap(*m, window_->bottom())};
  }
  for (const auto &[mu, v] : o.values_) add(mu, sign * v);
}

Character &Character::operator+=(const Character &o) {
  combine(o, 1);
  return *this;
}

Character &Character::operator-=(const Character &o) {
  combine(o, -1);
  return *this;
}

Character operator*(long s, Character a) {
  if (s == 0) a.values_.clear();
  for (auto &[mu, v] : a.values_) v *= s;
  return a;
}

std::string to_string(const Character &c) {
  std::string out;
  for (auto it = c.support().rbegin(); it != c.support().rend(); ++it)
    out += fmt::format("{}{}:{}", out.empty() ? "" : ", ", it->first.str(), it->second);
  if (out.empty()) out = "0";
  if (c.window()) out += fmt::format(" (exact down to {})", c.window()->bottom().str());
  return out;
}

long kostant_p(const Rational &x) {
  if (!x.is_integer() || x.sign() > 0) return 0;
  const long n = -*x.to_long();
  return 1 + n / 2;
}

Character verma_character(const Rational &r, unsigned cutoff_depth) {
  Character c = Character::windowed({r, cutoff_depth});
  for (unsigned n = 0; n <= cutoff_depth; ++n) c.add(r - nat(n), 1 + static_cast<long>(n / 2));
  return c;
}

Character kostant_character(unsigned cutoff_depth) { return verma_character(Rational(0), cutoff_depth); }

Character convolve(const Character &a, const Character &b) {
  if (!a.is_finite() && !b.is_finite())
    throw IncompatibleWindows("convolution needs at least one finite operand");
  if (!a.is_finite()) return convolve(b, a);
  if (b.is_finite()) {
    Character out;
    for (const auto &[mu, x] : a.support())
      for (const auto &[nu, y] : b.support()) out.add(mu + nu, x * y);
    return out;
  }
  const auto &w = *b.window();
  const auto top_a = a.max_weight();
  if (!top_a) return Character::windowed(w);
  Character out = Character::windowed({w.top + *top_a, w.depth});
  for (const auto &[mu, x] : a.support())
    for (const auto &[nu, y] : b.support()) out.add(mu + nu, x * y);
  return out;
}

Character omega(const Rational &a, const Rational &b) {
  Character c;
  c.add(a, 1);
  c.add(b, -1);
  c.add(-b, -1);
  c.add(-a, 1);
  return c;
}

Character weyl_q() { return omega(kDelta, kDeltaPrime); }

std::array<Rational, 4> OrbitData::orbit(const Rational &m, const Rational &n) {
  const Rational two(2);
  return {m + two * n, -m + two * n, m - two * n, -m - two * n};
}

OrbitData OrbitData::of(const Rational &r, const Rational &s) {
  OrbitData o;
  o.psi = {(r - s + Rational(1)) / Rational(2), (r + s + Rational(2)) / Rational(4)};
  o.images = orbit(o.psi.first, o.psi.second);
  return o;
}

Character orbit_character(const OrbitData &o) {
  Character c;
  for (std::size_t k = 0; k < 4; ++k) c.add(o.images[k], OrbitData::kSigns[k]);
  return c;
}

long kostant_multiplicity(unsigned r, unsigned s, const Rational &t) {
  const Rational rr = nat(r), ss = nat(s);
  return kostant_p(t - rr) - kostant_p(t - ss + Rational(1)) - kostant_p(t + ss + Rational(2)) +
         kostant_p(t + rr + Rational(3));
}

Character kostant_multiplicity_character(unsigned r, unsigned s) {
  Character c;
  for (long t = -static_cast<long>(r) - 3; t <= static_cast<long>(r) + 3; ++t)
    c.add(nat(t), kostant_multiplicity(r, s, nat(t)));
  return c;
}

Rational weyl_dimension(unsigned r, unsigned s) {
  return nat(r + s + 2) * (nat(r) - nat(s) + Rational(1)) / Rational(2);
}

Character synthetic_character(unsigned r, unsigned s) {
  Character c;
  for (unsigned i = s; i <= r; ++i)
    for (unsigned p = 0; p <= i; ++p) c.add(nat(i) - nat(2 * p), 1);
  return c;
}

namespace {

/// Highest weight where a and b differ, if any.
std::optional<Rational> first_difference(const Character &a, const Character &b) {
  Character d = a;
  d -= b;
  return d.max_weight();
}

} // namespace

WcfReport wcf_verify(unsigned r, unsigned s, unsigned cutoff_depth, const Character &ch) {
  WcfReport rep;
  rep.r = r;
  rep.s = s;
  rep.depth = cutoff_depth;
  if (!ch.is_finite()) throw IncompatibleWindows("the character of V(r, s) must be finite");
  const OrbitData orbit = OrbitData::of(nat(r), nat(s));

  rep.lhs = convolve(weyl_q(), ch);
  rep.rhs = omega(nat(r) + kDelta, nat(s) + kDeltaPrime);
  if (orbit_character(orbit) != rep.rhs)
    throw FormulaViolation("signed orbit does not reproduce omega(r + 3/2, s + 1/2)");
  if (auto mu = first_difference(rep.lhs, rep.rhs))
    throw FormulaViolation(fmt::format("q * ch differs from omega at weight {}: {} vs {}", mu->str(),
                                       rep.lhs(*mu), rep.rhs(*mu)));
  rep.weyl_ok = true;

  const Rational top = orbit.images[0];
  const Rational bottom = top - nat(cutoff_depth);
  rep.alt_lhs = convolve(Character::epsilon(kDelta), ch);
  rep.alt_rhs = Character::windowed({top, cutoff_depth});
  for (std::size_t k = 0; k < 4; ++k) {
    const Rational &lambda = orbit.images[k];
    if (lambda < bottom) continue;
    rep.alt_rhs += OrbitData::kSigns[k] * verma_character(lambda, natural_gap(lambda, bottom));
  }
  if (auto mu = first_difference(rep.alt_lhs, rep.alt_rhs))
    throw FormulaViolation(fmt::format("e(3/2) ch differs from the Verma sum at weight {}: {} vs {}",
                                       mu->str(), rep.alt_lhs(*mu), rep.alt_rhs(*mu)));
  rep.alternate_ok = true;
  return rep;
}

WcfReport wcf_verify(unsigned r, unsigned s, unsigned cutoff_depth) {
  return wcf_verify(r, s, cutoff_depth, synthetic_character(r, s));
}

} // namespace hf
