#include "hf/structure.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>

#include <fmt/format.h>

#include "hf/errors.hpp"

namespace hf {

using G = Generator;

namespace {

Rational nat(long n) { return Rational(n); }

std::size_t gen_index(G g) { return static_cast<std::size_t>(g); }

std::vector<Integer> nonnegative_roots(const Polynomial &p) {
  std::vector<Integer> out;
  for (const Integer &x : integer_roots(p))
    if (x >= 0) out.push_back(x);
  return out;
}

std::vector<Factor> aggregate(const std::vector<Rational> &sequence) {
  std::map<Rational, unsigned, std::greater<>> counts;
  for (const auto &t : sequence) ++counts[t];
  std::vector<Factor> out;
  for (const auto &[t, n] : counts) out.push_back({t, n});
  return out;
}

} // namespace

bool is_zero(const RationalMatrix &m) {
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j)
      if (!m(i, j).is_zero()) return false;
  return true;
}

unsigned StructureReport::multiplicity(const Rational &t) const {
  for (const auto &f : factors)
    if (f.weight == t) return f.mult;
  return 0;
}

StructureReport composition_series(const Rational &r, const Deformation &def) {
  StructureReport rep;
  rep.r = r;
  VermaModule z(def, r);

  if (!r.is_natural()) {
    rep.roots.push_back(r);
    for (auto &[t, v] : z.find_maximal_weights()) rep.roots.push_back(t);
    rep.sequence = rep.roots;
    for (const auto &t : rep.roots) rep.lattice.push_back(fmt::format("Z({})", t.str()));
    rep.factors = aggregate(rep.sequence);
    return rep;
  }

  const long rl = *r.to_long();
  rep.roots.push_back(r);
  for (const Integer &m : alpha_integer_roots_in_m(def, r)) {
    if (m < 2 || m > rl + 2) continue;
    const unsigned n = static_cast<unsigned>(m.get_ui()) - 1;
    if (!z.kernel(KernelKind::Both, n).empty()) rep.roots.push_back(r - nat(n));
  }
  const std::size_t k = rep.roots.size() - 1;
  for (std::size_t i = 0; i < k; ++i) {
    rep.sequence.push_back(rep.roots[i]);
    rep.sequence.push_back(-rep.roots[i + 1] - Rational(3));
  }
  for (std::size_t i = 0; i <= k; ++i)
    for (std::size_t j = i; j <= k; ++j)
      rep.lattice.push_back(fmt::format("Y({},{})", rep.roots[j].str(), rep.roots[i].str()));

  const Rational tk = rep.roots[k];
  if (tk == Rational(-1)) {
    const auto sub = composition_series(tk, def);
    rep.sequence.insert(rep.sequence.end(), sub.sequence.begin(), sub.sequence.end());
    for (std::size_t i = 1; i < sub.lattice.size(); ++i) rep.lattice.push_back(sub.lattice[i]);
  } else {
    rep.sequence.push_back(tk);
    VermaModule ztk(def, tk);
    const long tkl = *tk.to_long();
    for (const Integer &m : alpha_integer_roots_in_m(def, tk)) {
      if (m <= tkl + 2) continue;
      const unsigned n = static_cast<unsigned>(m.get_ui()) - 1;
      if (ztk.kernel(KernelKind::Both, n).empty()) continue;
      rep.tail = tk - nat(n);
      break;
    }
    if (rep.tail) {
      const auto sub = composition_series(*rep.tail, def);
      rep.sequence.insert(rep.sequence.end(), sub.sequence.begin(), sub.sequence.end());
      rep.lattice.insert(rep.lattice.end(), sub.lattice.begin(), sub.lattice.end());
    }
  }
  rep.factors = aggregate(rep.sequence);
  return rep;
}

Block block(const Rational &r, const Deformation &def) {
  const BiPolynomial a = alpha_bipoly(def);
  const Polynomial T = Polynomial::variable(), one = Polynomial::constant(1);
  Block b;
  b.representative = r;
  const auto up = nonnegative_roots(a.substitute(Polynomial::constant(r) + T, T + one));
  const Integer dstar = up.empty() ? Integer(0) : up.back();
  b.r0 = r + Rational(dstar);
  b.members.push_back(b.r0);
  for (const Integer &n : nonnegative_roots(a.substitute(Polynomial::constant(b.r0), T + one)))
    if (n > 0) b.members.push_back(b.r0 - Rational(n));

  const std::size_t n = b.members.size();
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<std::size_t(std::size_t)> find = [&](std::size_t x) {
    return parent[x] == x ? x : parent[x] = find(parent[x]);
  };
  for (std::size_t i = 0; i < n; ++i) {
    const auto series = composition_series(b.members[i], def);
    for (std::size_t j = 0; j < n; ++j)
      if (j != i && series.multiplicity(b.members[j])) parent[find(i)] = find(j);
  }
  std::map<std::size_t, std::vector<Rational>> comps;
  for (std::size_t i = 0; i < n; ++i) comps[find(i)].push_back(b.members[i]);
  for (auto &[root, members] : comps) b.refined.push_back(std::move(members));
  std::sort(b.refined.begin(), b.refined.end(), [](const auto &x, const auto &y) { return x.front() > y.front(); });
  return b;
}

bool embeds(const Rational &t, const Rational &r, const Deformation &def) {
  const Rational diff = r - t;
  if (!diff.is_natural())
    throw OutOfRange(fmt::format("{} is not in {} - N0", t.str(), r.str()));
  if (diff.is_zero()) return true;
  const unsigned n = static_cast<unsigned>(*diff.to_long());
  if (!alpha(def, r, n + 1).is_zero()) return false;
  return !kernel(KernelKind::Both, r, n, def).empty();
}

std::size_t FiniteSimple::index(unsigned i, unsigned p) const {
  // levels r, r-1, ..., i+1 come first, level l holding l + 1 vectors
  std::size_t before = 0;
  for (unsigned l = r; l > i; --l) before += l + 1;
  return before + p;
}

Character FiniteSimple::character() const {
  Character c;
  for (const auto &[i, p] : basis) c.add(nat(static_cast<long>(i)) - nat(2 * static_cast<long>(p)), 1);
  return c;
}

FiniteSimple finite_simple(unsigned r, unsigned s, const Deformation &def) {
  if (s > r) throw ConditionFailed(fmt::format("need s <= r, got r = {}, s = {}", r, s));
  const Rational rr = nat(r);
  if (!alpha(def, rr, r - s + 2).is_zero())
    throw ConditionFailed(fmt::format("alpha_(r,r-s+2) = {} is not zero for (r, s) = ({}, {})",
                                      alpha(def, rr, r - s + 2).str(), r, s));
  // d[t] for t = s - 1, ..., r - 2, stored at t + 1.
  std::vector<Rational> d(r + 1, Rational(0));
  for (long t = static_cast<long>(s) - 1; t <= static_cast<long>(r) - 2; ++t) {
    d[static_cast<std::size_t>(t + 1)] = d_coeff(def, rr, static_cast<unsigned>(static_cast<long>(r) - t));
    if (d[static_cast<std::size_t>(t + 1)].is_zero())
      throw ConditionFailed(fmt::format("d_{} vanishes for (r, s) = ({}, {})", t, r, s));
  }
  auto dt = [&](long t) { return t + 1 >= 0 && t <= static_cast<long>(r) - 2 ? d[static_cast<std::size_t>(t + 1)] : Rational(0); };

  FiniteSimple fs;
  fs.r = r;
  fs.s = s;
  VermaModule z(def, rr);
  for (unsigned i = r + 1; i-- > s;) {
    fs.levels.push_back(z.vt_vector(nat(i)));
    for (unsigned p = 0; p <= i; ++p) fs.basis.emplace_back(i, p);
  }
  const auto dim = static_cast<Eigen::Index>(fs.basis.size());
  if (Rational(static_cast<long>(dim)) != weyl_dimension(r, s))
    throw VerificationFailure("basis size differs from (r+s+2)(r-s+1)/2");

  auto zero = [&] { return RationalMatrix::Constant(dim, dim, Rational(0)); };
  RationalMatrix mh = zero(), mf = zero(), me = zero(), my = zero(), mx = zero();
  auto put = [&](RationalMatrix &m, long i, long p, std::size_t col, const Rational &c) {
    if (i < static_cast<long>(s) || i > static_cast<long>(r) || p < 0 || p > i || c.is_zero()) return;
    m(static_cast<Eigen::Index>(fs.index(static_cast<unsigned>(i), static_cast<unsigned>(p))),
      static_cast<Eigen::Index>(col)) += c;
  };
  for (std::size_t col = 0; col < fs.basis.size(); ++col) {
    const long i = fs.basis[col].first, p = fs.basis[col].second;
    put(mh, i, p, col, nat(i - 2 * p));
    put(mf, i, p + 1, col, Rational(1));
    put(me, i, p - 1, col, nat(p * (i - p + 1)));
    // Y v_i = v_{i-1} - d_{i-1} F v_{i+1}
    put(my, i - 1, p, col, Rational(1));
    put(my, i + 1, p + 1, col, -dt(i - 1));
  }
  for (std::size_t col = 0; col < fs.basis.size(); ++col) {
    const long i = fs.basis[col].first, p = fs.basis[col].second;
    // X F^p v_i = -p Y F^{p-1} v_i - (i+1) d_{i-1} F^p v_{i+1}
    if (p > 0) {
      const auto prev = static_cast<Eigen::Index>(fs.index(static_cast<unsigned>(i), static_cast<unsigned>(p - 1)));
      mx.col(static_cast<Eigen::Index>(col)) -= nat(p) * my.col(prev);
    }
    put(mx, i + 1, p, col, -nat(i + 1) * dt(i - 1));
  }
  fs.actions.one = RationalMatrix::Identity(dim, dim);
  fs.actions.image[gen_index(G::F)] = mf;
  fs.actions.image[gen_index(G::Y)] = my;
  fs.actions.image[gen_index(G::H)] = mh;
  fs.actions.image[gen_index(G::X)] = mx;
  fs.actions.image[gen_index(G::E)] = me;

  for (const auto &[rel, residual] : relation_residuals(fs.actions, def.g())) {
    fs.relations.emplace_back(rel.name(), is_zero(residual));
    if (!is_zero(residual))
      throw VerificationFailure(fmt::format("relation {} fails on V({}, {})", rel.name(), r, s));
  }
  return fs;
}

bool PrimitiveIdealReport::ok() const {
  if (!x_identity) return false;
  for (const auto &g : generators)
    if (!g.kills_highest_vector) return false;
  return true;
}

PrimitiveIdealReport primitive_ideal_generators(unsigned r, unsigned s, const Deformation &def) {
  const FiniteSimple fs = finite_simple(r, s, def);
  const auto dim = static_cast<Eigen::Index>(fs.dimension());
  RationalVector vr = RationalVector::Constant(dim, Rational(0));
  vr(static_cast<Eigen::Index>(fs.index(r, 0))) = Rational(1);

  auto apply_poly = [&](const VermaElement &p) {
    RationalVector acc = RationalVector::Constant(dim, Rational(0));
    for (const auto &[k, c] : p.terms()) {
      RationalVector w = vr;
      for (unsigned n = 0; n < k.second; ++n) w = fs.actions[G::Y] * w;
      for (unsigned n = 0; n < k.first; ++n) w = fs.actions[G::F] * w;
      acc += c * w;
    }
    return acc;
  };
  auto vanishes = [](const RationalVector &v) {
    for (Eigen::Index i = 0; i < v.size(); ++i)
      if (!v(i).is_zero()) return false;
    return true;
  };

  PrimitiveIdealReport rep;
  rep.r = r;
  rep.s = s;
  VermaModule z(def, nat(r));
  for (unsigned j = s; j <= r; ++j) {
    const VermaElement p = z.vt_vector(nat(j)).shifted(j + 1, 0);
    rep.generators.push_back({fmt::format("F^{} p_{}(Y,F)", j + 1, r - j), p, vanishes(apply_poly(p))});
  }
  const VermaElement below = z.vt_vector(nat(static_cast<long>(s) - 1));
  rep.generators.push_back({fmt::format("p_{}(Y,F)", r - s + 1), below, vanishes(apply_poly(below))});
  rep.generators.push_back({"X", std::nullopt, vanishes(fs.actions[G::X] * vr)});
  rep.generators.push_back({"E", std::nullopt, vanishes(fs.actions[G::E] * vr)});
  rep.generators.push_back({fmt::format("H - {}", r), std::nullopt,
                            vanishes(fs.actions[G::H] * vr - nat(r) * vr)});

  rep.x_identity = true;
  for (unsigned j = s; j <= r; ++j) {
    const VermaElement lhs = z.act_direct(G::X, z.vt_vector(nat(j)).shifted(j + 1, 0));
    const VermaElement rhs = (-nat(j + 1)) * z.vt_vector(nat(static_cast<long>(j) - 1)).shifted(j, 0);
    rep.x_identity = rep.x_identity && lhs == rhs;
  }
  for (const auto &g : rep.generators)
    if (!g.kills_highest_vector)
      throw VerificationFailure(fmt::format("{} does not annihilate the highest weight vector of V({}, {})",
                                            g.label, r, s));
  if (!rep.x_identity) throw VerificationFailure("X F^{j+1} v_j != -(j+1) F^j v_{j-1}");
  return rep;
}

DecompositionMatrix decomposition_matrix(const Block &b, const Deformation &def) {
  DecompositionMatrix dm;
  dm.members = b.members;
  dm.refined = b.refined;
  const std::size_t n = b.members.size();
  dm.entries.assign(n, std::vector<unsigned>(n, 0));
  for (std::size_t i = 0; i < n; ++i) {
    const auto series = composition_series(b.members[i], def);
    for (std::size_t j = 0; j < n; ++j) dm.entries[i][j] = series.multiplicity(b.members[j]);
  }
  dm.bgg.assign(n, std::vector<unsigned>(n, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) dm.bgg[i][j] = dm.entries[j][i];
  for (std::size_t i = 0; i < n; ++i) {
    if (dm.entries[i][i] != 1)
      throw VerificationFailure(fmt::format("[Z({0}) : V({0})] = {1}", b.members[i].str(), dm.entries[i][i]));
    for (std::size_t j = 0; j < i; ++j)
      if (dm.entries[i][j] != 0)
        throw VerificationFailure(fmt::format("[Z({}) : V({})] != 0 below the diagonal", b.members[i].str(),
                                              b.members[j].str()));
  }
  return dm;
}

std::vector<std::size_t> SubmoduleTable::dims() const {
  std::vector<std::size_t> out;
  for (const auto &b : basis) out.push_back(b.size());
  return out;
}

bool SubmoduleTable::contains(const VermaElement &v) const {
  std::map<unsigned, VermaElement> parts;
  for (const auto &[k, c] : v.terms()) {
    auto [it, inserted] = parts.try_emplace(k.second + 2 * k.first, VermaElement(r));
    it->second.add(k.first, k.second, c);
  }
  for (const auto &[n, part] : parts) {
    if (n > cutoff) throw OutOfRange(fmt::format("depth {} is beyond the cutoff {}", n, cutoff));
    const auto ws = weight_space(r, n);
    RationalMatrix span(static_cast<Eigen::Index>(ws.size()), static_cast<Eigen::Index>(basis[n].size()));
    for (std::size_t k = 0; k < basis[n].size(); ++k) span.col(static_cast<Eigen::Index>(k)) = coordinates(basis[n][k], ws);
    if (!solve(span, coordinates(part, ws))) return false;
  }
  return true;
}

SubmoduleTable submodule_generated(const VermaElement &v, unsigned cutoff, const Deformation &def) {
  const Rational &r = v.highest_weight();
  VermaModule z(def, r);
  SubmoduleTable table;
  table.r = r;
  table.cutoff = cutoff;

  auto reduce = [&](const std::vector<VermaElement> &vs, unsigned n) {
    const auto ws = weight_space(r, n);
    std::vector<VermaElement> out;
    if (vs.empty()) return out;
    RationalMatrix m(static_cast<Eigen::Index>(ws.size()), static_cast<Eigen::Index>(vs.size()));
    for (std::size_t k = 0; k < vs.size(); ++k) m.col(static_cast<Eigen::Index>(k)) = coordinates(vs[k], ws);
    const RationalMatrix b = column_basis(m);
    for (Eigen::Index k = 0; k < b.cols(); ++k) out.push_back(from_coordinates(b.col(k), ws));
    return out;
  };

  // Highest parts: the span of X^d E^e applied to the homogeneous components of v.
  std::map<unsigned, std::vector<VermaElement>, std::greater<>> seeds;
  for (const auto &[k, c] : v.terms()) {
    auto &bucket = seeds[k.second + 2 * k.first];
    if (bucket.empty()) bucket.emplace_back(r);
    bucket.front().add(k.first, k.second, c);
  }
  for (auto it = seeds.begin(); it != seeds.end(); ++it) {
    const unsigned n = it->first;
    it->second = reduce(it->second, n);
    for (const auto &u : it->second) {
      if (n >= 1)
        if (auto w = z.act_direct(G::X, u); !w.is_zero()) seeds[n - 1].push_back(std::move(w));
      if (n >= 2)
        if (auto w = z.act_direct(G::E, u); !w.is_zero()) seeds[n - 2].push_back(std::move(w));
    }
  }

  table.basis.resize(cutoff + 1);
  for (unsigned n = 0; n <= cutoff; ++n) {
    std::vector<VermaElement> span;
    for (const auto &[d, us] : seeds) {
      if (d > n) continue;
      for (unsigned a = 0; 2 * a <= n - d; ++a)
        for (const auto &u : us) span.push_back(u.shifted(a, n - d - 2 * a));
    }
    table.basis[n] = reduce(span, n);
  }
  return table;
}

GeneratorImages<RationalMatrix> weyl_failure_module() {
  auto m = [] { return RationalMatrix::Constant(3, 3, Rational(0)); };
  GeneratorImages<RationalMatrix> img;
  img.one = RationalMatrix::Identity(3, 3);
  // basis order w_1, w_0, w_{-1}
  RationalMatrix e = m(), f = m(), h = m(), x = m(), y = m();
  e(0, 2) = 1;
  f(2, 0) = 1;
  h(0, 0) = 1;
  h(2, 2) = -1;
  y(1, 0) = 1;
  x(1, 2) = -1;
  img.image[gen_index(G::E)] = e;
  img.image[gen_index(G::F)] = f;
  img.image[gen_index(G::H)] = h;
  img.image[gen_index(G::X)] = x;
  img.image[gen_index(G::Y)] = y;
  return img;
}

WeylFailureReport weyl_failure_demo(const Deformation &def) {
  WeylFailureReport rep;
  rep.c00 = deformed_scalar(def, 0);
  rep.c01 = deformed_scalar(def, 1);
  if (!rep.c00.is_zero() || !rep.c01.is_zero())
    throw NotApplicable(fmt::format("needs g(0) = g(3/8) = 0, got {} and {}", rep.c00.str(), rep.c01.str()));
  const auto img = weyl_failure_module();
  rep.module_valid = true;
  for (const auto &[rel, residual] : relation_residuals(img, def.g())) {
    rep.relations.emplace_back(rel.name(), is_zero(residual));
    rep.module_valid = rep.module_valid && is_zero(residual);
  }
  if (!rep.module_valid) throw VerificationFailure("the three-dimensional module violates a relation");

  // An equivariant projection onto k w_0 is a functional s = (a, 1, b) with s rho(g) = 0 for every generator.
  RationalMatrix a(15, 2);
  RationalVector rhs(15);
  Eigen::Index row = 0;
  for (G g : kGenerators) {
    const RationalMatrix &rho = img[g];
    for (Eigen::Index col = 0; col < 3; ++col, ++row) {
      a(row, 0) = rho(0, col);
      a(row, 1) = rho(2, col);
      rhs(row) = -rho(1, col);
    }
  }
  rep.complement_exists = solve(a, rhs).has_value();
  return rep;
}

} // namespace hf
