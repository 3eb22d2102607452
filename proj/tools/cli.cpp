#include "cli.hpp"

#include <algorithm>
#include <optional>
#include <ostream>
#include <stdexcept>

#include <CLI11.hpp>
#include <fmt/format.h>
#include <json.hpp>

#include "acceptance.hpp"
#include "hf/characters.hpp"
#include "hf/errors.hpp"
#include "hf/pbw.hpp"
#include "hf/scalars.hpp"
#include "hf/structure.hpp"
#include "hf/verma.hpp"

namespace hf::cli {

namespace {

using Json = nlohmann::ordered_json;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  std::vector<std::string> f{"0"};
  std::optional<std::string> r, t, s, m;
  unsigned depth = 20;
  std::string format = "table";
  std::uint64_t seed = 1;
  unsigned trials = 500;
  std::optional<std::string> word, gen;
  std::string vec = "(0,0):1";
  std::string which;
  std::vector<std::string> only;
  bool f_given = false;

  bool json() const { return format == "json"; }
};

class Session {
public:
  Session(const Options &opt, std::ostream &out) : opt_(opt), out_(out) {}

  void normalize();
  void confluence();
  void alpha();
  void verma_act();
  void maximal();
  void block();
  void series();
  void simple();
  void dmatrix();
  void character();
  void wcf();
  void counterexample();
  int repro_all();

private:
  Deformation deformation() const;
  Rational rational(const std::optional<std::string> &v, const char *flag) const;
  unsigned natural(const std::optional<std::string> &v, const char *flag) const;
  Json echo(const Deformation &def) const;
  void header(const Deformation &def) const;
  void emit(const Json &j) const { out_ << j.dump(2) << '\n'; }

  const Options &opt_;
  std::ostream &out_;
};

std::string join(const std::vector<std::string> &parts, std::string_view sep) {
  std::string out;
  for (const auto &p : parts) out += (out.empty() ? "" : std::string(sep)) + p;
  return out;
}

Json rationals(const std::vector<Rational> &xs) {
  Json j = Json::array();
  for (const auto &x : xs) j.push_back(x.str());
  return j;
}

std::string listed(const std::vector<Rational> &xs) {
  std::vector<std::string> parts;
  for (const auto &x : xs) parts.push_back(x.str());
  return parts.empty() ? "(none)" : join(parts, ", ");
}

Json character_json(const Character &c) {
  Json j = Json::array();
  for (auto it = c.support().rbegin(); it != c.support().rend(); ++it)
    j.push_back({{"weight", it->first.str()}, {"mult", it->second}});
  return j;
}

Json verma_terms(const VermaElement &v) {
  Json j = Json::array();
  for (const auto &[key, c] : v.terms()) j.push_back({{"j", key.first}, {"i", key.second}, {"coeff", c.str()}});
  return j;
}

std::string matrix_rows(const std::vector<Rational> &labels, const std::vector<std::vector<unsigned>> &m) {
  std::size_t width = 1;
  for (const auto &l : labels) width = std::max(width, l.str().size());
  std::string out;
  for (std::size_t i = 0; i < m.size(); ++i) {
    out += fmt::format("{:>{}} |", labels[i].str(), width);
    for (unsigned e : m[i]) out += fmt::format(" {}", e);
    out += '\n';
  }
  return out;
}

Json matrix_json(const std::vector<std::vector<unsigned>> &m) {
  Json j = Json::array();
  for (const auto &row : m) j.push_back(row);
  return j;
}

Deformation Session::deformation() const { return Deformation::parse_f(join(opt_.f, ",")); }

Rational Session::rational(const std::optional<std::string> &v, const char *flag) const {
  if (!v) throw UsageError(fmt::format("{} is required", flag));
  return Rational::parse(*v);
}

unsigned Session::natural(const std::optional<std::string> &v, const char *flag) const {
  const Rational x = rational(v, flag);
  if (!x.is_natural()) throw OutOfRange(fmt::format("{} must be a natural number, got {}", flag, x.str()));
  return static_cast<unsigned>(*x.to_long());
}

Json Session::echo(const Deformation &def) const {
  return {{"f", to_string(def.f())}, {"g", to_string(def.g())}};
}

void Session::header(const Deformation &def) const {
  out_ << fmt::format("# f = {}   g = 1 + f = {}\n", to_string(def.f()), to_string(def.g()));
}

void Session::normalize() {
  if (!opt_.word) throw UsageError("--word is required");
  const auto def = deformation();
  const Word w = parse_word(*opt_.word);
  const AlgebraElement a = hf::normalize(w, def);
  if (opt_.json()) {
    Json j = echo(def);
    j["word"] = to_string(w);
    Json terms = Json::array();
    for (const auto &[m, c] : a.terms())
      terms.push_back({{"a", m.exp[0]}, {"b", m.exp[1]}, {"c", m.exp[2]}, {"d", m.exp[3]}, {"e", m.exp[4]}, {"coeff", c.str()}});
    j["terms"] = terms;
    j["rendered"] = to_string(a);
    emit(j);
    return;
  }
  header(def);
  out_ << to_string(a) << '\n';
}

void Session::confluence() {
  const auto def = deformation();
  const HfAlgebra algebra(def);
  const auto rep = confluence_report(algebra, opt_.trials, opt_.seed);
  if (opt_.json()) {
    Json j = echo(def);
    Json overlaps = Json::array();
    for (const auto &o : rep.overlaps) overlaps.push_back({{"overlap", to_string(o.overlap)}, {"resolved", o.resolved()}});
    j["overlaps"] = overlaps;
    j["trials"] = rep.associativity_trials;
    j["failures"] = rep.associativity_failures;
    j["ok"] = rep.ok();
    emit(j);
    return;
  }
  header(def);
  for (const auto &o : rep.overlaps)
    out_ << fmt::format("{:<8} {}\n", to_string(o.overlap), o.resolved() ? "resolved" : "UNRESOLVED");
  out_ << fmt::format("associativity: {} trials, {} failures (seed {})\n", rep.associativity_trials,
                      rep.associativity_failures, opt_.seed);
}

void Session::alpha() {
  const auto def = deformation();
  const Rational r = rational(opt_.r, "--r");
  const unsigned m = natural(opt_.m, "--m");
  if (m == 0) throw OutOfRange("--m must be positive");
  const Rational value = hf::alpha(def, r, m);
  if (opt_.json()) {
    Json j = echo(def);
    j["r"] = r.str();
    j["m"] = m;
    j["alpha"] = value.str();
    emit(j);
    return;
  }
  header(def);
  out_ << value.str() << '\n';
}

void Session::verma_act() {
  if (!opt_.gen || opt_.gen->size() != 1) throw UsageError("--gen takes one of E F H X Y");
  const auto def = deformation();
  const Rational r = rational(opt_.r, "--r");
  const Generator g = generator_from_char((*opt_.gen)[0]);
  const VermaElement v = parse_verma_element(r, opt_.vec);
  const VermaElement w = VermaModule(def, r).act_direct(g, v);
  if (opt_.json()) {
    Json j = echo(def);
    j["r"] = r.str();
    j["gen"] = *opt_.gen;
    j["input"] = verma_terms(v);
    j["result"] = verma_terms(w);
    j["rendered"] = to_string(w);
    emit(j);
    return;
  }
  header(def);
  out_ << fmt::format("{} . ({}) v_{} = ({}) v_{}\n", *opt_.gen, to_string(v), r.str(), to_string(w), r.str());
}

void Session::maximal() {
  const auto def = deformation();
  const Rational r = rational(opt_.r, "--r");
  const auto found = find_maximal_weights(r, def);
  if (opt_.json()) {
    Json j = Json::array();
    for (const auto &[t, v] : found) j.push_back({{"t", t.str()}, {"vector", to_string(v)}});
    emit(j);
    return;
  }
  header(def);
  if (found.empty()) out_ << fmt::format("no maximal vectors below v_{}\n", r.str());
  for (const auto &[t, v] : found) out_ << fmt::format("{:>6}  ({}) v_{}\n", t.str(), to_string(v), r.str());
}

void Session::block() {
  const auto def = deformation();
  const auto b = hf::block(rational(opt_.r, "--r"), def);
  if (opt_.json()) {
    Json j = echo(def);
    j["r"] = b.representative.str();
    j["r0"] = b.r0.str();
    j["members"] = rationals(b.members);
    Json refined = Json::array();
    for (const auto &c : b.refined) refined.push_back(rationals(c));
    j["refined"] = refined;
    emit(j);
    return;
  }
  header(def);
  out_ << fmt::format("S({}) = {{{}}}, top {}\n", b.representative.str(), listed(b.members), b.r0.str());
  for (const auto &c : b.refined) out_ << fmt::format("  component {{{}}}\n", listed(c));
}

void Session::series() {
  const auto def = deformation();
  const auto rep = composition_series(rational(opt_.r, "--r"), def);
  if (opt_.json()) {
    Json j = echo(def);
    j["r"] = rep.r.str();
    j["roots"] = rationals(rep.roots);
    j["tail"] = rep.tail ? Json(rep.tail->str()) : Json(nullptr);
    Json factors = Json::array();
    for (const auto &f : rep.factors) factors.push_back({{"weight", f.weight.str()}, {"mult", f.mult}});
    j["factors"] = factors;
    j["length"] = rep.length();
    j["sequence"] = rationals(rep.sequence);
    emit(j);
    return;
  }
  header(def);
  out_ << fmt::format("Z({}): length {}\n", rep.r.str(), rep.length());
  out_ << fmt::format("roots    {}\n", listed(rep.roots));
  out_ << fmt::format("tail     {}\n", rep.tail ? rep.tail->str() : "none");
  out_ << fmt::format("sequence {}\n", listed(rep.sequence));
  for (const auto &f : rep.factors) out_ << fmt::format("  [Z({}) : V({})] = {}\n", rep.r.str(), f.weight.str(), f.mult);
  for (const auto &l : rep.lattice) out_ << "  " << l << '\n';
}

void Session::simple() {
  const auto def = deformation();
  const unsigned r = natural(opt_.r, "--r"), s = natural(opt_.s, "--s");
  const auto fs = finite_simple(r, s, def);
  const Character ch = fs.character();
  if (opt_.json()) {
    Json j = echo(def);
    j["r"] = r;
    j["s"] = s;
    j["dimension"] = fs.dimension();
    Json basis = Json::array();
    for (const auto &[i, p] : fs.basis) basis.push_back({{"i", i}, {"p", p}});
    j["basis"] = basis;
    Json rels = Json::array();
    for (const auto &[name, holds] : fs.relations) rels.push_back({{"name", name}, {"holds", holds}});
    j["relations"] = rels;
    j["character"] = character_json(ch);
    emit(j);
    return;
  }
  header(def);
  out_ << fmt::format("V({},{}): dimension {}\n", r, s, fs.dimension());
  for (std::size_t k = 0; k < fs.levels.size(); ++k)
    out_ << fmt::format("  v_{} = ({}) v_{}\n", r - k, to_string(fs.levels[k]), r);
  for (const auto &[name, holds] : fs.relations) out_ << fmt::format("  {:<6} {}\n", name, holds ? "holds" : "FAILS");
  out_ << "character " << to_string(ch) << '\n';
}

void Session::dmatrix() {
  const auto def = deformation();
  const auto b = hf::block(rational(opt_.r, "--r"), def);
  const auto d = decomposition_matrix(b, def);
  if (opt_.json()) {
    Json j = echo(def);
    j["members"] = rationals(d.members);
    j["entries"] = matrix_json(d.entries);
    j["bgg"] = matrix_json(d.bgg);
    Json refined = Json::array();
    for (const auto &c : d.refined) refined.push_back(rationals(c));
    j["refined"] = refined;
    emit(j);
    return;
  }
  header(def);
  out_ << "D[i][j] = [Z(i) : V(j)]\n" << matrix_rows(d.members, d.entries);
  out_ << "[P(i) : Z(j)]\n" << matrix_rows(d.members, d.bgg);
}

void Session::character() {
  if (!opt_.s) {
    const Rational r = rational(opt_.r, "--r");
    const Character ch = verma_character(r, opt_.depth);
    if (opt_.json()) {
      emit({{"r", r.str()}, {"depth", opt_.depth}, {"character", character_json(ch)}});
      return;
    }
    out_ << fmt::format("ch Z({}) down to depth {}\n", r.str(), opt_.depth);
    for (auto it = ch.support().rbegin(); it != ch.support().rend(); ++it)
      out_ << fmt::format("{:>8}  {}\n", it->first.str(), it->second);
    return;
  }
  const auto def = deformation();
  const unsigned r = natural(opt_.r, "--r"), s = natural(opt_.s, "--s");
  const Character ch = finite_simple(r, s, def).character();
  if (opt_.json()) {
    Json j = echo(def);
    j["r"] = r;
    j["s"] = s;
    j["character"] = character_json(ch);
    j["kostant"] = character_json(kostant_multiplicity_character(r, s));
    emit(j);
    return;
  }
  header(def);
  out_ << fmt::format("{:>8}  {:>4}  {:>7}\n", "weight", "mult", "kostant");
  for (auto it = ch.support().rbegin(); it != ch.support().rend(); ++it)
    out_ << fmt::format("{:>8}  {:>4}  {:>7}\n", it->first.str(), it->second, kostant_multiplicity(r, s, it->first));
}

void Session::wcf() {
  const unsigned r = natural(opt_.r, "--r"), s = natural(opt_.s, "--s");
  if (s > r) throw OutOfRange("--s must not exceed --r");
  const WcfReport rep = opt_.f_given ? wcf_verify(r, s, opt_.depth, finite_simple(r, s, deformation()).character())
                                     : wcf_verify(r, s, opt_.depth);
  if (opt_.json()) {
    emit({{"r", r},
          {"s", s},
          {"depth", opt_.depth},
          {"weyl", rep.weyl_ok},
          {"alternate", rep.alternate_ok},
          {"lhs", character_json(rep.lhs)},
          {"rhs", character_json(rep.rhs)}});
    return;
  }
  if (opt_.f_given) header(deformation());
  out_ << fmt::format("V({},{}) {} character, depth {}\n", r, s, opt_.f_given ? "computed" : "sl2", opt_.depth);
  out_ << fmt::format("q * ch = omega(r + 3/2, s + 1/2)     {}\n", rep.weyl_ok ? "PASS" : "FAIL");
  out_ << fmt::format("e(3/2) ch = signed Verma sum        {}\n", rep.alternate_ok ? "PASS" : "FAIL");
  out_ << "q * ch = " << to_string(rep.lhs) << '\n';
}

void Session::counterexample() {
  const auto def = deformation();
  if (opt_.which == "weyl") {
    const auto rep = weyl_failure_demo(def);
    if (opt_.json()) {
      Json j = echo(def);
      j["c00"] = rep.c00.str();
      j["c01"] = rep.c01.str();
      Json rels = Json::array();
      for (const auto &[name, holds] : rep.relations) rels.push_back({{"name", name}, {"holds", holds}});
      j["relations"] = rels;
      j["module_valid"] = rep.module_valid;
      j["complement_exists"] = rep.complement_exists;
      emit(j);
      return;
    }
    header(def);
    out_ << fmt::format("c00 = {}, c01 = {}\n", rep.c00.str(), rep.c01.str());
    for (const auto &[name, holds] : rep.relations) out_ << fmt::format("  {:<6} {}\n", name, holds ? "holds" : "FAILS");
    out_ << fmt::format("module valid: {}\ncomplement to k w_1 + k w_0: {}\n", rep.module_valid ? "yes" : "no",
                        rep.complement_exists ? "exists" : "none");
    return;
  }
  const Rational r = opt_.r ? Rational::parse(*opt_.r) : Rational(0);
  if (opt_.which == "mult2") {
    const Rational t = opt_.t ? Rational::parse(*opt_.t) : Rational(-2);
    const auto rep = composition_series(r, def);
    if (opt_.json()) {
      Json j = echo(def);
      j["r"] = r.str();
      j["t"] = t.str();
      j["multiplicity"] = rep.multiplicity(t);
      j["sequence"] = rationals(rep.sequence);
      emit(j);
      return;
    }
    header(def);
    out_ << fmt::format("[Z({}) : V({})] = {}\nsequence {}\n", r.str(), t.str(), rep.multiplicity(t), listed(rep.sequence));
    return;
  }
  if (opt_.which == "resolution") {
    const auto sub = submodule_generated(VermaElement::basis(r, 0, 1), 2, def);
    const bool has_f = sub.contains(VermaElement::basis(r, 1, 0));
    if (opt_.json()) {
      Json j = echo(def);
      j["r"] = r.str();
      j["dims"] = sub.dims();
      j["contains_F"] = has_f;
      j["standard_cyclic"] = has_f;
      emit(j);
      return;
    }
    header(def);
    out_ << fmt::format("U . Y v_{}: dims by depth {}\n", r.str(), fmt::join(sub.dims(), " "));
    out_ << fmt::format("F v_{} in U . Y v_{}: {}\n", r.str(), r.str(), has_f ? "yes" : "no");
    return;
  }
  throw UsageError("--which takes weyl, mult2 or resolution");
}

int Session::repro_all() {
  std::vector<acceptance::Result> results;
  try {
    results = acceptance::run(opt_.only, out_);
  } catch (const std::invalid_argument &e) {
    throw UsageError(e.what());
  }
  return std::all_of(results.begin(), results.end(), [](const auto &x) { return x.pass; }) ? 0 : 1;
}

} // namespace

int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
  Options opt;
  CLI::App app("Exact computations in the deformed symplectic oscillator algebra H_f", "hf");
  app.set_config("--config", "", "key=value file overriding defaults");
  app.require_subcommand(1, 1);
  auto *f_opt = app.add_option("--f", opt.f, "coefficients of f, ascending, comma separated")->delimiter(',');
  app.add_option("--r", opt.r, "highest weight p/q");
  app.add_option("--s", opt.s, "lower weight of V(r,s)");
  app.add_option("--m", opt.m, "second argument of alpha");
  app.add_option("--t", opt.t, "target weight p/q");
  app.add_option("--depth", opt.depth, "character cutoff depth");
  app.add_option("--format", opt.format, "table or json")->check(CLI::IsMember({"table", "json"}));
  app.add_option("--seed", opt.seed, "random seed");
  app.add_option("--trials", opt.trials, "associativity trials");
  app.add_option("--word", opt.word, "generator word, e.g. \"E F^2 X Y\"");
  app.add_option("--gen", opt.gen, "generator letter");
  app.add_option("--vec", opt.vec, "Verma element \"(j,i):c,...\"");
  app.add_option("--which", opt.which, "weyl, mult2 or resolution");
  app.add_option("--only", opt.only, "acceptance criteria by number or key")->delimiter(',');

  Session session(opt, out);
  int status = 0;
  const std::vector<std::pair<const char *, std::function<void()>>> commands{
      {"normalize", [&] { session.normalize(); }},
      {"confluence", [&] { session.confluence(); }},
      {"alpha", [&] { session.alpha(); }},
      {"verma-act", [&] { session.verma_act(); }},
      {"maximal", [&] { session.maximal(); }},
      {"block", [&] { session.block(); }},
      {"series", [&] { session.series(); }},
      {"simple", [&] { session.simple(); }},
      {"dmatrix", [&] { session.dmatrix(); }},
      {"char", [&] { session.character(); }},
      {"wcf", [&] { session.wcf(); }},
      {"counterexample", [&] { session.counterexample(); }},
      {"repro-all", [&] { status = session.repro_all(); }},
  };
  for (const auto &[name, action] : commands)
    app.add_subcommand(name)->fallthrough()->callback([&opt, f_opt, action = action] {
      opt.f_given = f_opt->count() > 0;
      action();
    });

  const std::string usage = app.help();
  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp &) {
    out << usage;
    return 0;
  } catch (const CLI::ParseError &e) {
    if (e.get_exit_code() == 0) return 0;
    err << "usage error: " << e.what() << '\n' << usage;
    return 2;
  } catch (const UsageError &e) {
    err << "usage error: " << e.what() << '\n' << usage;
    return 2;
  } catch (const Error &e) {
    err << e.name() << ": " << e.what() << '\n';
    return 1;
  } catch (const std::exception &e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
  return status;
}

} // namespace hf::cli
