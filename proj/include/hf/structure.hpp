#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hf/characters.hpp"
#include "hf/linalg.hpp"
#include "hf/relations.hpp"
#include "hf/scalars.hpp"
#include "hf/verma.hpp"

namespace hf {

/// The linkage set S(r) of weights sharing composition factors with Z(r).
struct Block {
  Rational representative;
  Rational r0;                                // maximal element of S(r)
  std::vector<Rational> members;              // descending
  std::vector<std::vector<Rational>> refined; // connected components, each descending
};

struct Factor {
  Rational weight;
  unsigned mult = 0;
};

struct StructureReport {
  Rational r;
  /// r in N0: the maximal weights t_0 = r > ... > t_k >= -1.  Otherwise every
  /// confirmed maximal weight, r included.
  std::vector<Rational> roots;
  std::optional<Rational> tail;  // t < -1 with Y(t_k) = Z(t)
  std::vector<Rational> sequence; // highest weights of the subquotients down the chain
  std::vector<Factor> factors;    // aggregated, weights descending
  std::vector<std::string> lattice;

  unsigned length() const { return static_cast<unsigned>(sequence.size()); }
  unsigned multiplicity(const Rational &t) const;
};

Block block(const Rational &r, const Deformation &def);
StructureReport composition_series(const Rational &r, const Deformation &def);
/// Whether Z(t) embeds in Z(r).  Throws OutOfRange unless t is in r - N0.
bool embeds(const Rational &t, const Rational &r, const Deformation &def);

/// The finite-dimensional simple module V(r, s) = sum_{i=s}^r V_C(i).
struct FiniteSimple {
  unsigned r = 0, s = 0;
  std::vector<VermaElement> levels;                 // v_r, v_{r-1}, ..., v_s as elements of Z(r)
  std::vector<std::pair<unsigned, unsigned>> basis; // (i, p) for F^p v_i
  GeneratorImages<RationalMatrix> actions;
  std::vector<std::pair<std::string, bool>> relations; // name, holds

  std::size_t dimension() const { return basis.size(); }
  std::size_t index(unsigned i, unsigned p) const;
  Character character() const;
};

/// Throws ConditionFailed if alpha_{r,r-s+2} != 0 or some d_t with
/// s - 1 <= t <= r - 2 vanishes; VerificationFailure if a relation fails.
FiniteSimple finite_simple(unsigned r, unsigned s, const Deformation &def);

struct IdealGenerator {
  std::string label;
  std::optional<VermaElement> polynomial; // p(Y, F) applied to v_r, when the generator is one
  bool kills_highest_vector = false;
};

struct PrimitiveIdealReport {
  unsigned r = 0, s = 0;
  std::vector<IdealGenerator> generators;
  /// X F^{j+1} v_j = -(j+1) F^j v_{j-1} in Z(r) for s <= j <= r.
  bool x_identity = false;
  bool ok() const;
};

/// Generators of the annihilator of the highest weight vector of V(r, s),
/// each checked on that vector.  Throws VerificationFailure.
PrimitiveIdealReport primitive_ideal_generators(unsigned r, unsigned s, const Deformation &def);

struct DecompositionMatrix {
  std::vector<Rational> members;               // descending
  std::vector<std::vector<unsigned>> entries;  // [Z(members[i]) : V(members[j])]
  std::vector<std::vector<unsigned>> bgg;      // [P(members[i]) : Z(members[j])] = entries[j][i]
  std::vector<std::vector<Rational>> refined;
};

/// Throws VerificationFailure if the matrix is not unitriangular.
DecompositionMatrix decomposition_matrix(const Block &b, const Deformation &def);

/// Weight-space bases of the submodule generated by v, down to depth cutoff.
struct SubmoduleTable {
  Rational r;
  unsigned cutoff = 0;
  std::vector<std::vector<VermaElement>> basis; // indexed by depth

  std::vector<std::size_t> dims() const;
  bool contains(const VermaElement &v) const;
};

SubmoduleTable submodule_generated(const VermaElement &v, unsigned cutoff, const Deformation &def);

/// Three-dimensional module k w_1 + k w_0 + k w_{-1} (basis in that order).
GeneratorImages<RationalMatrix> weyl_failure_module();

struct WeylFailureReport {
  Rational c00, c01;
  std::vector<std::pair<std::string, bool>> relations;
  bool module_valid = false;
  bool complement_exists = true;
};

/// Throws NotApplicable unless g(0) = g(3/8) = 0.
WeylFailureReport weyl_failure_demo(const Deformation &def);

bool is_zero(const RationalMatrix &m);

} // namespace hf
