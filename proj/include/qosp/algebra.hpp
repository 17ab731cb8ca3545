#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "qosp/laurent.hpp"

namespace qosp {

enum class Parity { Bosonic, Fermionic };

// Bracket kinds: [A,B]_c = AB - c BA (quommutator) and
// {A,B}_c = AB + c BA (antiquommutator).
enum class BracketKind { Quommutator, Antiquommutator };

// Whether a built-in relation is carried in its commonly printed form or was
// repaired after the matrix-representation oracle showed the printed form to
// be inconsistent. Reports disclose every repaired entry.
enum class Provenance { Standard, Repaired };

struct Generator {
  std::string name;
  Parity parity = Parity::Bosonic;
  int order_index = 0;
};

// One structure relation on an (ordered) generator pair:
//   left * right  -+  coeff * right * left  =  rhs_linear + rhs_quadratic
// with '-' for quommutators and '+' for antiquommutators. Squares are stored
// with left == right.
struct Relation {
  std::string left;
  std::string right;
  BracketKind kind = BracketKind::Quommutator;
  LaurentPoly coeff;
  std::map<std::string, LaurentPoly> rhs_linear;
  std::map<std::pair<std::string, std::string>, LaurentPoly> rhs_quadratic;
  Provenance provenance = Provenance::Standard;

  std::string id() const { return left + "," + right; }
  bool is_square() const { return left == right; }
};

class AlgebraError : public std::runtime_error {
 public:
  explicit AlgebraError(const std::string& what) : std::runtime_error(what) {}
};

// A quommutator superalgebra presentation: generators with parities in a
// fixed total order, plus one relation per unordered generator pair (and
// square relations for fermionic generators). `total` marks presentations
// whose relation coverage is complete; only total presentations may be
// oriented into rewrite systems.
struct AlgebraSpec {
  std::string name;
  std::vector<std::string> parameters;
  std::vector<Generator> generators;
  std::vector<Relation> relations;
  bool total = true;

  const Generator& generator(const std::string& gname) const;
  bool has_generator(const std::string& gname) const;
  int order_index(const std::string& gname) const { return generator(gname).order_index; }

  LaurentPoly zero() const { return LaurentPoly(parameters); }
  LaurentPoly one() const { return LaurentPoly::constant(parameters, Rational(1)); }

  const Relation* find_relation(const std::string& a, const std::string& b) const;

  // Enforces: unique generator names; order_index = position; for total
  // specs, exactly one relation per unordered pair plus a square relation
  // for every fermionic generator; bracket kind matches parities
  // (antiquommutator iff both generators fermionic); relation coefficients
  // and right-hand sides live over `parameters`.
  void validate() const;
};

// ----- Built-in presentations -----

// The full three-parameter deformation over {p, r, s}: 8 generators
// (bosonic E11, E22, E12, E21; fermionic V1, V2, Vb1, Vb2), 28 pair
// relations + 4 fermionic squares. Two relations carry
// Provenance::Repaired; see the deviation oracle in the rep module.
AlgebraSpec builtin_osp22_prs();

// One-parameter specialization over the base variable t: p = t, s = t^-1,
// r = 1, with q = t^2 (all coefficients become Laurent polynomials in t
// with even exponents).
AlgebraSpec builtin_osp22_q();

// Classical limit p = r = s = 1 (constant coefficients over {t}).
AlgebraSpec builtin_osp22_classical();

// The deformed osp(1,2) presentation over t (q = t^2): generators
// H, Jm, Jp (bosonic) and Vm, Vp (fermionic), with only the three defining
// antiquommutators {Vm,Vp}_q = H, {Vm,Vm}_q = Jm, {Vp,Vp}_q = Jp.
// Deliberately partial: total == false, not orientable.
AlgebraSpec builtin_osp12_q();

// Lookup by CLI name: osp22prs | osp22q | osp22classical | osp12q.
AlgebraSpec builtin_by_name(const std::string& name);
std::vector<std::string> builtin_names();

// General parameter substitution applied to every relation.
AlgebraSpec specialize(const AlgebraSpec& spec, std::string new_name,
                       const std::vector<std::string>& new_params,
                       const std::map<std::string, LaurentPoly::Image>& images);

// The {p,r,s} -> {t} images for the one-parameter specialization and the
// classical limit.
std::map<std::string, LaurentPoly::Image> specialization_images_q();
std::map<std::string, LaurentPoly::Image> specialization_images_classical();

// ----- Deviation-oracle relation variants (over {p, r, s}) -----
//
// The printed source of this relation set assigns the fourth fermionic
// cross relation to the pair (Vb2, V2) — duplicating that pair — and
// attaches the quadratic right-hand side to the pair (E22, E12) — also a
// duplicate. The built-in table stores the repaired assignments
// ((Vb2, V1) and (E12, E21)); these accessors expose both variants so the
// representation oracle can measure which one actually holds.
Relation literal_fourth_cross_relation();
Relation repaired_fourth_cross_relation();
Relation literal_quadratic_pair_relation();
Relation repaired_quadratic_pair_relation();

// Specializes a standalone relation with the given images (used to run the
// deviation oracle in the one-parameter representation).
Relation specialize_relation(const Relation& rel, const std::vector<std::string>& new_params,
                             const std::map<std::string, LaurentPoly::Image>& images);

// Replaces the bracket coefficient of relation (a,b); used for
// negative-control perturbations. Throws if the relation is absent.
void perturb_coefficient(AlgebraSpec& spec, const std::string& a, const std::string& b,
                         const LaurentPoly& new_coeff);

}  // namespace qosp
