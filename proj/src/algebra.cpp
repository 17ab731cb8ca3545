#include "qosp/algebra.hpp"

#include <algorithm>
#include <set>

namespace qosp {

const Generator& AlgebraSpec::generator(const std::string& gname) const {
  for (const Generator& g : generators) {
    if (g.name == gname) return g;
  }
  throw AlgebraError("unknown generator '" + gname + "' in algebra '" + name + "'");
}

bool AlgebraSpec::has_generator(const std::string& gname) const {
  for (const Generator& g : generators) {
    if (g.name == gname) return true;
  }
  return false;
}

const Relation* AlgebraSpec::find_relation(const std::string& a, const std::string& b) const {
  for (const Relation& rel : relations) {
    if ((rel.left == a && rel.right == b) || (rel.left == b && rel.right == a)) return &rel;
  }
  return nullptr;
}

namespace {

void check_scalar_context(const LaurentPoly& poly, const std::vector<std::string>& params,
                          const std::string& where) {
  if (poly.vars() != params) {
    throw AlgebraError("scalar in " + where + " is not over the declared parameters");
  }
}

}  // namespace

void AlgebraSpec::validate() const {
  std::set<std::string> names;
  for (size_t i = 0; i < generators.size(); ++i) {
    const Generator& g = generators[i];
    if (!names.insert(g.name).second) {
      throw AlgebraError("duplicate generator '" + g.name + "'");
    }
    if (g.order_index != static_cast<int>(i)) {
      throw AlgebraError("generator '" + g.name + "' has order_index " +
                         std::to_string(g.order_index) + ", expected " + std::to_string(i));
    }
  }

  std::set<std::pair<std::string, std::string>> seen;
  for (const Relation& rel : relations) {
    if (!has_generator(rel.left) || !has_generator(rel.right)) {
      throw AlgebraError("relation (" + rel.id() + ") uses an undeclared generator");
    }
    std::pair<std::string, std::string> key{std::min(rel.left, rel.right),
                                            std::max(rel.left, rel.right)};
    if (!seen.insert(key).second) {
      throw AlgebraError("duplicate relation for pair {" + key.first + "," + key.second + "}");
    }
    const bool both_fermionic = generator(rel.left).parity == Parity::Fermionic &&
                                generator(rel.right).parity == Parity::Fermionic;
    if ((rel.kind == BracketKind::Antiquommutator) != both_fermionic) {
      throw AlgebraError("relation (" + rel.id() +
                         ") bracket kind does not match generator parities");
    }
    if (rel.coeff.is_zero()) {
      throw AlgebraError("relation (" + rel.id() + ") has zero bracket coefficient");
    }
    check_scalar_context(rel.coeff, parameters, "relation (" + rel.id() + ") coefficient");
    for (const auto& [gname, c] : rel.rhs_linear) {
      if (!has_generator(gname)) {
        throw AlgebraError("relation (" + rel.id() + ") right-hand side uses undeclared '" +
                           gname + "'");
      }
      check_scalar_context(c, parameters, "relation (" + rel.id() + ") right-hand side");
    }
    for (const auto& [word, c] : rel.rhs_quadratic) {
      if (!has_generator(word.first) || !has_generator(word.second)) {
        throw AlgebraError("relation (" + rel.id() +
                           ") quadratic right-hand side uses an undeclared generator");
      }
      check_scalar_context(c, parameters, "relation (" + rel.id() + ") right-hand side");
    }
  }

  if (total) {
    for (size_t i = 0; i < generators.size(); ++i) {
      for (size_t j = i; j < generators.size(); ++j) {
        const Generator& a = generators[i];
        const Generator& b = generators[j];
        if (i == j && a.parity != Parity::Fermionic) continue;
        std::pair<std::string, std::string> key{std::min(a.name, b.name),
                                                std::max(a.name, b.name)};
        if (!seen.count(key)) {
          throw AlgebraError("missing relation for pair {" + key.first + "," + key.second +
                             "} in total presentation '" + name + "'");
        }
      }
    }
    const size_t fermions = static_cast<size_t>(
        std::count_if(generators.begin(), generators.end(),
                      [](const Generator& g) { return g.parity == Parity::Fermionic; }));
    const size_t pairs = generators.size() * (generators.size() - 1) / 2;
    if (relations.size() != pairs + fermions) {
      throw AlgebraError("total presentation '" + name + "' has " +
                         std::to_string(relations.size()) + " relations, expected " +
                         std::to_string(pairs + fermions));
    }
  }
}

namespace {

const std::vector<std::string> kPRS{"p", "r", "s"};

LaurentPoly mono(int a, int b, int c, const Rational& k = Rational(1)) {
  return LaurentPoly::monomial(kPRS, {a, b, c}, k);
}

Relation rel_anti(std::string left, std::string right, LaurentPoly coeff,
                  std::map<std::string, LaurentPoly> linear = {},
                  Provenance prov = Provenance::Standard) {
  Relation r;
  r.left = std::move(left);
  r.right = std::move(right);
  r.kind = BracketKind::Antiquommutator;
  r.coeff = std::move(coeff);
  r.rhs_linear = std::move(linear);
  r.provenance = prov;
  return r;
}

Relation rel_quo(std::string left, std::string right, LaurentPoly coeff,
                 std::map<std::string, LaurentPoly> linear = {},
                 Provenance prov = Provenance::Standard) {
  Relation r;
  r.left = std::move(left);
  r.right = std::move(right);
  r.kind = BracketKind::Quommutator;
  r.coeff = std::move(coeff);
  r.rhs_linear = std::move(linear);
  r.provenance = prov;
  return r;
}

}  // namespace

AlgebraSpec builtin_osp22_prs() {
  AlgebraSpec spec;
  spec.name = "osp22prs";
  spec.parameters = kPRS;
  spec.generators = {
      {"E11", Parity::Bosonic, 0},  {"E22", Parity::Bosonic, 1},
      {"E12", Parity::Bosonic, 2},  {"E21", Parity::Bosonic, 3},
      {"V1", Parity::Fermionic, 4}, {"V2", Parity::Fermionic, 5},
      {"Vb1", Parity::Fermionic, 6}, {"Vb2", Parity::Fermionic, 7},
  };
  const LaurentPoly one = mono(0, 0, 0);

  std::vector<Relation>& rels = spec.relations;
  // Fermionic squares.
  rels.push_back(rel_anti("V1", "V1", one));
  rels.push_back(rel_anti("V2", "V2", one));
  rels.push_back(rel_anti("Vb1", "Vb1", one));
  rels.push_back(rel_anti("Vb2", "Vb2", one));
  // Fermion-fermion cross relations.
  rels.push_back(rel_anti("V1", "V2", mono(1, -1, -1)));
  rels.push_back(rel_anti("Vb1", "Vb2", mono(-1, -1, 1)));
  rels.push_back(rel_anti("Vb1", "V1", one, {{"E11", one}}));
  rels.push_back(rel_anti("Vb2", "V2", one, {{"E22", one}}));
  rels.push_back(rel_anti("Vb1", "V2", mono(1, 1, 1), {{"E12", one}}));
  rels.push_back(rel_anti("Vb2", "V1", mono(1, -1, 1), {{"E21", one}},
                          Provenance::Repaired));
  // Boson action on V1.
  rels.push_back(rel_quo("E11", "V1", one));
  rels.push_back(rel_quo("E22", "V1", mono(0, 0, 2), {{"V1", one}}));
  rels.push_back(rel_quo("E21", "V1", mono(1, -1, 1)));
  rels.push_back(rel_quo("E12", "V1", mono(-1, 1, 1), {{"V2", mono(-1, 1, 1, Rational(-1))}}));
  // Boson action on V2.
  rels.push_back(rel_quo("E11", "V2", mono(2, 0, 0), {{"V2", one}}));
  rels.push_back(rel_quo("E22", "V2", one));
  rels.push_back(rel_quo("E21", "V2", mono(1, -1, -1), {{"V1", mono(1, -1, -1, Rational(-1))}}));
  rels.push_back(rel_quo("E12", "V2", mono(1, 1, 1)));
  // Boson action on Vb1.
  rels.push_back(rel_quo("E11", "Vb1", one));
  rels.push_back(rel_quo("E22", "Vb1", mono(0, 0, -2), {{"Vb1", mono(0, 0, -2, Rational(-1))}}));
  rels.push_back(rel_quo("E21", "Vb1", mono(1, 1, -1), {{"Vb2", one}}));
  rels.push_back(rel_quo("E12", "Vb1", mono(-1, -1, -1)));
  // Boson action on Vb2.
  rels.push_back(rel_quo("E11", "Vb2", mono(-2, 0, 0), {{"Vb2", mono(-2, 0, 0, Rational(-1))}}));
  rels.push_back(rel_quo("E22", "Vb2", one));
  rels.push_back(rel_quo("E21", "Vb2", mono(-1, 1, -1)));
  rels.push_back(rel_quo("E12", "Vb2", mono(-1, -1, 1), {{"Vb1", one}}));
  // Boson-boson relations.
  rels.push_back(rel_quo("E11", "E22", one));
  rels.push_back(rel_quo("E11", "E21", mono(-2, 0, 0), {{"E21", mono(-2, 0, 0, Rational(-1))}}));
  rels.push_back(rel_quo("E22", "E21", mono(0, 0, 2), {{"E21", one}}));
  rels.push_back(rel_quo("E11", "E12", mono(2, 0, 0), {{"E12", one}}));
  rels.push_back(rel_quo("E22", "E12", mono(0, 0, -2), {{"E12", mono(0, 0, -2, Rational(-1))}}));
  {
    Relation r = rel_quo("E12", "E21", mono(-2, 0, 2),
                         {{"E11", one}, {"E22", mono(-2, 0, 2, Rational(-1))}},
                         Provenance::Repaired);
    r.rhs_quadratic[{"V1", "Vb1"}] = mono(0, 0, 2) - one;
    r.rhs_quadratic[{"V2", "Vb2"}] = mono(-2, 0, 2) - mono(0, 0, 2);
    rels.push_back(std::move(r));
  }

  spec.validate();
  return spec;
}

std::map<std::string, LaurentPoly::Image> specialization_images_q() {
  return {
      {"p", {{1}, Rational(1)}},
      {"r", {{0}, Rational(1)}},
      {"s", {{-1}, Rational(1)}},
  };
}

std::map<std::string, LaurentPoly::Image> specialization_images_classical() {
  return {
      {"p", {{0}, Rational(1)}},
      {"r", {{0}, Rational(1)}},
      {"s", {{0}, Rational(1)}},
  };
}

AlgebraSpec specialize(const AlgebraSpec& spec, std::string new_name,
                       const std::vector<std::string>& new_params,
                       const std::map<std::string, LaurentPoly::Image>& images) {
  AlgebraSpec out;
  out.name = std::move(new_name);
  out.parameters = new_params;
  out.generators = spec.generators;
  out.total = spec.total;
  for (const Relation& rel : spec.relations) {
    out.relations.push_back(specialize_relation(rel, new_params, images));
  }
  out.validate();
  return out;
}

Relation specialize_relation(const Relation& rel, const std::vector<std::string>& new_params,
                             const std::map<std::string, LaurentPoly::Image>& images) {
  Relation out;
  out.left = rel.left;
  out.right = rel.right;
  out.kind = rel.kind;
  out.provenance = rel.provenance;
  out.coeff = rel.coeff.substitute(new_params, images);
  for (const auto& [gname, c] : rel.rhs_linear) {
    LaurentPoly sc = c.substitute(new_params, images);
    if (!sc.is_zero()) out.rhs_linear.emplace(gname, std::move(sc));
  }
  for (const auto& [word, c] : rel.rhs_quadratic) {
    LaurentPoly sc = c.substitute(new_params, images);
    if (!sc.is_zero()) out.rhs_quadratic.emplace(word, std::move(sc));
  }
  return out;
}

AlgebraSpec builtin_osp22_q() {
  return specialize(builtin_osp22_prs(), "osp22q", {"t"}, specialization_images_q());
}

AlgebraSpec builtin_osp22_classical() {
  return specialize(builtin_osp22_prs(), "osp22classical", {"t"},
                    specialization_images_classical());
}

AlgebraSpec builtin_osp12_q() {
  AlgebraSpec spec;
  spec.name = "osp12q";
  spec.parameters = {"t"};
  spec.generators = {
      {"H", Parity::Bosonic, 0},   {"Jm", Parity::Bosonic, 1}, {"Jp", Parity::Bosonic, 2},
      {"Vm", Parity::Fermionic, 3}, {"Vp", Parity::Fermionic, 4},
  };
  const LaurentPoly one = LaurentPoly::constant({"t"}, Rational(1));
  const LaurentPoly q = LaurentPoly::monomial({"t"}, {2}, Rational(1));
  spec.relations.push_back(rel_anti("Vm", "Vp", q, {{"H", one}}));
  spec.relations.push_back(rel_anti("Vm", "Vm", q, {{"Jm", one}}));
  spec.relations.push_back(rel_anti("Vp", "Vp", q, {{"Jp", one}}));
  spec.total = false;
  spec.validate();
  return spec;
}

AlgebraSpec builtin_by_name(const std::string& name) {
  if (name == "osp22prs") return builtin_osp22_prs();
  if (name == "osp22q") return builtin_osp22_q();
  if (name == "osp22classical") return builtin_osp22_classical();
  if (name == "osp12q") return builtin_osp12_q();
  throw AlgebraError("unknown algebra '" + name + "' (expected one of: osp22prs, osp22q, " +
                     "osp22classical, osp12q)");
}

std::vector<std::string> builtin_names() {
  return {"osp22prs", "osp22q", "osp22classical", "osp12q"};
}

Relation literal_fourth_cross_relation() {
  // As printed, the fourth fermionic cross bracket is attached to the pair
  // (Vb2, V2) with target E21 — duplicating the {Vb2, V2} pair above.
  return rel_anti("Vb2", "V2", mono(1, -1, 1), {{"E21", mono(0, 0, 0)}});
}

Relation repaired_fourth_cross_relation() {
  return rel_anti("Vb2", "V1", mono(1, -1, 1), {{"E21", mono(0, 0, 0)}},
                  Provenance::Repaired);
}

Relation literal_quadratic_pair_relation() {
  // As printed, the quadratic right-hand side is attached to the pair
  // (E22, E12) — duplicating that pair and leaving (E12, E21) unconstrained.
  Relation r = rel_quo("E22", "E12", mono(-2, 0, 2),
                       {{"E11", mono(0, 0, 0)}, {"E22", mono(-2, 0, 2, Rational(-1))}});
  r.rhs_quadratic[{"V1", "Vb1"}] = mono(0, 0, 2) - mono(0, 0, 0);
  r.rhs_quadratic[{"V2", "Vb2"}] = mono(-2, 0, 2) - mono(0, 0, 2);
  return r;
}

Relation repaired_quadratic_pair_relation() {
  Relation r = rel_quo("E12", "E21", mono(-2, 0, 2),
                       {{"E11", mono(0, 0, 0)}, {"E22", mono(-2, 0, 2, Rational(-1))}},
                       Provenance::Repaired);
  r.rhs_quadratic[{"V1", "Vb1"}] = mono(0, 0, 2) - mono(0, 0, 0);
  r.rhs_quadratic[{"V2", "Vb2"}] = mono(-2, 0, 2) - mono(0, 0, 2);
  return r;
}

void perturb_coefficient(AlgebraSpec& spec, const std::string& a, const std::string& b,
                         const LaurentPoly& new_coeff) {
  for (Relation& rel : spec.relations) {
    if ((rel.left == a && rel.right == b) || (rel.left == b && rel.right == a)) {
      rel.coeff = new_coeff;
      return;
    }
  }
  throw AlgebraError("no relation for pair {" + a + "," + b + "} to perturb");
}

}  // namespace qosp
