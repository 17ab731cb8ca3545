#include "qosp/rep.hpp"

#include <algorithm>
#include <exception>
#include <optional>

#include "qosp/linalg.hpp"
#include "qosp/parallel.hpp"
#include "qosp/qcalc.hpp"

namespace qosp {

namespace {

const std::vector<std::string> kT{"t"};

LaurentPoly t_power(int k) { return LaurentPoly::monomial(kT, {k}, Rational(1)); }
LaurentPoly t_const(const Rational& c) { return LaurentPoly::constant(kT, c); }

}  // namespace

const PolyMatrix& RepSet::at(const std::string& name) const {
  auto it = generators.find(name);
  if (it == generators.end()) {
    throw RepError("representation has no matrix for generator '" + name + "'");
  }
  return it->second;
}

RepSet build_osp22_fermions(int n, FermionVariant variant) {
  if (n < 1) throw RepError("module grade n must be >= 1, got " + std::to_string(n));
  const int dim = 2 * n + 1;
  const LaurentPoly zero(kT);
  const LaurentPoly one = t_const(Rational(1));
  const LaurentPoly q = t_power(2);

  RepSet reps;
  reps.n = n;

  // Lower-left block: identity embedding of the degree-(n-1) component into
  // the degree-n component; and the same embedding shifted by one degree
  // (multiplication by x).
  PolyMatrix v1(dim, dim, zero);
  PolyMatrix v2(dim, dim, zero);
  for (int k = 0; k < n; ++k) {
    v1.at(n + k, k) = one;
    v2.at(n + k + 1, k) = one;
  }

  // Upper-right block: x D_q - [n]_q acts diagonally on monomials with
  // eigenvalue [k]_q - [n]_q, so the top-degree column is annihilated and
  // the image lies in the smaller component.
  PolyMatrix vb1(dim, dim, zero);
  const LaurentPoly qn_inv = t_power(-2 * n);
  const LaurentPoly qint_n = qint(n, q);
  for (int k = 0; k < n; ++k) {
    vb1.at(k, n + k) = qn_inv * (qint(k, q) - qint_n);
  }

  // Upper-right block: D_q in the chosen normalization.
  PolyMatrix vb2(dim, dim, zero);
  for (int k = 1; k <= n; ++k) {
    const LaurentPoly scale =
        variant == FermionVariant::Repaired ? -(q * qint(k, q)) : t_power(-2) * qint(k, q);
    vb2.at(k - 1, n + k) = scale;
  }

  reps.generators.emplace("V1", std::move(v1));
  reps.generators.emplace("V2", std::move(v2));
  reps.generators.emplace("Vb1", std::move(vb1));
  reps.generators.emplace("Vb2", std::move(vb2));
  return reps;
}

void derive_bosonic(const AlgebraSpec& spec, RepSet& reps) {
  for (const Relation& rel : spec.relations) {
    if (rel.kind != BracketKind::Antiquommutator) continue;
    if (rel.rhs_linear.size() != 1 || !rel.rhs_quadratic.empty()) continue;
    const auto& [target, g] = *rel.rhs_linear.begin();
    if (spec.generator(target).parity != Parity::Bosonic) continue;
    if (reps.generators.count(target)) continue;
    auto left_it = reps.generators.find(rel.left);
    auto right_it = reps.generators.find(rel.right);
    if (left_it == reps.generators.end() || right_it == reps.generators.end()) continue;
    const PolyMatrix& left = left_it->second;
    const PolyMatrix& right = right_it->second;
    // {L,R}_c = g G  =>  G = (L R + c R L) / g.
    PolyMatrix bracket = left * right + (right * left).scaled(rel.coeff);
    reps.generators.emplace(target, bracket.scaled(g.inverse()));
  }
}

RepSet build_osp22_rep(int n, FermionVariant variant) {
  RepSet reps = build_osp22_fermions(n, variant);
  derive_bosonic(builtin_osp22_q(), reps);
  for (const std::string& name : {"E11", "E22", "E12", "E21"}) {
    if (!reps.generators.count(name)) {
      throw RepError("bosonic generator '" + name + "' was not derivable");
    }
  }
  return reps;
}

RepSet build_osp12_rep(int n) {
  if (n < 1) throw RepError("module grade n must be >= 1, got " + std::to_string(n));
  const int dim = 2 * n + 1;
  const LaurentPoly zero(kT);
  const LaurentPoly one = t_const(Rational(1));
  const LaurentPoly q2 = t_power(4);  // Jackson base is q^2 = t^4

  RepSet reps;
  reps.n = n;

  PolyMatrix vm(dim, dim, zero);
  for (int k = 0; k < n; ++k) vm.at(n + k, k) = one;          // identity embedding
  for (int k = 1; k <= n; ++k) vm.at(k - 1, n + k) = qint(k, q2);  // D_{q^2}

  PolyMatrix vp(dim, dim, zero);
  for (int k = 0; k < n; ++k) vp.at(n + k + 1, k) = one;  // multiplication by x
  const LaurentPoly q2n_inv = t_power(-4 * n);
  const LaurentPoly qint2_n = qint(n, q2);
  for (int k = 0; k < n; ++k) {
    vp.at(k, n + k) = q2n_inv * (qint(k, q2) - qint2_n);  // x D_{q^2} - [n]_{q^2}
  }

  reps.generators.emplace("Vm", std::move(vm));
  reps.generators.emplace("Vp", std::move(vp));
  derive_bosonic(builtin_osp12_q(), reps);
  for (const std::string& name : {"H", "Jm", "Jp"}) {
    if (!reps.generators.count(name)) {
      throw RepError("derived generator '" + name + "' was not derivable");
    }
  }
  return reps;
}

PolyMatrix check_relation(const Relation& rel, const RepSet& reps) {
  const PolyMatrix& left = reps.at(rel.left);
  const PolyMatrix& right = reps.at(rel.right);
  const Rational sigma(rel.kind == BracketKind::Antiquommutator ? 1 : -1);
  PolyMatrix residual = left * right + (right * left).scaled(rel.coeff * sigma);
  for (const auto& [gname, c] : rel.rhs_linear) {
    residual = residual - reps.at(gname).scaled(c);
  }
  for (const auto& [word, c] : rel.rhs_quadratic) {
    residual = residual - (reps.at(word.first) * reps.at(word.second)).scaled(c);
  }
  return residual;
}

VerificationReport verify_all(const AlgebraSpec& spec, const RepSet& reps, bool parallel,
                              const std::string& mode) {
  VerificationReport report;
  report.algebra = spec.name;
  report.n = reps.n;
  report.mode = mode;
  report.relations_checked = spec.relations.size();

  std::vector<std::optional<RelationFailure>> slots(spec.relations.size());
  std::exception_ptr error;
  const bool use_parallel = parallel && parallel::enabled();

#if defined(QOSP_HAVE_OPENMP)
#pragma omp parallel for schedule(dynamic) if (use_parallel)
#endif
  for (size_t i = 0; i < spec.relations.size(); ++i) {
    try {
      const Relation& rel = spec.relations[i];
      const PolyMatrix residual = check_relation(rel, reps);
      if (!residual.is_zero()) {
        RelationFailure failure;
        failure.relation_id = rel.id();
        for (int r = 0; r < residual.rows(); ++r) {
          for (int c = 0; c < residual.cols(); ++c) {
            if (!residual.at(r, c).is_zero()) {
              failure.residual_entries.push_back({r, c, residual.at(r, c).to_string()});
            }
          }
        }
        slots[i] = std::move(failure);
      }
    } catch (...) {
#if defined(QOSP_HAVE_OPENMP)
#pragma omp critical
#endif
      {
        if (!error) error = std::current_exception();
      }
    }
  }
  if (error) std::rethrow_exception(error);

  for (auto& slot : slots) {
    if (slot) report.failures.push_back(std::move(*slot));
  }
  return report;
}

Rational evaluate_even_powers(const LaurentPoly& poly, const Rational& q_value) {
  if (poly.vars() != kT) throw RepError("expected a polynomial over t");
  Rational out(0);
  for (const auto& [exps, coeff] : poly.terms()) {
    if (exps[0] % 2 != 0) {
      throw RepError("cannot evaluate odd power t^" + std::to_string(exps[0]) +
                     " at a rational value of q = t^2");
    }
    out += coeff * rational_pow(q_value, exps[0] / 2);
  }
  return out;
}

RationalMatrix evaluate_at_q(const PolyMatrix& m, const Rational& q_value) {
  return m.map(Rational(0),
               [&](const LaurentPoly& entry) { return evaluate_even_powers(entry, q_value); });
}

PolyMatrix classical_limit(const PolyMatrix& m) {
  const std::map<std::string, Rational> at_one{{"t", Rational(1)}};
  return m.map(LaurentPoly(kT),
               [&](const LaurentPoly& entry) { return t_const(entry.evaluate(at_one)); });
}

RepSet classical_limit(const RepSet& reps) {
  RepSet out;
  out.n = reps.n;
  for (const auto& [name, matrix] : reps.generators) {
    out.generators.emplace(name, classical_limit(matrix));
  }
  return out;
}

namespace {

std::vector<Rational> flatten(const RationalMatrix& m) {
  std::vector<Rational> row;
  row.reserve(static_cast<size_t>(m.rows()) * static_cast<size_t>(m.cols()));
  for (int i = 0; i < m.rows(); ++i) {
    for (int j = 0; j < m.cols(); ++j) row.push_back(m.at(i, j));
  }
  return row;
}

void require_generic(const Rational& q_value) {
  if (q_value == 0 || q_value == 1 || q_value == -1) {
    throw RepError("parameter assignment must be generic (q not 0 or a unit root), got q = " +
                   rational_to_string(q_value));
  }
}

}  // namespace

SpanReport span_rank(const std::vector<RationalMatrix>& gens, int dim, int n,
                     const Rational& q_value, int max_word_length) {
  require_generic(q_value);
  if (max_word_length < 0) throw RepError("max word length must be nonnegative");

  SpanReport report;
  report.n = n;
  report.q = q_value;
  const int full = dim * dim;

  RowBasis cumulative(full);
  const RationalMatrix id = RationalMatrix::identity(dim, Rational(0), Rational(1));
  cumulative.insert(flatten(id));
  report.ranks_by_word_length.push_back(cumulative.rank());
  if (cumulative.rank() == full) {
    report.saturated = true;
    report.saturating_length = 0;
    return report;
  }

  // Products of length L+1 span the image of (basis of length-L span) x gens,
  // so only an independent frontier needs extending.
  std::vector<RationalMatrix> frontier{id};
  for (int length = 1; length <= max_word_length; ++length) {
    RowBasis frontier_basis(full);
    std::vector<RationalMatrix> next;
    for (const RationalMatrix& left : frontier) {
      for (const RationalMatrix& gen : gens) {
        RationalMatrix product = left * gen;
        if (frontier_basis.insert(flatten(product))) {
          cumulative.insert(flatten(product));
          next.push_back(std::move(product));
        }
      }
    }
    frontier = std::move(next);
    report.ranks_by_word_length.push_back(cumulative.rank());
    if (cumulative.rank() == full && report.saturating_length < 0) {
      report.saturated = true;
      report.saturating_length = length;
      break;
    }
    if (frontier.empty()) break;
  }
  return report;
}

SpanReport osp22_fermion_span(int n, const Rational& q_value, int max_word_length) {
  require_generic(q_value);
  const RepSet reps = build_osp22_fermions(n);
  std::vector<RationalMatrix> gens;
  for (const std::string& name : {"V1", "V2", "Vb1", "Vb2"}) {
    gens.push_back(evaluate_at_q(reps.at(name), q_value));
  }
  return span_rank(gens, reps.dim(), n, q_value, max_word_length);
}

int commutant_dimension(const std::vector<RationalMatrix>& gens, int dim) {
  const int unknowns = dim * dim;
  std::vector<std::vector<Rational>> rows;
  for (const RationalMatrix& m : gens) {
    // Constraint X m - m X = 0, one row per output entry (i, j).
    for (int i = 0; i < dim; ++i) {
      for (int j = 0; j < dim; ++j) {
        std::vector<Rational> row(static_cast<size_t>(unknowns), Rational(0));
        for (int k = 0; k < dim; ++k) {
          row[static_cast<size_t>(i * dim + k)] += m.at(k, j);
          row[static_cast<size_t>(k * dim + j)] -= m.at(i, k);
        }
        rows.push_back(std::move(row));
      }
    }
  }
  return unknowns - static_cast<int>(rank_rational(rows));
}

int osp22_commutant_dimension(int n, const Rational& q_value) {
  require_generic(q_value);
  const RepSet reps = build_osp22_rep(n);
  std::vector<RationalMatrix> gens;
  for (const auto& [name, matrix] : reps.generators) {
    gens.push_back(evaluate_at_q(matrix, q_value));
  }
  return commutant_dimension(gens, reps.dim());
}

int osp12_commutant_dimension(int n, const Rational& q_value) {
  require_generic(q_value);
  const RepSet reps = build_osp12_rep(n);
  std::vector<RationalMatrix> gens;
  for (const auto& [name, matrix] : reps.generators) {
    gens.push_back(evaluate_at_q(matrix, q_value));
  }
  return commutant_dimension(gens, reps.dim());
}

bool preserves_components(const PolyMatrix& m, int n) {
  for (int i = 0; i < m.rows(); ++i) {
    for (int j = 0; j < m.cols(); ++j) {
      if ((i < n) != (j < n) && !m.at(i, j).is_zero()) return false;
    }
  }
  return true;
}

bool swaps_components(const PolyMatrix& m, int n) {
  for (int i = 0; i < m.rows(); ++i) {
    for (int j = 0; j < m.cols(); ++j) {
      if ((i < n) == (j < n) && !m.at(i, j).is_zero()) return false;
    }
  }
  return true;
}

}  // namespace qosp
