#include "qosp/central.hpp"

#include <algorithm>
#include <map>

#include "qosp/linalg.hpp"

namespace qosp {

namespace {

const std::vector<std::string> kVars{"t"};

const std::vector<std::string>& generator_order() {
  static const std::vector<std::string> order{"H", "Jm", "Jp", "Vm", "Vp"};
  return order;
}

void check_probes(const std::vector<int>& probe_ns) {
  if (probe_ns.empty()) {
    throw CentralError("at least one module index is required");
  }
  for (size_t i = 0; i < probe_ns.size(); ++i) {
    if (probe_ns[i] < 1) {
      throw CentralError("module indices must be >= 1");
    }
    if (i > 0 && probe_ns[i] <= probe_ns[i - 1]) {
      throw CentralError("module indices must be strictly increasing");
    }
  }
}

struct ProbeData {
  int n = 0;
  int dim = 0;
  std::vector<PolyMatrix> word_matrices;  // aligned with quadratic_words()
  std::vector<PolyMatrix> generators;     // aligned with generator_order()
};

ProbeData build_probe(int n, bool classical) {
  RepSet reps = build_osp12_rep(n);
  if (classical) {
    reps = classical_limit(reps);
  }
  ProbeData data;
  data.n = n;
  data.dim = reps.dim();
  for (const std::string& g : generator_order()) {
    data.generators.push_back(reps.at(g));
  }
  const LaurentPoly zero(kVars);
  const LaurentPoly one = LaurentPoly::constant(kVars, Rational(1));
  for (const auto& word : quadratic_words()) {
    PolyMatrix m = PolyMatrix::identity(data.dim, zero, one);
    for (const std::string& g : word) {
      m = m * reps.at(g);
    }
    data.word_matrices.push_back(std::move(m));
  }
  return data;
}

// Evaluates sum_w c_w * W_w on one probe.
PolyMatrix combine(const ProbeData& probe, const std::vector<LaurentPoly>& coeffs) {
  const LaurentPoly zero(kVars);
  PolyMatrix acc(probe.dim, probe.dim, zero);
  for (size_t w = 0; w < coeffs.size(); ++w) {
    if (coeffs[w].is_zero()) {
      continue;
    }
    acc = acc + probe.word_matrices[w].scaled(coeffs[w]);
  }
  return acc;
}

QuadraticElement element_from_coeffs(const std::vector<LaurentPoly>& coeffs) {
  QuadraticElement element;
  const auto& words = quadratic_words();
  for (size_t w = 0; w < coeffs.size(); ++w) {
    if (coeffs[w].is_zero()) {
      continue;
    }
    element.words.push_back(words[w]);
    element.coeffs.push_back(coeffs[w]);
  }
  return element;
}

// Row-echelon accumulator over rational-function tuples, used to organise
// the scalar functions found by the searches.
class TupleEchelon {
 public:
  // Reduces v against the stored rows; if a nonzero remainder survives, the
  // remainder is stored and true is returned.
  bool insert(std::vector<RatFunc> v) {
    if (!reduce(v)) {
      return false;
    }
    const int lead = leading(v);
    const RatFunc pivot = v[lead];
    for (auto& entry : v) {
      entry = entry / pivot;
    }
    const size_t pos = insert_position(lead);
    rows_.insert(rows_.begin() + static_cast<long>(pos), std::move(v));
    leads_.insert(leads_.begin() + static_cast<long>(pos), lead);
    return true;
  }

  bool contains(std::vector<RatFunc> v) const { return !reduce(v); }

  int rank() const { return static_cast<int>(rows_.size()); }

 private:
  static int leading(const std::vector<RatFunc>& v) {
    for (size_t i = 0; i < v.size(); ++i) {
      if (!v[i].is_zero()) {
        return static_cast<int>(i);
      }
    }
    return -1;
  }

  size_t insert_position(int lead) const {
    size_t pos = 0;
    while (pos < leads_.size() && leads_[pos] < lead) {
      ++pos;
    }
    return pos;
  }

  // Returns true iff a nonzero remainder is left in v.
  bool reduce(std::vector<RatFunc>& v) const {
    for (size_t r = 0; r < rows_.size(); ++r) {
      const int lead = leads_[r];
      if (v[lead].is_zero()) {
        continue;
      }
      const RatFunc factor = v[lead];
      for (size_t i = 0; i < v.size(); ++i) {
        v[i] = v[i] - factor * rows_[r][i];
      }
    }
    return leading(v) >= 0;
  }

  std::vector<std::vector<RatFunc>> rows_;
  std::vector<int> leads_;
};

std::vector<RatFunc> reference_tuple(const std::vector<int>& probe_ns, bool classical) {
  std::vector<RatFunc> target;
  for (int n : probe_ns) {
    if (classical) {
      target.push_back(RatFunc::constant(kVars, casimir_reference_value_classical(n)));
    } else {
      target.push_back(casimir_reference_value(n));
    }
  }
  return target;
}

bool tuple_equal(const std::vector<RatFunc>& a, const std::vector<RatFunc>& b) {
  for (size_t i = 0; i < a.size(); ++i) {
    if (!ratfunc_eq(a[i], b[i])) {
      return false;
    }
  }
  return true;
}

bool tuple_constant(const std::vector<RatFunc>& v) {
  for (size_t i = 1; i < v.size(); ++i) {
    if (!ratfunc_eq(v[i], v[0])) {
      return false;
    }
  }
  return true;
}

}  // namespace

bool QuadraticElement::is_identity_only() const {
  for (const auto& word : words) {
    if (!word.empty()) {
      return false;
    }
  }
  return true;
}

std::string QuadraticElement::to_string() const {
  if (words.empty()) {
    return "0";
  }
  std::string out;
  for (size_t i = 0; i < words.size(); ++i) {
    if (i > 0) {
      out += " + ";
    }
    std::string word_text;
    for (size_t k = 0; k < words[i].size(); ++k) {
      if (k > 0) {
        word_text += "*";
      }
      word_text += words[i][k];
    }
    const LaurentPoly& c = coeffs[i];
    if (word_text.empty()) {
      out += c.to_string();
    } else if (c.is_one()) {
      out += word_text;
    } else if (c.terms().size() > 1) {
      out += "(" + c.to_string() + ")*" + word_text;
    } else {
      out += c.to_string() + "*" + word_text;
    }
  }
  return out;
}

std::string formula_match_name(FormulaMatch m) {
  switch (m) {
    case FormulaMatch::Exact:
      return "exact";
    case FormulaMatch::UpToNormalization:
      return "up_to_normalization";
    case FormulaMatch::Mismatch:
      return "mismatch";
  }
  return "mismatch";
}

const CentralDirection& CentralSearchResult::primary() const {
  for (const CentralDirection& d : directions) {
    if (!d.element.is_identity_only()) {
      return d;
    }
  }
  throw CentralError("no non-identity scalar-acting direction was found");
}

bool CentralSearchResult::has_non_identity() const {
  for (const CentralDirection& d : directions) {
    if (!d.element.is_identity_only()) {
      return true;
    }
  }
  return false;
}

RatFunc casimir_reference_value(int n) {
  if (n < 1) {
    throw CentralError("module index must be >= 1");
  }
  // -(1/2) * (1 - t^(-2(2n+1))) / (1 - t^4)
  LaurentPoly num = LaurentPoly::constant(kVars, Rational(-1, 2)) +
                    LaurentPoly::monomial(kVars, {-2 * (2 * n + 1)}, Rational(1, 2));
  LaurentPoly den = LaurentPoly::constant(kVars, Rational(1)) +
                    LaurentPoly::monomial(kVars, {4}, Rational(-1));
  return RatFunc(std::move(num), std::move(den));
}

Rational casimir_reference_value_classical(int n) {
  if (n < 1) {
    throw CentralError("module index must be >= 1");
  }
  return Rational(2 * n + 1, 4);
}

std::vector<std::vector<std::string>> quadratic_words() {
  std::vector<std::vector<std::string>> words;
  words.push_back({});
  for (const std::string& g : generator_order()) {
    words.push_back({g});
  }
  for (const std::string& g : generator_order()) {
    for (const std::string& h : generator_order()) {
      words.push_back({g, h});
    }
  }
  return words;
}

CentralSearchResult central_quadratic_search(const std::vector<int>& probe_ns, bool classical) {
  check_probes(probe_ns);
  const int nwords = static_cast<int>(quadratic_words().size());

  std::vector<ProbeData> probes;
  for (int n : probe_ns) {
    probes.push_back(build_probe(n, classical));
  }

  // One linear condition per entry of each commutator [sum_w c_w W_w, G].
  std::vector<std::vector<LaurentPoly>> rows;
  for (const ProbeData& probe : probes) {
    for (const PolyMatrix& g : probe.generators) {
      std::vector<PolyMatrix> commutators;
      commutators.reserve(nwords);
      for (const PolyMatrix& w : probe.word_matrices) {
        commutators.push_back(w * g - g * w);
      }
      for (int i = 0; i < probe.dim; ++i) {
        for (int j = 0; j < probe.dim; ++j) {
          std::vector<LaurentPoly> row;
          row.reserve(nwords);
          bool all_zero = true;
          for (const PolyMatrix& k : commutators) {
            row.push_back(k.at(i, j));
            all_zero = all_zero && row.back().is_zero();
          }
          if (!all_zero) {
            rows.push_back(std::move(row));
          }
        }
      }
    }
  }

  const auto basis = nullspace_poly(std::move(rows), nwords, kVars);

  CentralSearchResult result;
  result.probe_ns = probe_ns;
  result.mode = classical ? "classical" : "symbolic";
  result.solution_dim = static_cast<int>(basis.size());

  // The identity element is always a solution; it seeds the presentation so
  // that the constant scalar direction is reported first.
  {
    CentralDirection identity;
    identity.element.words.push_back({});
    identity.element.coeffs.push_back(LaurentPoly::constant(kVars, Rational(1)));
    identity.scalars.assign(probe_ns.size(), RatFunc::constant(kVars, Rational(1)));
    result.directions.push_back(std::move(identity));
  }
  TupleEchelon echelon;
  echelon.insert(std::vector<RatFunc>(probe_ns.size(), RatFunc::constant(kVars, Rational(1))));

  for (const auto& coeffs : basis) {
    std::vector<RatFunc> tuple;
    for (const ProbeData& probe : probes) {
      const PolyMatrix m = combine(probe, coeffs);
      for (int i = 0; i < probe.dim; ++i) {
        for (int j = 0; j < probe.dim; ++j) {
          if (i == j) {
            continue;
          }
          if (!m.at(i, j).is_zero()) {
            throw CentralError("commuting element is not scalar; the module is not irreducible");
          }
        }
      }
      for (int i = 1; i < probe.dim; ++i) {
        if (!(m.at(i, i) == m.at(0, 0))) {
          throw CentralError("commuting element is not scalar; the module is not irreducible");
        }
      }
      tuple.push_back(RatFunc(m.at(0, 0)));
    }
    if (echelon.insert(tuple)) {
      CentralDirection direction;
      direction.element = element_from_coeffs(coeffs);
      direction.scalars = std::move(tuple);
      result.directions.push_back(std::move(direction));
    }
  }
  // The identity's scalar tuple lies in the span of the solution basis, so
  // the echelon rank equals the dimension of the scalar-acting quotient.
  result.null_dim = result.solution_dim - echelon.rank();

  // Verdict against the reference value function.
  const std::vector<RatFunc> target = reference_tuple(probe_ns, classical);
  result.match = FormulaMatch::Mismatch;
  for (size_t d = 1; d < result.directions.size(); ++d) {
    if (tuple_equal(result.directions[d].scalars, target)) {
      result.match = FormulaMatch::Exact;
      break;
    }
  }
  if (result.match == FormulaMatch::Mismatch && !tuple_constant(target) &&
      echelon.contains(target)) {
    result.match = FormulaMatch::UpToNormalization;
  }
  return result;
}

ComponentScalarResult component_scalar_search(const std::vector<int>& probe_ns, bool classical) {
  check_probes(probe_ns);
  const int nwords = static_cast<int>(quadratic_words().size());

  std::vector<ProbeData> probes;
  for (int n : probe_ns) {
    probes.push_back(build_probe(n, classical));
  }

  // Conditions: all off-diagonal entries vanish; diagonal entries agree
  // within the first component (indices < n) and within the second.
  std::vector<std::vector<LaurentPoly>> rows;
  for (const ProbeData& probe : probes) {
    auto push_row = [&](auto&& entry_of) {
      std::vector<LaurentPoly> row;
      row.reserve(nwords);
      bool all_zero = true;
      for (const PolyMatrix& w : probe.word_matrices) {
        row.push_back(entry_of(w));
        all_zero = all_zero && row.back().is_zero();
      }
      if (!all_zero) {
        rows.push_back(std::move(row));
      }
    };
    for (int i = 0; i < probe.dim; ++i) {
      for (int j = 0; j < probe.dim; ++j) {
        if (i != j) {
          push_row([&](const PolyMatrix& w) { return w.at(i, j); });
        }
      }
    }
    for (int i = 1; i < probe.n; ++i) {
      push_row([&](const PolyMatrix& w) { return w.at(i, i) - w.at(0, 0); });
    }
    for (int i = probe.n + 1; i < probe.dim; ++i) {
      push_row([&](const PolyMatrix& w) { return w.at(i, i) - w.at(probe.n, probe.n); });
    }
  }

  const auto basis = nullspace_poly(std::move(rows), nwords, kVars);

  ComponentScalarResult result;
  result.probe_ns = probe_ns;
  result.mode = classical ? "classical" : "symbolic";
  result.solution_dim = static_cast<int>(basis.size());

  TupleEchelon echelon;
  {
    // Identity: scalar 1 on both components.
    std::vector<RatFunc> one(2 * probe_ns.size(), RatFunc::constant(kVars, Rational(1)));
    echelon.insert(one);
    ComponentScalarDirection identity;
    identity.element.words.push_back({});
    identity.element.coeffs.push_back(LaurentPoly::constant(kVars, Rational(1)));
    identity.upper_scalars.assign(probe_ns.size(), RatFunc::constant(kVars, Rational(1)));
    identity.lower_scalars.assign(probe_ns.size(), RatFunc::constant(kVars, Rational(1)));
    result.directions.push_back(std::move(identity));
  }

  for (const auto& coeffs : basis) {
    std::vector<RatFunc> upper, lower;
    for (const ProbeData& probe : probes) {
      const PolyMatrix m = combine(probe, coeffs);
      upper.push_back(RatFunc(m.at(0, 0)));
      lower.push_back(RatFunc(m.at(probe.n, probe.n)));
    }
    std::vector<RatFunc> tuple = upper;
    tuple.insert(tuple.end(), lower.begin(), lower.end());
    if (echelon.insert(tuple)) {
      ComponentScalarDirection direction;
      direction.element = element_from_coeffs(coeffs);
      direction.upper_scalars = std::move(upper);
      direction.lower_scalars = std::move(lower);
      result.directions.push_back(std::move(direction));
    }
  }
  result.null_dim = result.solution_dim - echelon.rank();

  // Is diag(+C(n), -C(n)) realised?
  const std::vector<RatFunc> ref = reference_tuple(probe_ns, classical);
  std::vector<RatFunc> flipped = ref;
  for (const RatFunc& value : ref) {
    flipped.push_back(-value);
  }
  result.reference_realized_with_sign_flip = echelon.contains(flipped);
  return result;
}

CasimirReport casimir_report(int n, bool classical) {
  if (n < 1) {
    throw CentralError("module index must be >= 1");
  }
  std::vector<int> probes;
  for (int k = 1; k <= std::max(4, n); ++k) {
    probes.push_back(k);
  }
  const CentralSearchResult result = central_quadratic_search(probes, classical);
  const size_t index = static_cast<size_t>(n - 1);

  CasimirReport report;
  report.n = n;
  report.mode = result.mode;
  report.central_space_dim = result.scalar_dim();
  for (const CentralDirection& d : result.directions) {
    report.scalars.push_back(d.scalars[index].to_string());
  }
  report.match = result.match;
  return report;
}

}  // namespace qosp
