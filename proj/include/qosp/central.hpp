#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "qosp/ratfunc.hpp"
#include "qosp/rep.hpp"

namespace qosp {

// Searches the degree-at-most-two slice of the enveloping algebra of the
// deformed osp(1,2) for elements whose images commute with all five
// generator matrices on every probed module at once. Because each module is
// irreducible, every such element acts as a scalar on each module; the
// search reports a basis of the achievable scalar functions n -> value and
// compares them against the built-in reference value
//
//     C(n) = -(1/2) * (1 - t^(-2(2n+1))) / (1 - t^4),
//
// whose classical limit (t = 1) is (2n+1)/4.

class CentralError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An element of the quadratic slice: exact coefficients attached to the
// words {1} ∪ {g} ∪ {g*h} over the generators H, Jm, Jp, Vm, Vp.
struct QuadraticElement {
  // Parallel arrays: words[i] (empty = identity) with coefficient coeffs[i].
  std::vector<std::vector<std::string>> words;
  std::vector<LaurentPoly> coeffs;

  bool is_identity_only() const;
  std::string to_string() const;
};

// One independent scalar-acting direction found by the search.
struct CentralDirection {
  QuadraticElement element;
  std::vector<RatFunc> scalars;  // scalar on each probed module, aligned with probe_ns
};

enum class FormulaMatch { Exact, UpToNormalization, Mismatch };

std::string formula_match_name(FormulaMatch m);

struct CentralSearchResult {
  std::vector<int> probe_ns;
  std::string mode;       // "symbolic" or "classical"
  int solution_dim = 0;   // dimension of the joint commuting solution space
  int null_dim = 0;       // directions acting as zero on every probed module
  // Basis of the scalar-acting quotient; the identity direction comes first.
  std::vector<CentralDirection> directions;
  FormulaMatch match = FormulaMatch::Mismatch;

  int scalar_dim() const { return static_cast<int>(directions.size()); }
  // First direction whose element is not a multiple of the identity word;
  // throws CentralError if none exists.
  const CentralDirection& primary() const;
  bool has_non_identity() const;
};

// Reference value in symbolic mode (rational function of t) and its
// classical limit.
RatFunc casimir_reference_value(int n);
Rational casimir_reference_value_classical(int n);

// The deterministic word list spanning the quadratic slice: identity, the
// five generators in name order, then the twenty-five ordered pairs.
std::vector<std::vector<std::string>> quadratic_words();

// Joint search over the listed modules. `classical` evaluates everything at
// t = 1 and compares against (2n+1)/4 instead of C(n).
CentralSearchResult central_quadratic_search(const std::vector<int>& probe_ns,
                                             bool classical = false);

// Diagnostic companion search: elements of the same quadratic slice acting
// as a (possibly different) scalar on each of the two components, i.e.
// diag(a·I_n, b·I_{n+1}), without any commutation requirement. Used to
// probe whether the reference value is realised component-wise when it is
// not realised centrally.
struct ComponentScalarDirection {
  QuadraticElement element;
  std::vector<RatFunc> upper_scalars;  // action on the first component
  std::vector<RatFunc> lower_scalars;  // action on the second component
};

struct ComponentScalarResult {
  std::vector<int> probe_ns;
  std::string mode;
  int solution_dim = 0;
  int null_dim = 0;
  std::vector<ComponentScalarDirection> directions;
  // True iff some solution acts as diag(C(n)·I, -C(n)·I) on every probe.
  bool reference_realized_with_sign_flip = false;
};

ComponentScalarResult component_scalar_search(const std::vector<int>& probe_ns,
                                              bool classical = false);

// Per-module report in the shape used by the command-line front end.
struct CasimirReport {
  int n = 0;
  std::string mode;
  int central_space_dim = 0;          // scalar-acting dimension of the joint search
  std::vector<std::string> scalars;   // scalars of the basis directions at this n
  FormulaMatch match = FormulaMatch::Mismatch;
};

// Runs the joint search over modules 1..max(4, n) and restricts the report
// to the requested module.
CasimirReport casimir_report(int n, bool classical = false);

}  // namespace qosp
