#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "qosp/algebra.hpp"

namespace qosp {

// A word in the free monoid on the generators, by order index.
using IndexWord = std::vector<int>;

// An element of the free algebra: Laurent-polynomial coefficient per word.
// Canonical form: no zero coefficients stored.
struct Element {
  std::map<IndexWord, LaurentPoly> terms;

  bool is_zero() const { return terms.empty(); }
  bool operator==(const Element& rhs) const { return terms == rhs.terms; }
};

// Adds coeff * word into e, pruning on cancellation.
void element_add_term(Element& e, const IndexWord& word, const LaurentPoly& coeff);
Element element_add(const Element& a, const Element& b);
Element element_sub(const Element& a, const Element& b);
Element element_mul(const Element& a, const Element& b);
Element element_scale(const Element& a, const LaurentPoly& c);

// Applies a parameter substitution to every coefficient (words unchanged).
Element specialize_element(const Element& e, const std::vector<std::string>& new_params,
                           const std::map<std::string, LaurentPoly::Image>& images);

class RewriteError : public std::runtime_error {
 public:
  explicit RewriteError(const std::string& what) : std::runtime_error(what) {}
};

// Raised when a normal-form computation exceeds its rewrite-step budget.
class StepBudgetExceeded : public RewriteError {
 public:
  explicit StepBudgetExceeded(size_t budget)
      : RewriteError("rewrite step budget of " + std::to_string(budget) + " exceeded") {}
};

// Which reducible pair to contract first. Confluent systems give the same
// normal form either way; the property is exercised by tests.
enum class Strategy { LeftmostInnermost, RightmostInnermost };

struct ConfluenceFailure {
  IndexWord overlap;  // length-3 ambiguity word
  Element residual;   // difference of the two one-step resolutions' normal forms
};

struct ConfluenceReport {
  std::string algebra;
  std::string parameter_mode;  // "symbolic" or "evaluated"
  size_t overlaps_total = 0;
  std::vector<ConfluenceFailure> failures;

  bool confluent() const { return failures.empty(); }
};

// Rewrite steps allowed per normal-form call: QOSP_STEP_BUDGET from the
// environment when set (must be a positive integer), else 1'000'000.
size_t default_step_budget();

// Oriented rewriting system for a total presentation: one rule per
// descending two-letter word (and per fermionic square), replacing it with
// strictly smaller terms under the graded order (parity-weighted degree,
// then length, then lexicographic by generator order index; bosonic weight
// 2, fermionic weight 1).
class RewriteSystem {
 public:
  explicit RewriteSystem(AlgebraSpec spec);

  const AlgebraSpec& spec() const { return spec_; }
  size_t rule_count() const { return rules_.size(); }
  const std::map<std::pair<int, int>, Element>& rules() const { return rules_; }

  // Strict comparison in the termination order.
  bool word_less(const IndexWord& a, const IndexWord& b) const;

  Element normal_form(const Element& input, size_t step_budget = default_step_budget(),
                      Strategy strategy = Strategy::LeftmostInnermost) const;

  // All length-3 words on which two rules overlap, sorted.
  std::vector<IndexWord> critical_overlaps() const;

  // Resolves every overlap both ways and reduces to normal form; failures
  // carry the nonzero residuals. Runs across overlaps in parallel when
  // requested (and compiled with OpenMP support).
  ConfluenceReport check_confluence(size_t step_budget = default_step_budget(),
                                    bool parallel = true,
                                    const std::string& parameter_mode = "symbolic") const;

  // Parses an expression over this algebra's generators and parameters.
  Element element_from_expr(const std::string& text) const;
  Element element_from_names(const std::vector<std::string>& word) const;

  // Deterministic rendering, terms ordered by (length, then lexicographic
  // by order index), e.g. "E11 - V1*Vb1".
  std::string element_to_string(const Element& e) const;
  std::string word_to_string(const IndexWord& word) const;

 private:
  void orient();
  int weight(int gen) const { return weights_[static_cast<size_t>(gen)]; }
  long word_weight(const IndexWord& w) const;

  AlgebraSpec spec_;
  std::vector<int> weights_;
  std::map<std::pair<int, int>, Element> rules_;
};

}  // namespace qosp
