#include "qosp/rewrite.hpp"

#include <algorithm>
#include <cstdlib>
#include <exception>
#include <optional>

#include "qosp/expr.hpp"
#include "qosp/parallel.hpp"

namespace qosp {

void element_add_term(Element& e, const IndexWord& word, const LaurentPoly& coeff) {
  if (coeff.is_zero()) return;
  auto it = e.terms.find(word);
  if (it == e.terms.end()) {
    e.terms.emplace(word, coeff);
    return;
  }
  it->second += coeff;
  if (it->second.is_zero()) e.terms.erase(it);
}

Element element_add(const Element& a, const Element& b) {
  Element out = a;
  for (const auto& [word, coeff] : b.terms) element_add_term(out, word, coeff);
  return out;
}

Element element_sub(const Element& a, const Element& b) {
  Element out = a;
  for (const auto& [word, coeff] : b.terms) element_add_term(out, word, -coeff);
  return out;
}

Element element_mul(const Element& a, const Element& b) {
  Element out;
  for (const auto& [wa, ca] : a.terms) {
    for (const auto& [wb, cb] : b.terms) {
      IndexWord word = wa;
      word.insert(word.end(), wb.begin(), wb.end());
      element_add_term(out, word, ca * cb);
    }
  }
  return out;
}

Element element_scale(const Element& a, const LaurentPoly& c) {
  Element out;
  for (const auto& [word, coeff] : a.terms) element_add_term(out, word, coeff * c);
  return out;
}

Element specialize_element(const Element& e, const std::vector<std::string>& new_params,
                           const std::map<std::string, LaurentPoly::Image>& images) {
  Element out;
  for (const auto& [word, coeff] : e.terms) {
    element_add_term(out, word, coeff.substitute(new_params, images));
  }
  return out;
}

size_t default_step_budget() {
  const char* env = std::getenv("QOSP_STEP_BUDGET");
  if (env == nullptr || *env == '\0') return 1000000;
  const std::string text(env);
  if (text.find_first_not_of("0123456789") != std::string::npos) {
    throw RewriteError("QOSP_STEP_BUDGET must be a positive integer, got '" + text + "'");
  }
  errno = 0;
  const unsigned long long value = std::strtoull(text.c_str(), nullptr, 10);
  if (errno != 0 || value == 0) {
    throw RewriteError("QOSP_STEP_BUDGET must be a positive integer, got '" + text + "'");
  }
  return static_cast<size_t>(value);
}

RewriteSystem::RewriteSystem(AlgebraSpec spec) : spec_(std::move(spec)) {
  spec_.validate();
  if (!spec_.total) {
    throw RewriteError("cannot orient partial presentation '" + spec_.name +
                       "': pair coverage is incomplete");
  }
  weights_.reserve(spec_.generators.size());
  for (const Generator& g : spec_.generators) {
    weights_.push_back(g.parity == Parity::Fermionic ? 1 : 2);
  }
  orient();
}

long RewriteSystem::word_weight(const IndexWord& w) const {
  long total = 0;
  for (int g : w) total += weight(g);
  return total;
}

bool RewriteSystem::word_less(const IndexWord& a, const IndexWord& b) const {
  const long wa = word_weight(a);
  const long wb = word_weight(b);
  if (wa != wb) return wa < wb;
  if (a.size() != b.size()) return a.size() < b.size();
  return a < b;
}

namespace {

LaurentPoly invert_or_throw(const LaurentPoly& c, const std::string& relation_id) {
  if (c.is_zero() || !c.is_monomial()) {
    throw RewriteError("bracket coefficient of relation (" + relation_id +
                       ") is not an invertible Laurent monomial: " + c.to_string());
  }
  return c.inverse();
}

}  // namespace

void RewriteSystem::orient() {
  for (const Relation& rel : spec_.relations) {
    if (rel.coeff.is_zero() || !rel.coeff.is_monomial()) {
      throw RewriteError("bracket coefficient of relation (" + rel.id() +
                         ") is not an invertible Laurent monomial: " + rel.coeff.to_string());
    }
    const int il = spec_.order_index(rel.left);
    const int ir = spec_.order_index(rel.right);
    // Relation as stored: L R + sigma c R L = rhs.
    const Rational sigma(rel.kind == BracketKind::Antiquommutator ? 1 : -1);
    Element rhs;
    for (const auto& [gname, c] : rel.rhs_linear) {
      element_add_term(rhs, {spec_.order_index(gname)}, c);
    }
    for (const auto& [pair_names, c] : rel.rhs_quadratic) {
      element_add_term(
          rhs, {spec_.order_index(pair_names.first), spec_.order_index(pair_names.second)}, c);
    }

    std::pair<int, int> lhs;
    Element replacement;
    if (rel.is_square()) {
      if (rel.kind != BracketKind::Antiquommutator) {
        throw RewriteError("square relation (" + rel.id() + ") must be an antiquommutator");
      }
      // (1 + c) A A = rhs.
      const LaurentPoly scale =
          invert_or_throw(spec_.one() + rel.coeff, rel.id() + ", 1 + coefficient");
      lhs = {il, il};
      replacement = element_scale(rhs, scale);
    } else if (il > ir) {
      // L R already descending: L R -> -sigma c R L + rhs.
      lhs = {il, ir};
      replacement = rhs;
      element_add_term(replacement, {ir, il}, rel.coeff * (-sigma));
    } else {
      // R L descending: R L = (rhs - L R) / (sigma c).
      const LaurentPoly inv = invert_or_throw(rel.coeff * sigma, rel.id());
      lhs = {ir, il};
      replacement = element_scale(rhs, inv);
      element_add_term(replacement, {il, ir}, -inv);
    }

    const IndexWord lhs_word{lhs.first, lhs.second};
    for (const auto& [word, coeff] : replacement.terms) {
      if (!word_less(word, lhs_word)) {
        throw RewriteError("rule for relation (" + rel.id() + ") replaces " +
                           word_to_string(lhs_word) + " with the non-smaller word " +
                           word_to_string(word) + "; termination order violated");
      }
    }
    if (!rules_.emplace(lhs, std::move(replacement)).second) {
      throw RewriteError("two relations orient to the same left-hand side " +
                         word_to_string(lhs_word));
    }
  }
}

Element RewriteSystem::normal_form(const Element& input, size_t step_budget,
                                   Strategy strategy) const {
  Element result;
  Element work = input;
  size_t steps = 0;
  while (!work.terms.empty()) {
    auto first = work.terms.begin();
    const IndexWord word = first->first;
    const LaurentPoly coeff = first->second;
    work.terms.erase(first);

    // Locate a reducible adjacent pair.
    std::optional<size_t> redex;
    if (word.size() >= 2) {
      if (strategy == Strategy::LeftmostInnermost) {
        for (size_t i = 0; i + 1 < word.size(); ++i) {
          if (rules_.count({word[i], word[i + 1]})) {
            redex = i;
            break;
          }
        }
      } else {
        for (size_t i = word.size() - 1; i-- > 0;) {
          if (rules_.count({word[i], word[i + 1]})) {
            redex = i;
            break;
          }
        }
      }
    }

    if (!redex) {
      element_add_term(result, word, coeff);
      continue;
    }
    if (++steps > step_budget) throw StepBudgetExceeded(step_budget);

    const Element& replacement = rules_.at({word[*redex], word[*redex + 1]});
    for (const auto& [mid, mid_coeff] : replacement.terms) {
      IndexWord next;
      next.reserve(word.size() - 2 + mid.size());
      next.insert(next.end(), word.begin(), word.begin() + static_cast<long>(*redex));
      next.insert(next.end(), mid.begin(), mid.end());
      next.insert(next.end(), word.begin() + static_cast<long>(*redex) + 2, word.end());
      element_add_term(work, next, coeff * mid_coeff);
    }
  }
  return result;
}

std::vector<IndexWord> RewriteSystem::critical_overlaps() const {
  std::vector<IndexWord> out;
  for (const auto& [left, unused_l] : rules_) {
    for (const auto& [right, unused_r] : rules_) {
      if (left.second == right.first) {
        out.push_back({left.first, left.second, right.second});
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

ConfluenceReport RewriteSystem::check_confluence(size_t step_budget, bool parallel,
                                                 const std::string& parameter_mode) const {
  const std::vector<IndexWord> overlaps = critical_overlaps();
  ConfluenceReport report;
  report.algebra = spec_.name;
  report.parameter_mode = parameter_mode;
  report.overlaps_total = overlaps.size();

  std::vector<std::optional<ConfluenceFailure>> slots(overlaps.size());
  std::exception_ptr failure;
  const bool use_parallel = parallel && parallel::enabled();

#if defined(QOSP_HAVE_OPENMP)
#pragma omp parallel for schedule(dynamic) if (use_parallel)
#endif
  for (size_t i = 0; i < overlaps.size(); ++i) {
    try {
      const IndexWord& word = overlaps[i];
      const Element left_rhs = rules_.at({word[0], word[1]});
      const Element right_rhs = rules_.at({word[1], word[2]});
      Element tail;
      element_add_term(tail, {word[2]}, spec_.one());
      Element head;
      element_add_term(head, {word[0]}, spec_.one());

      const Element via_left = normal_form(element_mul(left_rhs, tail), step_budget);
      const Element via_right = normal_form(element_mul(head, right_rhs), step_budget);
      const Element residual = element_sub(via_left, via_right);
      if (!residual.is_zero()) {
        slots[i] = ConfluenceFailure{word, residual};
      }
    } catch (...) {
#if defined(QOSP_HAVE_OPENMP)
#pragma omp critical
#endif
      {
        if (!failure) failure = std::current_exception();
      }
    }
  }
  if (failure) std::rethrow_exception(failure);

  for (auto& slot : slots) {
    if (slot) report.failures.push_back(std::move(*slot));
  }
  return report;
}

Element RewriteSystem::element_from_expr(const std::string& text) const {
  std::vector<std::string> names;
  names.reserve(spec_.generators.size());
  for (const Generator& g : spec_.generators) names.push_back(g.name);
  const ExprTerms parsed = parse_element(text, names, spec_.parameters);
  Element out;
  for (const auto& [word, coeff] : parsed) {
    IndexWord iw;
    iw.reserve(word.size());
    for (const std::string& gname : word) iw.push_back(spec_.order_index(gname));
    element_add_term(out, iw, coeff);
  }
  return out;
}

Element RewriteSystem::element_from_names(const std::vector<std::string>& word) const {
  IndexWord iw;
  iw.reserve(word.size());
  for (const std::string& gname : word) iw.push_back(spec_.order_index(gname));
  Element out;
  out.terms.emplace(std::move(iw), spec_.one());
  return out;
}

std::string RewriteSystem::word_to_string(const IndexWord& word) const {
  std::string out;
  for (size_t i = 0; i < word.size(); ++i) {
    if (i) out += "*";
    out += spec_.generators[static_cast<size_t>(word[i])].name;
  }
  return out;
}

std::string RewriteSystem::element_to_string(const Element& e) const {
  if (e.terms.empty()) return "0";

  std::vector<const std::pair<const IndexWord, LaurentPoly>*> parts;
  for (const auto& term : e.terms) parts.push_back(&term);
  std::sort(parts.begin(), parts.end(), [](const auto* a, const auto* b) {
    if (a->first.size() != b->first.size()) return a->first.size() < b->first.size();
    return a->first < b->first;
  });

  std::string out;
  const LaurentPoly minus_one = LaurentPoly::constant(spec_.parameters, Rational(-1));
  for (const auto* part : parts) {
    const IndexWord& word = part->first;
    const LaurentPoly& coeff = part->second;
    const bool first = out.empty();
    const std::string word_str = word_to_string(word);

    if (word.empty()) {
      // Scalar term.
      if (coeff.is_monomial() || first) {
        if (first) {
          out += coeff.to_string();
        } else if (sgn(coeff.leading_coefficient()) < 0) {
          out += " - " + (-coeff).to_string();
        } else {
          out += " + " + coeff.to_string();
        }
      } else {
        out += " + (" + coeff.to_string() + ")";
      }
      continue;
    }
    if (coeff.is_one()) {
      out += first ? word_str : " + " + word_str;
    } else if (coeff == minus_one) {
      out += first ? "-" + word_str : " - " + word_str;
    } else if (coeff.is_monomial()) {
      if (first) {
        out += coeff.to_string() + " * " + word_str;
      } else if (sgn(coeff.leading_coefficient()) < 0) {
        out += " - " + (-coeff).to_string() + " * " + word_str;
      } else {
        out += " + " + coeff.to_string() + " * " + word_str;
      }
    } else {
      const std::string piece = "(" + coeff.to_string() + ") * " + word_str;
      out += first ? piece : " + " + piece;
    }
  }
  return out;
}

}  // namespace qosp
