#include "qosp/cli.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "qosp/algebra_io.hpp"
#include "qosp/central.hpp"
#include "qosp/expr.hpp"
#include "qosp/parallel.hpp"
#include "qosp/rep.hpp"
#include "qosp/rewrite.hpp"

namespace qosp {

namespace {

using ordered_json = nlohmann::ordered_json;

AlgebraSpec resolve_algebra(const std::string& name) {
  const std::vector<std::string> names = builtin_names();
  if (std::find(names.begin(), names.end(), name) != names.end()) {
    return builtin_by_name(name);
  }
  return load_algebra_file(name);
}

std::string trim(const std::string& s) {
  size_t a = s.find_first_not_of(" \t");
  size_t b = s.find_last_not_of(" \t");
  if (a == std::string::npos) {
    return "";
  }
  return s.substr(a, b - a + 1);
}

// Perturbation syntax: "A,B:monomial", e.g. "E22,E21:s^3".
void apply_perturbation(AlgebraSpec& spec, const std::string& text) {
  const size_t colon = text.find(':');
  const size_t comma = text.find(',');
  if (colon == std::string::npos || comma == std::string::npos || comma > colon) {
    throw AlgebraError("perturbation must have the form \"A,B:monomial\", got \"" + text + "\"");
  }
  const std::string a = trim(text.substr(0, comma));
  const std::string b = trim(text.substr(comma + 1, colon - comma - 1));
  const LaurentPoly coeff = parse_scalar_monomial(text.substr(colon + 1), spec.parameters);
  perturb_coefficient(spec, a, b, coeff);
}

bool constant_coefficients(const AlgebraSpec& spec) {
  for (const Relation& rel : spec.relations) {
    if (!rel.coeff.is_constant()) {
      return false;
    }
    for (const auto& [name, c] : rel.rhs_linear) {
      if (!c.is_constant()) {
        return false;
      }
    }
    for (const auto& [pair, c] : rel.rhs_quadratic) {
      if (!c.is_constant()) {
        return false;
      }
    }
  }
  return true;
}

enum class RepFamily { Osp22, Osp12 };

RepFamily rep_family(const AlgebraSpec& spec) {
  if (spec.has_generator("E11") && spec.has_generator("Vb2")) {
    return RepFamily::Osp22;
  }
  if (spec.has_generator("H") && spec.has_generator("Vm")) {
    return RepFamily::Osp12;
  }
  throw AlgebraError("no matrix representation is available for algebra \"" + spec.name + "\"");
}

// ----- report emission -----

void emit(std::ostream& out, const ordered_json& report, bool json_output,
          const std::string& text) {
  if (json_output) {
    out << report.dump(2) << "\n";
  } else {
    out << text;
  }
}

ordered_json verification_to_json(const VerificationReport& report, const std::string* q_text) {
  ordered_json j;
  j["schema"] = 1;
  j["algebra"] = report.algebra;
  j["n"] = report.n;
  j["mode"] = report.mode;
  if (q_text != nullptr) {
    j["q"] = *q_text;
  }
  j["relations_checked"] = report.relations_checked;
  j["failures"] = ordered_json::array();
  for (const RelationFailure& f : report.failures) {
    ordered_json jf;
    jf["relation_id"] = f.relation_id;
    jf["residual_entries"] = ordered_json::array();
    for (const ResidualEntry& e : f.residual_entries) {
      jf["residual_entries"].push_back({{"row", e.row}, {"col", e.col}, {"value", e.value}});
    }
    j["failures"].push_back(std::move(jf));
  }
  return j;
}

std::string verification_to_text(const VerificationReport& report, const std::string* q_text) {
  std::ostringstream out;
  out << "algebra=" << report.algebra << " n=" << report.n << " mode=" << report.mode;
  if (q_text != nullptr) {
    out << " q=" << *q_text;
  }
  out << " relations_checked=" << report.relations_checked
      << " failures=" << report.failures.size() << "\n";
  for (const RelationFailure& f : report.failures) {
    out << "FAIL " << f.relation_id << ": " << f.residual_entries.size()
        << " nonzero residual entries";
    if (!f.residual_entries.empty()) {
      const ResidualEntry& e = f.residual_entries.front();
      out << ", first at (" << e.row << "," << e.col << ") = " << e.value;
    }
    out << "\n";
  }
  return out.str();
}

// ----- subcommand runners -----

struct CommonFlags {
  std::string algebra;
  std::string output = "text";
  std::string perturb;
  bool serial = false;

  bool json() const { return output == "json"; }
};

int run_verify(const CommonFlags& common, int n, const std::string& mode, const std::string& q_text,
               const std::string& variant, std::ostream& out) {
  AlgebraSpec spec = resolve_algebra(common.algebra);
  if (!common.perturb.empty()) {
    apply_perturbation(spec, common.perturb);
  }
  if (spec.parameters != std::vector<std::string>{"t"}) {
    throw AlgebraError("verification needs a one-parameter algebra over t; \"" + spec.name +
                       "\" is over a different ring");
  }
  const RepFamily family = rep_family(spec);
  if (variant == "literal" && family != RepFamily::Osp22) {
    throw AlgebraError("--variant literal applies only to the eight-generator algebra");
  }
  const FermionVariant fv =
      variant == "literal" ? FermionVariant::Literal : FermionVariant::Repaired;
  RepSet reps = family == RepFamily::Osp22 ? build_osp22_rep(n, fv) : build_osp12_rep(n);
  if (mode == "classical") {
    // Classical mode means the classical limit of the whole check: both the
    // matrices and the relation coefficients are specialized at t = 1.
    reps = classical_limit(reps);
    const std::map<std::string, LaurentPoly::Image> to_one{
        {"t", LaurentPoly::Image{{0}, Rational(1)}}};
    spec = specialize(spec, spec.name, {"t"}, to_one);
  }

  VerificationReport report;
  const std::string* q_for_report = nullptr;
  if (mode == "at-rational") {
    const Rational q = rational_from_string(q_text);
    if (q == 0) {
      throw AlgebraError("--q must be nonzero");
    }
    report.algebra = spec.name;
    report.n = n;
    report.mode = "at-rational";
    report.relations_checked = spec.relations.size();
    for (const Relation& rel : spec.relations) {
      const PolyMatrix residual = check_relation(rel, reps);
      RelationFailure failure;
      failure.relation_id = rel.id();
      for (int i = 0; i < residual.rows(); ++i) {
        for (int j = 0; j < residual.cols(); ++j) {
          const Rational value = evaluate_even_powers(residual.at(i, j), q);
          if (value != 0) {
            failure.residual_entries.push_back({i, j, rational_to_string(value)});
          }
        }
      }
      if (!failure.residual_entries.empty()) {
        report.failures.push_back(std::move(failure));
      }
    }
    q_for_report = &q_text;
  } else {
    report = verify_all(spec, reps, !common.serial, mode);
  }

  emit(out, verification_to_json(report, q_for_report), common.json(),
       verification_to_text(report, q_for_report));
  return report.ok() ? 0 : 1;
}

int run_confluence(const CommonFlags& common, size_t step_budget, std::ostream& out) {
  AlgebraSpec spec = resolve_algebra(common.algebra);
  if (!common.perturb.empty()) {
    apply_perturbation(spec, common.perturb);
  }
  const std::string parameter_mode = constant_coefficients(spec) ? "evaluated" : "symbolic";
  const RewriteSystem system(std::move(spec));
  const ConfluenceReport report = system.check_confluence(step_budget, !common.serial,
                                                          parameter_mode);

  ordered_json j;
  j["schema"] = 1;
  j["algebra"] = report.algebra;
  j["parameter_mode"] = report.parameter_mode;
  j["overlaps_total"] = report.overlaps_total;
  j["overlaps_failed"] = report.failures.size();
  j["failures"] = ordered_json::array();
  std::ostringstream text;
  text << "algebra=" << report.algebra << " parameter_mode=" << report.parameter_mode
       << " overlaps_total=" << report.overlaps_total << " overlaps_failed="
       << report.failures.size() << "\n";
  for (const ConfluenceFailure& f : report.failures) {
    const std::string word = system.word_to_string(f.overlap);
    const std::string residual = system.element_to_string(f.residual);
    j["failures"].push_back({{"word", word}, {"residual", residual}});
    text << "FAIL " << word << ": residual " << residual << "\n";
  }
  emit(out, j, common.json(), text.str());
  return report.confluent() ? 0 : 1;
}

int run_span(const CommonFlags& common, int n, const std::string& q_text, int max_len,
             std::ostream& out) {
  const Rational q = rational_from_string(q_text);
  const int length_cap = max_len >= 0 ? max_len : 4 * n + 2;
  const SpanReport report = osp22_fermion_span(n, q, length_cap);

  ordered_json j;
  j["schema"] = 1;
  j["n"] = report.n;
  j["q"] = rational_to_string(report.q);
  j["ranks_by_word_length"] = report.ranks_by_word_length;
  j["saturated"] = report.saturated;
  j["saturating_length"] = report.saturating_length;

  std::ostringstream text;
  text << "n=" << report.n << " q=" << rational_to_string(report.q) << " ranks=";
  for (size_t i = 0; i < report.ranks_by_word_length.size(); ++i) {
    if (i > 0) {
      text << ",";
    }
    text << report.ranks_by_word_length[i];
  }
  text << " saturated=" << (report.saturated ? "yes" : "no")
       << " saturating_length=" << report.saturating_length << "\n";
  emit(out, j, common.json(), text.str());
  return report.saturated ? 0 : 1;
}

int run_casimir(const CommonFlags& common, int n, const std::string& mode, std::ostream& out) {
  const CasimirReport report = casimir_report(n, mode == "classical");

  ordered_json j;
  j["schema"] = 1;
  j["algebra"] = "osp12q";
  j["n"] = report.n;
  j["mode"] = report.mode;
  j["central_space_dim"] = report.central_space_dim;
  j["scalars"] = report.scalars;
  switch (report.match) {
    case FormulaMatch::Exact:
      j["matches_paper_formula"] = true;
      break;
    case FormulaMatch::UpToNormalization:
      j["matches_paper_formula"] = "up_to_normalization";
      break;
    case FormulaMatch::Mismatch:
      j["matches_paper_formula"] = false;
      break;
  }

  std::ostringstream text;
  text << "algebra=osp12q n=" << report.n << " mode=" << report.mode
       << " central_space_dim=" << report.central_space_dim << " scalars=[";
  for (size_t i = 0; i < report.scalars.size(); ++i) {
    if (i > 0) {
      text << ", ";
    }
    text << report.scalars[i];
  }
  text << "] match=" << formula_match_name(report.match) << "\n";
  emit(out, j, common.json(), text.str());
  return report.match == FormulaMatch::Exact ? 0 : 1;
}

int run_normal_form(const CommonFlags& common, const std::string& expr,
                    const std::string& strategy, size_t step_budget, std::ostream& out) {
  const RewriteSystem system(resolve_algebra(common.algebra));
  const Element input = system.element_from_expr(expr);
  const Strategy s =
      strategy == "rightmost" ? Strategy::RightmostInnermost : Strategy::LeftmostInnermost;
  const Element nf = system.normal_form(input, step_budget, s);
  const std::string rendered = system.element_to_string(nf);

  ordered_json j;
  j["schema"] = 1;
  j["algebra"] = system.spec().name;
  j["input"] = expr;
  j["normal_form"] = rendered;
  emit(out, j, common.json(), rendered + "\n");
  return 0;
}

int run_dump(const CommonFlags& common, std::ostream& out) {
  out << serialize_algebra(resolve_algebra(common.algebra));
  return 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact-arithmetic toolkit for a three-parameter deformation of osp(2,2)"};
  app.require_subcommand(1);

  CommonFlags common;
  int n = 1;
  std::string mode = "symbolic";
  std::string q_text = "2";
  std::string variant = "repaired";
  std::string expr;
  std::string strategy = "leftmost";
  int max_len = -1;
  size_t step_budget = 0;  // 0 = use the environment/default

  auto add_output = [&](CLI::App* cmd) {
    cmd->add_option("--output", common.output, "Report format")
        ->check(CLI::IsMember({"text", "json"}));
  };
  auto add_serial = [&](CLI::App* cmd) {
    cmd->add_flag("--serial", common.serial, "Run single-threaded");
    cmd->add_flag_function(
        "--parallel", [&](int64_t) { common.serial = false; },
        "Run with the OpenMP kernels (default)");
  };

  CLI::App* verify = app.add_subcommand("verify", "Check every relation against the matrices");
  verify->add_option("--algebra", common.algebra, "Built-in name or relation-file path")
      ->default_val("osp22q");
  verify->add_option("--n", n, "Module index")->required()->check(CLI::PositiveNumber);
  verify->add_option("--mode", mode, "symbolic | classical | at-rational")
      ->check(CLI::IsMember({"symbolic", "classical", "at-rational"}));
  verify->add_option("--q", q_text, "Rational value for at-rational mode");
  verify->add_option("--variant", variant, "Fourth-fermion normalization")
      ->check(CLI::IsMember({"repaired", "literal"}));
  verify->add_option("--perturb", common.perturb, "Coefficient override \"A,B:monomial\"");
  add_serial(verify);
  add_output(verify);

  CLI::App* confluence = app.add_subcommand("confluence", "Resolve all critical overlaps");
  confluence->add_option("--algebra", common.algebra, "Built-in name or relation-file path")
      ->default_val("osp22prs");
  confluence->add_option("--perturb", common.perturb, "Coefficient override \"A,B:monomial\"");
  confluence->add_option("--step-budget", step_budget, "Rewrite steps allowed per normal form");
  add_serial(confluence);
  add_output(confluence);

  CLI::App* span = app.add_subcommand("span", "Rank growth of fermionic words");
  span->add_option("--n", n, "Module index")->required()->check(CLI::PositiveNumber);
  span->add_option("--q", q_text, "Rational evaluation point");
  span->add_option("--max-len", max_len, "Longest word length to include");
  add_output(span);

  CLI::App* casimir = app.add_subcommand("casimir", "Joint central quadratic search");
  casimir->add_option("--n", n, "Module index")->required()->check(CLI::PositiveNumber);
  casimir->add_option("--mode", mode, "symbolic | classical")
      ->check(CLI::IsMember({"symbolic", "classical"}));
  add_output(casimir);

  CLI::App* normal_form = app.add_subcommand("normal-form", "Reduce an expression");
  normal_form->add_option("--algebra", common.algebra, "Built-in name or relation-file path")
      ->default_val("osp22q");
  normal_form->add_option("--expr", expr, "Expression to reduce")->required();
  normal_form->add_option("--strategy", strategy, "leftmost | rightmost")
      ->check(CLI::IsMember({"leftmost", "rightmost"}));
  normal_form->add_option("--step-budget", step_budget, "Rewrite steps allowed per normal form");
  add_output(normal_form);

  CLI::App* dump = app.add_subcommand("dump-algebra", "Serialize a presentation");
  dump->add_option("--algebra", common.algebra, "Built-in name or relation-file path")
      ->default_val("osp22prs");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    return 2;
  }

  if (common.serial) {
    parallel::enabled() = false;
  }

  try {
    const size_t budget = step_budget > 0 ? step_budget : default_step_budget();
    if (verify->parsed()) {
      return run_verify(common, n, mode, q_text, variant, out);
    }
    if (confluence->parsed()) {
      return run_confluence(common, budget, out);
    }
    if (span->parsed()) {
      return run_span(common, n, q_text, max_len, out);
    }
    if (casimir->parsed()) {
      return run_casimir(common, n, mode, out);
    }
    if (normal_form->parsed()) {
      return run_normal_form(common, expr, strategy, budget, out);
    }
    if (dump->parsed()) {
      return run_dump(common, out);
    }
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  err << "error: no command selected\n";
  return 2;
}

}  // namespace qosp
