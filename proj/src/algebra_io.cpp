#include "qosp/algebra_io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "qosp/expr.hpp"

namespace qosp {

namespace {

std::string render_coeff(const LaurentPoly& coeff) {
  if (coeff.is_one()) return "1";
  return "{" + coeff.to_string() + "}";
}

std::string render_word(const std::vector<std::string>& word) {
  std::string out;
  for (size_t i = 0; i < word.size(); ++i) {
    if (i) out += "*";
    out += word[i];
  }
  return out;
}

void append_term(std::string& rhs, const LaurentPoly& coeff, const std::string& word) {
  const bool first = rhs.empty();
  if (coeff.is_one()) {
    rhs += first ? word : " + " + word;
    return;
  }
  LaurentPoly minus_one = LaurentPoly::constant(coeff.vars(), Rational(-1));
  if (coeff == minus_one) {
    rhs += first ? "-" + word : " - " + word;
    return;
  }
  const std::string piece = "(" + coeff.to_string() + ") * " + word;
  rhs += first ? piece : " + " + piece;
}

std::string render_rhs(const AlgebraSpec& spec, const Relation& rel) {
  // Linear terms first (by generator order), then quadratic (by order pair).
  std::vector<std::pair<int, const std::pair<const std::string, LaurentPoly>*>> linear;
  for (const auto& entry : rel.rhs_linear) {
    linear.push_back({spec.order_index(entry.first), &entry});
  }
  std::sort(linear.begin(), linear.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });

  using QuadEntry = std::pair<const std::pair<std::string, std::string>, LaurentPoly>;
  std::vector<std::pair<std::pair<int, int>, const QuadEntry*>> quad;
  for (const auto& entry : rel.rhs_quadratic) {
    quad.push_back({{spec.order_index(entry.first.first), spec.order_index(entry.first.second)},
                    &entry});
  }
  std::sort(quad.begin(), quad.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });

  std::string rhs;
  for (const auto& [idx, entry] : linear) {
    append_term(rhs, entry->second, entry->first);
  }
  for (const auto& [idx, entry] : quad) {
    append_term(rhs, entry->second, entry->first.first + "*" + entry->first.second);
  }
  return rhs.empty() ? "0" : rhs;
}

}  // namespace

std::string serialize_algebra(const AlgebraSpec& spec) {
  spec.validate();
  std::ostringstream out;
  out << "algebra: " << spec.name << "\n";
  out << "params:";
  for (const std::string& v : spec.parameters) out << " " << v;
  out << "\n";
  out << "generators:";
  for (const Generator& g : spec.generators) {
    out << " " << g.name << ":" << (g.parity == Parity::Fermionic ? "f" : "b");
  }
  out << "\n";
  if (!spec.total) out << "partial: true\n";
  out << "\n";

  std::vector<const Relation*> rels;
  for (const Relation& rel : spec.relations) rels.push_back(&rel);
  std::sort(rels.begin(), rels.end(), [&spec](const Relation* a, const Relation* b) {
    const auto ka = std::make_pair(spec.order_index(a->left), spec.order_index(a->right));
    const auto kb = std::make_pair(spec.order_index(b->left), spec.order_index(b->right));
    return ka < kb;
  });
  for (const Relation* rel : rels) {
    const char open = rel->kind == BracketKind::Antiquommutator ? '{' : '[';
    const char close = rel->kind == BracketKind::Antiquommutator ? '}' : ']';
    out << open << rel->left << "," << rel->right << close << "_" << render_coeff(rel->coeff)
        << " = " << render_rhs(spec, *rel);
    if (rel->provenance == Provenance::Repaired) out << "  # repaired";
    out << "\n";
  }
  return out.str();
}

namespace {

[[noreturn]] void fail(size_t line_no, const std::string& msg) {
  throw AlgebraError("line " + std::to_string(line_no) + ": " + msg);
}

std::string strip(const std::string& s) {
  size_t b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  size_t e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

std::vector<std::string> split_ws(const std::string& s) {
  std::vector<std::string> out;
  std::istringstream in(s);
  std::string tok;
  while (in >> tok) out.push_back(tok);
  return out;
}

struct PendingLine {
  size_t line_no;
  std::string body;       // comment-free relation text
  bool repaired = false;  // trailing "# repaired" marker
};

Relation parse_relation_line(const PendingLine& line, const AlgebraSpec& spec) {
  const std::string& body = line.body;
  Relation rel;
  const char open = body[0];
  char close = 0;
  if (open == '{') {
    rel.kind = BracketKind::Antiquommutator;
    close = '}';
  } else if (open == '[') {
    rel.kind = BracketKind::Quommutator;
    close = ']';
  } else {
    fail(line.line_no, "expected a relation starting with '{' or '['");
  }
  const size_t comma = body.find(',');
  const size_t bracket_end = body.find(close);
  if (comma == std::string::npos || bracket_end == std::string::npos || comma > bracket_end) {
    fail(line.line_no, "malformed bracket; expected e.g. " +
                           std::string(1, open) + "A,B" + std::string(1, close) + "_coeff");
  }
  rel.left = strip(body.substr(1, comma - 1));
  rel.right = strip(body.substr(comma + 1, bracket_end - comma - 1));
  if (rel.left.empty() || rel.right.empty()) fail(line.line_no, "empty generator name in bracket");

  size_t pos = bracket_end + 1;
  if (pos >= body.size() || body[pos] != '_') {
    fail(line.line_no, "expected '_' and a coefficient after the bracket");
  }
  ++pos;
  std::string coeff_text;
  if (pos < body.size() && body[pos] == '{') {
    const size_t brace_end = body.find('}', pos + 1);
    if (brace_end == std::string::npos) fail(line.line_no, "unterminated '{' in coefficient");
    coeff_text = body.substr(pos + 1, brace_end - pos - 1);
    pos = brace_end + 1;
  } else {
    const size_t end = body.find_first_of(" \t=", pos);
    coeff_text = body.substr(pos, end == std::string::npos ? std::string::npos : end - pos);
    pos = end == std::string::npos ? body.size() : end;
  }
  if (strip(coeff_text).empty()) fail(line.line_no, "empty bracket coefficient");

  const size_t eq = body.find('=', pos);
  if (eq == std::string::npos) fail(line.line_no, "expected '=' after the coefficient");
  if (!strip(body.substr(pos, eq - pos)).empty()) {
    fail(line.line_no, "unexpected text between the coefficient and '='");
  }
  const std::string rhs_text = strip(body.substr(eq + 1));
  if (rhs_text.empty()) fail(line.line_no, "empty right-hand side");

  std::vector<std::string> gen_names;
  for (const Generator& g : spec.generators) gen_names.push_back(g.name);

  try {
    rel.coeff = parse_scalar_monomial(coeff_text, spec.parameters);
  } catch (const ParseError& e) {
    fail(line.line_no, std::string("coefficient: ") + e.what());
  }
  ExprTerms rhs;
  try {
    rhs = parse_element(rhs_text, gen_names, spec.parameters);
  } catch (const ParseError& e) {
    fail(line.line_no, std::string("right-hand side: ") + e.what());
  }
  for (const auto& [word, coeff] : rhs) {
    if (word.empty()) {
      fail(line.line_no, "constant terms are not allowed on the right-hand side");
    }
    if (word.size() == 1) {
      rel.rhs_linear[word[0]] = coeff;
    } else if (word.size() == 2) {
      rel.rhs_quadratic[{word[0], word[1]}] = coeff;
    } else {
      fail(line.line_no, "right-hand side words must have length 1 or 2");
    }
  }
  rel.provenance = line.repaired ? Provenance::Repaired : Provenance::Standard;
  return rel;
}

}  // namespace

AlgebraSpec parse_algebra(const std::string& text) {
  AlgebraSpec spec;
  bool saw_params = false;
  bool saw_generators = false;
  std::vector<PendingLine> relation_lines;

  std::istringstream in(text);
  std::string raw;
  size_t line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    bool repaired = false;
    std::string body = raw;
    const size_t hash = body.find('#');
    if (hash != std::string::npos) {
      repaired = strip(body.substr(hash + 1)) == "repaired";
      body = body.substr(0, hash);
    }
    body = strip(body);
    if (body.empty()) continue;

    if (body.rfind("algebra:", 0) == 0) {
      spec.name = strip(body.substr(8));
      if (spec.name.empty()) fail(line_no, "empty algebra name");
      continue;
    }
    if (body.rfind("params:", 0) == 0) {
      spec.parameters = split_ws(body.substr(7));
      saw_params = true;
      continue;
    }
    if (body.rfind("partial:", 0) == 0) {
      const std::string value = strip(body.substr(8));
      if (value == "true") {
        spec.total = false;
      } else if (value == "false") {
        spec.total = true;
      } else {
        fail(line_no, "expected 'true' or 'false' after 'partial:'");
      }
      continue;
    }
    if (body.rfind("generators:", 0) == 0) {
      int index = 0;
      for (const std::string& item : split_ws(body.substr(11))) {
        const size_t colon = item.find(':');
        if (colon == std::string::npos || colon == 0 || colon + 2 != item.size()) {
          fail(line_no, "expected name:b or name:f, got '" + item + "'");
        }
        const char parity = item[colon + 1];
        if (parity != 'b' && parity != 'f') {
          fail(line_no, "parity must be 'b' or 'f' in '" + item + "'");
        }
        spec.generators.push_back({item.substr(0, colon),
                                   parity == 'f' ? Parity::Fermionic : Parity::Bosonic, index});
        ++index;
      }
      saw_generators = true;
      continue;
    }
    relation_lines.push_back({line_no, body, repaired});
  }

  if (!saw_params) throw AlgebraError("missing 'params:' header line");
  if (!saw_generators || spec.generators.empty()) {
    throw AlgebraError("missing or empty 'generators:' header line");
  }
  if (spec.name.empty()) spec.name = "unnamed";

  for (const PendingLine& line : relation_lines) {
    Relation rel = parse_relation_line(line, spec);
    if (!spec.has_generator(rel.left) || !spec.has_generator(rel.right)) {
      fail(line.line_no, "relation (" + rel.id() + ") uses an undeclared generator");
    }
    spec.relations.push_back(std::move(rel));
  }

  spec.validate();
  return spec;
}

AlgebraSpec load_algebra_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw AlgebraError("cannot open relation file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_algebra(buf.str());
}

void save_algebra_file(const AlgebraSpec& spec, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw AlgebraError("cannot write relation file '" + path + "'");
  out << serialize_algebra(spec);
}

}  // namespace qosp
