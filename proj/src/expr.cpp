#include "qosp/expr.hpp"

#include <algorithm>
#include <cctype>

namespace qosp {

namespace {

enum class Tok { Number, Name, Star, Plus, Minus, Caret, LParen, RParen, End };

struct Token {
  Tok kind;
  std::string text;
  size_t pos = 0;  // 1-based
};

std::vector<Token> lex(const std::string& text) {
  std::vector<Token> out;
  size_t i = 0;
  while (i < text.size()) {
    const char c = text[i];
    if (c == ' ' || c == '\t') {
      ++i;
      continue;
    }
    const size_t pos = i + 1;
    if (std::isdigit(static_cast<unsigned char>(c))) {
      size_t j = i;
      while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
      if (j < text.size() && text[j] == '/') {
        size_t k = j + 1;
        while (k < text.size() && std::isdigit(static_cast<unsigned char>(text[k]))) ++k;
        if (k == j + 1) throw ParseError("expected digits after '/'", j + 2);
        j = k;
      }
      out.push_back({Tok::Number, text.substr(i, j - i), pos});
      i = j;
      continue;
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      size_t j = i;
      while (j < text.size() && std::isalnum(static_cast<unsigned char>(text[j]))) ++j;
      out.push_back({Tok::Name, text.substr(i, j - i), pos});
      i = j;
      continue;
    }
    switch (c) {
      case '*': out.push_back({Tok::Star, "*", pos}); break;
      case '+': out.push_back({Tok::Plus, "+", pos}); break;
      case '-': out.push_back({Tok::Minus, "-", pos}); break;
      case '^': out.push_back({Tok::Caret, "^", pos}); break;
      case '(': out.push_back({Tok::LParen, "(", pos}); break;
      case ')': out.push_back({Tok::RParen, ")", pos}); break;
      default:
        throw ParseError(std::string("unexpected character '") + c + "'", pos);
    }
    ++i;
  }
  out.push_back({Tok::End, "", text.size() + 1});
  return out;
}

class Parser {
 public:
  Parser(const std::string& text, const std::vector<std::string>& generator_names,
         const std::vector<std::string>& params)
      : tokens_(lex(text)), generators_(generator_names), params_(params) {
    q_is_alias_ = params_ == std::vector<std::string>{"t"} && !is_generator("q");
  }

  ExprTerms parse() {
    ExprTerms terms = parse_sum();
    if (peek().kind != Tok::End) {
      throw ParseError("unexpected '" + peek().text + "'", peek().pos);
    }
    return terms;
  }

 private:
  const Token& peek() const { return tokens_[cursor_]; }
  Token take() { return tokens_[cursor_++]; }

  bool is_generator(const std::string& name) const {
    return std::find(generators_.begin(), generators_.end(), name) != generators_.end();
  }
  bool is_param(const std::string& name) const {
    return std::find(params_.begin(), params_.end(), name) != params_.end();
  }
  bool is_scalar_name(const std::string& name) const {
    return is_param(name) || (q_is_alias_ && name == "q");
  }

  static void add_into(ExprTerms& into, const ExprWord& word, const LaurentPoly& coeff) {
    if (coeff.is_zero()) return;
    auto it = into.find(word);
    if (it == into.end()) {
      into.emplace(word, coeff);
      return;
    }
    it->second += coeff;
    if (it->second.is_zero()) into.erase(it);
  }

  ExprTerms parse_sum() {
    bool negate = false;
    if (peek().kind == Tok::Minus) {
      take();
      negate = true;
    } else if (peek().kind == Tok::Plus) {
      take();
    }
    ExprTerms total = parse_product(negate);
    while (peek().kind == Tok::Plus || peek().kind == Tok::Minus) {
      const bool minus = take().kind == Tok::Minus;
      ExprTerms next = parse_product(minus);
      for (const auto& [word, coeff] : next) add_into(total, word, coeff);
    }
    return total;
  }

  ExprTerms parse_product(bool negate) {
    ExprTerms acc = parse_atom();
    while (true) {
      if (peek().kind == Tok::Star) {
        take();
        acc = multiply(acc, parse_atom());
        continue;
      }
      // Implicit multiplication between scalar factors ("p^2 r^-1", "3/2 s").
      if (peek().kind == Tok::Number ||
          (peek().kind == Tok::Name && is_scalar_name(peek().text))) {
        acc = multiply(acc, parse_atom());
        continue;
      }
      break;
    }
    if (negate) {
      for (auto& [word, coeff] : acc) coeff = -coeff;
    }
    return acc;
  }

  static ExprTerms multiply(const ExprTerms& a, const ExprTerms& b) {
    ExprTerms out;
    for (const auto& [wa, ca] : a) {
      for (const auto& [wb, cb] : b) {
        ExprWord word = wa;
        word.insert(word.end(), wb.begin(), wb.end());
        add_into(out, word, ca * cb);
      }
    }
    return out;
  }

  int parse_exponent() {
    bool neg = false;
    if (peek().kind == Tok::Minus) {
      take();
      neg = true;
    }
    if (peek().kind != Tok::Number || peek().text.find('/') != std::string::npos) {
      throw ParseError("expected integer exponent after '^'", peek().pos,
                       peek().kind == Tok::End);
    }
    const Token tok = take();
    int value = 0;
    try {
      value = std::stoi(tok.text);
    } catch (const std::exception&) {
      throw ParseError("exponent out of range", tok.pos);
    }
    return neg ? -value : value;
  }

  ExprTerms scalar_terms(const LaurentPoly& value) const {
    ExprTerms out;
    if (!value.is_zero()) out.emplace(ExprWord{}, value);
    return out;
  }

  ExprTerms parse_atom() {
    const Token tok = peek();
    switch (tok.kind) {
      case Tok::Number: {
        take();
        return scalar_terms(
            LaurentPoly::constant(params_, rational_from_string(tok.text)));
      }
      case Tok::Name: {
        take();
        int exp = 1;
        if (peek().kind == Tok::Caret) {
          take();
          exp = parse_exponent();
        }
        if (is_generator(tok.text)) {
          if (exp < 0) {
            throw ParseError("negative power of generator '" + tok.text + "'", tok.pos);
          }
          ExprTerms out;
          out.emplace(ExprWord(static_cast<size_t>(exp), tok.text),
                      LaurentPoly::constant(params_, Rational(1)));
          return out;
        }
        if (q_is_alias_ && tok.text == "q") {
          return scalar_terms(LaurentPoly::monomial(params_, {2 * exp}, Rational(1)));
        }
        if (is_param(tok.text)) {
          return scalar_terms(LaurentPoly::variable(params_, tok.text, exp));
        }
        throw ParseError("unknown name '" + tok.text + "'", tok.pos);
      }
      case Tok::LParen: {
        const size_t open_pos = take().pos;
        ExprTerms inner;
        try {
          inner = parse_sum();
        } catch (const ParseError& e) {
          if (e.at_end()) {
            throw ParseError("missing ')' for '('", open_pos);
          }
          throw;
        }
        if (peek().kind != Tok::RParen) {
          if (peek().kind == Tok::End) throw ParseError("missing ')' for '('", open_pos);
          throw ParseError("unexpected '" + peek().text + "'", peek().pos);
        }
        take();
        return inner;
      }
      case Tok::End:
        throw ParseError("unexpected end of expression", tok.pos, true);
      default:
        throw ParseError("unexpected '" + tok.text + "'", tok.pos);
    }
  }

  std::vector<Token> tokens_;
  size_t cursor_ = 0;
  std::vector<std::string> generators_;
  std::vector<std::string> params_;
  bool q_is_alias_ = false;
};

}  // namespace

ExprTerms parse_element(const std::string& text,
                        const std::vector<std::string>& generator_names,
                        const std::vector<std::string>& params) {
  Parser parser(text, generator_names, params);
  return parser.parse();
}

LaurentPoly parse_scalar(const std::string& text, const std::vector<std::string>& params) {
  ExprTerms terms = parse_element(text, {}, params);
  if (terms.empty()) return LaurentPoly(params);
  // With no generators, every term sits on the empty word.
  return terms.begin()->second;
}

LaurentPoly parse_scalar_monomial(const std::string& text,
                                  const std::vector<std::string>& params) {
  LaurentPoly value = parse_scalar(text, params);
  if (!value.is_monomial()) {
    throw ParseError("expected a single nonzero Laurent term in '" + text + "'", 1);
  }
  return value;
}

}  // namespace qosp
