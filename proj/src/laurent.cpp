#include "qosp/laurent.hpp"

#include <algorithm>
#include <sstream>

namespace qosp {

LaurentPoly LaurentPoly::constant(std::vector<std::string> vars, const Rational& c) {
  LaurentPoly p(std::move(vars));
  if (c != 0) {
    p.terms_.emplace(Exponents(p.vars_.size(), 0), c);
  }
  return p;
}

LaurentPoly LaurentPoly::monomial(std::vector<std::string> vars, Exponents exps,
                                  const Rational& c) {
  LaurentPoly p(std::move(vars));
  if (exps.size() != p.vars_.size()) {
    throw ScalarError("monomial exponent vector has wrong length");
  }
  if (c != 0) {
    p.terms_.emplace(std::move(exps), c);
  }
  return p;
}

LaurentPoly LaurentPoly::variable(const std::vector<std::string>& vars,
                                  const std::string& name, int exp) {
  auto it = std::find(vars.begin(), vars.end(), name);
  if (it == vars.end()) {
    throw ScalarError("unknown variable '" + name + "' in this scalar context");
  }
  Exponents e(vars.size(), 0);
  e[static_cast<size_t>(it - vars.begin())] = exp;
  return monomial(vars, std::move(e), Rational(1));
}

bool LaurentPoly::is_one() const {
  return is_constant() && constant_value() == 1;
}

bool LaurentPoly::is_constant() const {
  if (terms_.empty()) {
    return true;
  }
  if (terms_.size() != 1) {
    return false;
  }
  const Exponents& e = terms_.begin()->first;
  return std::all_of(e.begin(), e.end(), [](int x) { return x == 0; });
}

Rational LaurentPoly::constant_value() const {
  if (terms_.empty()) {
    return Rational(0);
  }
  if (!is_constant()) {
    throw ScalarError("constant_value() on a non-constant polynomial");
  }
  return terms_.begin()->second;
}

void LaurentPoly::require_same_context(const LaurentPoly& rhs) const {
  if (vars_ != rhs.vars_) {
    throw ScalarError("incompatible scalar contexts (variable lists differ)");
  }
}

void LaurentPoly::add_term(const Exponents& e, const Rational& c) {
  if (c == 0) {
    return;
  }
  auto it = terms_.find(e);
  if (it == terms_.end()) {
    terms_.emplace(e, c);
    return;
  }
  it->second += c;
  if (it->second == 0) {
    terms_.erase(it);
  }
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly out(vars_);
  for (const auto& [e, c] : terms_) {
    out.terms_.emplace(e, -c);
  }
  return out;
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& rhs) const {
  LaurentPoly out = *this;
  out += rhs;
  return out;
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly& rhs) const {
  LaurentPoly out = *this;
  out -= rhs;
  return out;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& rhs) {
  require_same_context(rhs);
  for (const auto& [e, c] : rhs.terms_) {
    add_term(e, c);
  }
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& rhs) {
  require_same_context(rhs);
  for (const auto& [e, c] : rhs.terms_) {
    add_term(e, -c);
  }
  return *this;
}

LaurentPoly LaurentPoly::operator*(const LaurentPoly& rhs) const {
  require_same_context(rhs);
  LaurentPoly out(vars_);
  Exponents e(vars_.size(), 0);
  for (const auto& [ea, ca] : terms_) {
    for (const auto& [eb, cb] : rhs.terms_) {
      for (size_t i = 0; i < e.size(); ++i) {
        e[i] = ea[i] + eb[i];
      }
      out.add_term(e, ca * cb);
    }
  }
  return out;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& rhs) {
  *this = *this * rhs;
  return *this;
}

LaurentPoly LaurentPoly::operator*(const Rational& c) const {
  LaurentPoly out(vars_);
  if (c == 0) {
    return out;
  }
  for (const auto& [e, t] : terms_) {
    out.terms_.emplace(e, t * c);
  }
  return out;
}

bool LaurentPoly::operator==(const LaurentPoly& rhs) const {
  return vars_ == rhs.vars_ && terms_ == rhs.terms_;
}

LaurentPoly LaurentPoly::pow(int k) const {
  if (k == 0) {
    return constant(vars_, Rational(1));
  }
  if (k < 0) {
    return inverse().pow(-k);
  }
  LaurentPoly acc = constant(vars_, Rational(1));
  LaurentPoly base = *this;
  int e = k;
  while (e > 0) {
    if (e & 1) {
      acc *= base;
    }
    base *= base;
    e >>= 1;
  }
  return acc;
}

LaurentPoly LaurentPoly::inverse() const {
  if (!is_monomial()) {
    throw ScalarError("only single-term Laurent polynomials are invertible");
  }
  const auto& [e, c] = *terms_.begin();
  Exponents inv(e.size());
  for (size_t i = 0; i < e.size(); ++i) {
    inv[i] = -e[i];
  }
  return monomial(vars_, std::move(inv), Rational(1) / c);
}

Rational LaurentPoly::evaluate(const std::map<std::string, Rational>& assignment) const {
  std::vector<Rational> values;
  values.reserve(vars_.size());
  for (const auto& v : vars_) {
    auto it = assignment.find(v);
    if (it == assignment.end()) {
      throw ScalarError("evaluate: no value assigned to variable '" + v + "'");
    }
    values.push_back(it->second);
  }
  Rational total(0);
  for (const auto& [e, c] : terms_) {
    Rational term = c;
    for (size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) {
        continue;
      }
      if (values[i] == 0 && e[i] < 0) {
        throw ScalarError("evaluate: division by zero (variable '" + vars_[i] +
                          "' = 0 with negative exponent)");
      }
      term *= rational_pow(values[i], e[i]);
    }
    total += term;
  }
  return total;
}

LaurentPoly LaurentPoly::substitute(const std::vector<std::string>& new_vars,
                                    const std::map<std::string, Image>& images) const {
  std::vector<const Image*> per_var;
  per_var.reserve(vars_.size());
  for (const auto& v : vars_) {
    auto it = images.find(v);
    if (it == images.end()) {
      throw ScalarError("substitute: no image for variable '" + v + "'");
    }
    if (it->second.exps.size() != new_vars.size()) {
      throw ScalarError("substitute: image exponent vector has wrong length");
    }
    if (it->second.coeff == 0) {
      throw ScalarError("substitute: image coefficient must be nonzero");
    }
    per_var.push_back(&it->second);
  }
  LaurentPoly out(new_vars);
  Exponents e(new_vars.size(), 0);
  for (const auto& [old_e, c] : terms_) {
    std::fill(e.begin(), e.end(), 0);
    Rational coeff = c;
    for (size_t i = 0; i < old_e.size(); ++i) {
      if (old_e[i] == 0) {
        continue;
      }
      for (size_t j = 0; j < e.size(); ++j) {
        e[j] += per_var[i]->exps[j] * old_e[i];
      }
      coeff *= rational_pow(per_var[i]->coeff, old_e[i]);
    }
    out.add_term(e, coeff);
  }
  return out;
}

std::string LaurentPoly::to_string() const {
  if (terms_.empty()) {
    return "0";
  }
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    const bool negative = c < 0;
    Rational mag = negative ? Rational(-c) : c;
    if (first) {
      if (negative) {
        os << "-";
      }
      first = false;
    } else {
      os << (negative ? " - " : " + ");
    }
    std::string mono;
    for (size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) {
        continue;
      }
      if (!mono.empty()) {
        mono += ' ';
      }
      mono += vars_[i];
      if (e[i] != 1) {
        mono += '^' + std::to_string(e[i]);
      }
    }
    if (mono.empty()) {
      os << rational_to_string(mag);
    } else if (mag == 1) {
      os << mono;
    } else {
      os << rational_to_string(mag) << " * " << mono;
    }
  }
  return os.str();
}

const LaurentPoly::Exponents& LaurentPoly::leading_exponents() const {
  if (terms_.empty()) {
    throw ScalarError("leading term of the zero polynomial");
  }
  return terms_.rbegin()->first;
}

const Rational& LaurentPoly::leading_coefficient() const {
  if (terms_.empty()) {
    throw ScalarError("leading term of the zero polynomial");
  }
  return terms_.rbegin()->second;
}

LaurentPoly::Exponents LaurentPoly::min_exponents() const {
  if (terms_.empty()) {
    throw ScalarError("min_exponents of the zero polynomial");
  }
  Exponents m = terms_.begin()->first;
  for (const auto& [e, c] : terms_) {
    for (size_t i = 0; i < m.size(); ++i) {
      m[i] = std::min(m[i], e[i]);
    }
  }
  return m;
}

LaurentPoly LaurentPoly::shifted(const Exponents& by) const {
  if (by.size() != vars_.size()) {
    throw ScalarError("shift exponent vector has wrong length");
  }
  LaurentPoly out(vars_);
  for (const auto& [e, c] : terms_) {
    Exponents ne(e.size());
    for (size_t i = 0; i < e.size(); ++i) {
      ne[i] = e[i] - by[i];
    }
    out.terms_.emplace(std::move(ne), c);
  }
  return out;
}

}  // namespace qosp
