#include "qosp/linalg.hpp"

#include <algorithm>

namespace qosp {

namespace {

// Reduced row echelon form in place; returns pivot column list. Pivots are
// searched among the first `ncols` columns only (extra columns ride along,
// which is how augmented systems are handled).
std::vector<int> rref_rational(std::vector<std::vector<Rational>>& rows, int ncols) {
  std::vector<int> pivots;
  size_t r = 0;
  for (int c = 0; c < ncols && r < rows.size(); ++c) {
    size_t pr = r;
    while (pr < rows.size() && rows[pr][c] == 0) {
      ++pr;
    }
    if (pr == rows.size()) {
      continue;
    }
    std::swap(rows[r], rows[pr]);
    const Rational inv = Rational(1) / rows[r][c];
    for (auto& x : rows[r]) {
      x *= inv;
    }
    for (size_t i = 0; i < rows.size(); ++i) {
      if (i == r || rows[i][c] == 0) {
        continue;
      }
      const Rational f = rows[i][c];
      for (size_t j = 0; j < rows[i].size(); ++j) {
        rows[i][j] -= f * rows[r][j];
      }
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

}  // namespace

int rank_rational(std::vector<std::vector<Rational>> rows) {
  if (rows.empty()) {
    return 0;
  }
  return static_cast<int>(rref_rational(rows, static_cast<int>(rows[0].size())).size());
}

std::vector<std::vector<Rational>> nullspace_rational(
    std::vector<std::vector<Rational>> rows, int ncols) {
  std::vector<std::vector<Rational>> basis;
  if (rows.empty()) {
    for (int f = 0; f < ncols; ++f) {
      std::vector<Rational> v(ncols, Rational(0));
      v[f] = 1;
      basis.push_back(std::move(v));
    }
    return basis;
  }
  const std::vector<int> pivots = rref_rational(rows, ncols);
  std::vector<bool> is_pivot(ncols, false);
  for (int p : pivots) {
    is_pivot[p] = true;
  }
  for (int f = 0; f < ncols; ++f) {
    if (is_pivot[f]) {
      continue;
    }
    std::vector<Rational> v(ncols, Rational(0));
    v[f] = 1;
    for (size_t r = 0; r < pivots.size(); ++r) {
      v[pivots[r]] = -rows[r][f];
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

bool RowBasis::insert(std::vector<Rational> v) {
  for (size_t r = 0; r < rows_.size(); ++r) {
    const int p = pivots_[r];
    if (v[p] == 0) {
      continue;
    }
    const Rational f = v[p];
    for (int j = 0; j < cols_; ++j) {
      v[j] -= f * rows_[r][j];
    }
  }
  int pivot = -1;
  for (int j = 0; j < cols_; ++j) {
    if (v[j] != 0) {
      pivot = j;
      break;
    }
  }
  if (pivot < 0) {
    return false;
  }
  const Rational inv = Rational(1) / v[pivot];
  for (auto& x : v) {
    x *= inv;
  }
  rows_.push_back(std::move(v));
  pivots_.push_back(pivot);
  return true;
}

namespace {

// Divides a row by its rational content and by the common monomial factor,
// and makes the first nonzero entry's leading coefficient positive. Keeps
// entry growth bounded during fraction-free elimination.
void strip_content(std::vector<LaurentPoly>& row) {
  mpz_class gnum(0), dlcm(1);
  bool any = false;
  for (const auto& p : row) {
    for (const auto& [e, c] : p.terms()) {
      mpz_class num = c.get_num();
      num = abs(num);
      mpz_gcd(gnum.get_mpz_t(), gnum.get_mpz_t(), num.get_mpz_t());
      mpz_lcm(dlcm.get_mpz_t(), dlcm.get_mpz_t(), c.get_den().get_mpz_t());
      any = true;
    }
  }
  if (!any) {
    return;
  }
  Rational factor(dlcm, gnum);  // multiply row by lcm(dens)/gcd(nums)
  factor.canonicalize();
  bool have_min = false;
  LaurentPoly::Exponents shift;
  for (const auto& p : row) {
    if (p.is_zero()) {
      continue;
    }
    LaurentPoly::Exponents m = p.min_exponents();
    if (!have_min) {
      shift = m;
      have_min = true;
    } else {
      for (size_t i = 0; i < shift.size(); ++i) {
        shift[i] = std::min(shift[i], m[i]);
      }
    }
  }
  int sign = 1;
  for (const auto& p : row) {
    if (!p.is_zero()) {
      sign = p.leading_coefficient() > 0 ? 1 : -1;
      break;
    }
  }
  if (sign < 0) {
    factor = -factor;
  }
  for (auto& p : row) {
    p = p * factor;
    if (!p.is_zero()) {
      p = p.shifted(shift);
    }
  }
}

struct PolyEchelon {
  std::vector<std::vector<LaurentPoly>> rows;      // pivot rows, echelon order
  std::vector<int> pivot_cols;                     // pivot_cols[r] for row r
  std::vector<std::vector<LaurentPoly>> residual;  // rows with no pivot left
};

// Fraction-free forward elimination; pivots chosen among the first ncols
// columns (any extra columns are carried along for augmented solves).
PolyEchelon echelon_poly(std::vector<std::vector<LaurentPoly>> rows, int ncols) {
  PolyEchelon out;
  size_t r = 0;
  for (int c = 0; c < ncols && r < rows.size(); ++c) {
    size_t best = rows.size();
    size_t best_terms = 0;
    for (size_t i = r; i < rows.size(); ++i) {
      if (rows[i][c].is_zero()) {
        continue;
      }
      const size_t nt = rows[i][c].terms().size();
      if (best == rows.size() || nt < best_terms) {
        best = i;
        best_terms = nt;
      }
    }
    if (best == rows.size()) {
      continue;
    }
    std::swap(rows[r], rows[best]);
    for (size_t i = r + 1; i < rows.size(); ++i) {
      if (rows[i][c].is_zero()) {
        continue;
      }
      const LaurentPoly piv = rows[r][c];
      const LaurentPoly f = rows[i][c];
      for (size_t j = 0; j < rows[i].size(); ++j) {
        rows[i][j] = piv * rows[i][j] - f * rows[r][j];
      }
      strip_content(rows[i]);
    }
    out.pivot_cols.push_back(c);
    ++r;
  }
  out.residual.assign(std::make_move_iterator(rows.begin() + static_cast<long>(r)),
                      std::make_move_iterator(rows.end()));
  rows.resize(r);
  out.rows = std::move(rows);
  return out;
}

std::vector<RatFunc> back_substitute(const PolyEchelon& ech, int ncols,
                                     const std::vector<std::string>& vars,
                                     int free_col,
                                     const std::vector<LaurentPoly>* rhs_col) {
  const RatFunc zero{LaurentPoly(vars)};
  std::vector<RatFunc> x(ncols, zero);
  if (free_col >= 0) {
    x[free_col] = RatFunc::constant(vars, Rational(1));
  }
  for (int r = static_cast<int>(ech.rows.size()) - 1; r >= 0; --r) {
    const int pc = ech.pivot_cols[r];
    RatFunc acc = rhs_col ? RatFunc((*rhs_col)[r]) : zero;
    for (int c = pc + 1; c < ncols; ++c) {
      if (!ech.rows[r][c].is_zero() && !x[c].is_zero()) {
        acc = acc - RatFunc(ech.rows[r][c]) * x[c];
      }
    }
    x[pc] = acc / RatFunc(ech.rows[r][pc]);
  }
  return x;
}

std::vector<LaurentPoly> clear_denominators(const std::vector<RatFunc>& x,
                                            const std::vector<std::string>& vars) {
  // out[i] = num_i * prod_{j != i} den_j, built from prefix/suffix products
  // so no polynomial division is ever needed.
  const size_t k = x.size();
  const LaurentPoly one = LaurentPoly::constant(vars, Rational(1));
  std::vector<LaurentPoly> prefix(k + 1, one), suffix(k + 1, one);
  for (size_t i = 0; i < k; ++i) {
    prefix[i + 1] = prefix[i] * x[i].den();
  }
  for (size_t i = k; i > 0; --i) {
    suffix[i - 1] = suffix[i] * x[i - 1].den();
  }
  std::vector<LaurentPoly> out;
  out.reserve(k);
  for (size_t i = 0; i < k; ++i) {
    out.push_back(x[i].num() * prefix[i] * suffix[i + 1]);
  }
  strip_content(out);
  return out;
}

}  // namespace

std::vector<std::vector<LaurentPoly>> nullspace_poly(
    std::vector<std::vector<LaurentPoly>> rows, int ncols,
    const std::vector<std::string>& vars) {
  PolyEchelon ech = echelon_poly(std::move(rows), ncols);
  std::vector<bool> is_pivot(ncols, false);
  for (int p : ech.pivot_cols) {
    is_pivot[p] = true;
  }
  std::vector<std::vector<LaurentPoly>> basis;
  for (int f = 0; f < ncols; ++f) {
    if (is_pivot[f]) {
      continue;
    }
    std::vector<RatFunc> x = back_substitute(ech, ncols, vars, f, nullptr);
    basis.push_back(clear_denominators(x, vars));
  }
  return basis;
}

std::optional<std::vector<RatFunc>> solve_poly(
    std::vector<std::vector<LaurentPoly>> rows, std::vector<LaurentPoly> rhs,
    const std::vector<std::string>& vars) {
  if (rows.size() != rhs.size()) {
    throw ScalarError("solve_poly: row/rhs size mismatch");
  }
  const int ncols = rows.empty() ? 0 : static_cast<int>(rows[0].size());
  for (size_t i = 0; i < rows.size(); ++i) {
    rows[i].push_back(rhs[i]);
  }
  PolyEchelon ech = echelon_poly(std::move(rows), ncols);
  // Inconsistency: a residual row has zero coefficients in every unknown
  // column, so it is satisfiable iff its right-hand side is zero too.
  for (const auto& row : ech.residual) {
    if (!row.back().is_zero()) {
      return std::nullopt;
    }
  }
  std::vector<LaurentPoly> rhs_col;
  rhs_col.reserve(ech.rows.size());
  for (const auto& row : ech.rows) {
    rhs_col.push_back(row.back());
  }
  std::vector<RatFunc> x = back_substitute(ech, ncols, vars, -1, &rhs_col);
  return x;
}

}  // namespace qosp
