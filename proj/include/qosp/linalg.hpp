#pragma once

#include <optional>
#include <vector>

#include "qosp/laurent.hpp"
#include "qosp/ratfunc.hpp"

namespace qosp {

// ----- Exact linear algebra over the rationals -----

// Row-echelon rank (input consumed by value).
int rank_rational(std::vector<std::vector<Rational>> rows);

// Basis of { x : A x = 0 }, each vector of length ncols.
std::vector<std::vector<Rational>> nullspace_rational(
    std::vector<std::vector<Rational>> rows, int ncols);

// Incremental row space: insert vectors one at a time, tracking rank.
// Used for span computations where vectors arrive in word-length order.
class RowBasis {
 public:
  explicit RowBasis(int cols) : cols_(cols) {}
  // Returns true iff the vector was independent of the current basis.
  bool insert(std::vector<Rational> v);
  int rank() const { return static_cast<int>(rows_.size()); }

 private:
  int cols_;
  std::vector<std::vector<Rational>> rows_;
  std::vector<int> pivots_;
};

// ----- Exact linear algebra over rational functions -----
//
// Rows carry LaurentPoly entries (no denominators); elimination is
// fraction-free (cross-multiplication followed by content stripping), and
// divisions happen only during back-substitution, over RatFunc.

// Basis of the right null space of the matrix given by `rows`; results are
// content-stripped LaurentPoly vectors of length ncols.
std::vector<std::vector<LaurentPoly>> nullspace_poly(
    std::vector<std::vector<LaurentPoly>> rows, int ncols,
    const std::vector<std::string>& vars);

// Solves A x = b over the rational-function field. Returns std::nullopt when
// the system is inconsistent; otherwise one particular solution (free
// variables set to zero).
std::optional<std::vector<RatFunc>> solve_poly(
    std::vector<std::vector<LaurentPoly>> rows, std::vector<LaurentPoly> rhs,
    const std::vector<std::string>& vars);

}  // namespace qosp
