#pragma once

#include "qosp/laurent.hpp"
#include "qosp/matrix.hpp"

namespace qosp {

// Basis x^0..x^degree_bound of polynomials of degree <= degree_bound,
// identified with coordinate indices 0..degree_bound.
struct PolyBasis {
  int degree_bound = 0;
  int dimension() const { return degree_bound + 1; }
};

// The q-integer [n] = (1 - base^n)/(1 - base), expanded as a genuine Laurent
// polynomial for any integer n: 1 + base + ... + base^{n-1} for n >= 0 and
// -(base^-1 + ... + base^n) for n < 0. `base` must be an invertible
// (single-term) Laurent polynomial, e.g. t^2 or t^4.
LaurentPoly qint(int n, const LaurentPoly& base);

// Classical limit of [n] at base -> 1 (computed directly, no 0/0).
Rational qint_classical(int n);

// Finite-difference derivative on PolyBasis(degree_bound): maps x^k to
// [k] * x^{k-1}. Square matrix of size degree_bound+1; lowers degree by one.
Matrix<LaurentPoly> jackson_matrix(const PolyBasis& basis, const LaurentPoly& base);

// Multiplication by x as a rectangular matrix from basis_in to basis_out:
// x^k -> x^{k+1}. Unless `truncate` is set, basis_out must accommodate the
// top degree (degree_bound >= basis_in.degree_bound + 1); with `truncate`,
// overflowing monomials are dropped.
Matrix<LaurentPoly> mult_by_x_matrix(const PolyBasis& basis_in, const PolyBasis& basis_out,
                                     const std::vector<std::string>& vars,
                                     bool truncate = false);

}  // namespace qosp
