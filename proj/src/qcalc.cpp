#include "qosp/qcalc.hpp"

namespace qosp {

LaurentPoly qint(int n, const LaurentPoly& base) {
  if (!base.is_monomial()) {
    throw ScalarError("qint: base must be an invertible (single-term) monomial");
  }
  LaurentPoly out(base.vars());
  if (n >= 0) {
    for (int k = 0; k < n; ++k) {
      out += base.pow(k);
    }
  } else {
    for (int k = n; k < 0; ++k) {
      out -= base.pow(k);
    }
  }
  return out;
}

Rational qint_classical(int n) { return Rational(n); }

Matrix<LaurentPoly> jackson_matrix(const PolyBasis& basis, const LaurentPoly& base) {
  const int dim = basis.dimension();
  Matrix<LaurentPoly> m(dim, dim, LaurentPoly(base.vars()));
  for (int k = 1; k < dim; ++k) {
    m.at(k - 1, k) = qint(k, base);
  }
  return m;
}

Matrix<LaurentPoly> mult_by_x_matrix(const PolyBasis& basis_in, const PolyBasis& basis_out,
                                     const std::vector<std::string>& vars,
                                     bool truncate) {
  if (!truncate && basis_out.degree_bound < basis_in.degree_bound + 1) {
    throw ScalarError(
        "mult_by_x_matrix: target degree bound too small (pass truncate to drop "
        "overflowing monomials)");
  }
  Matrix<LaurentPoly> m(basis_out.dimension(), basis_in.dimension(), LaurentPoly(vars));
  const LaurentPoly one = LaurentPoly::constant(vars, Rational(1));
  for (int k = 0; k < basis_in.dimension(); ++k) {
    if (k + 1 < basis_out.dimension()) {
      m.at(k + 1, k) = one;
    }
  }
  return m;
}

}  // namespace qosp
