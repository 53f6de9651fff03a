#pragma once

#include "qea/lops.hpp"

namespace qea {

/// Laurent-fraction form (coefficients expanded in v).
std::string latex_scalar(const Scalar& s);

/// Words and t-monomials in generator notation, e.g. e_{2}^{2} t_{2}^{-1}.
std::string latex_ncexpr(const NcExpr& x);

/// pmatrix block of an operator matrix.
std::string latex_lmatrix(const LMatrix& L);

/// Nonzero R entries as an aligned list R^{ca}_{db} = value.
std::string latex_rmatrix(const RMatrix& R);

std::string latex_spmat(const SpMat& m);

}  // namespace qea
