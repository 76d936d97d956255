#pragma once

#include "qsyl/matrix.hpp"

namespace qsyl {

// chi(A) = [[Z1, Z2], [-conj(Z2), conj(Z1)]], 2m x 2n.
struct ComplexAdjoint {
  Index m = 0;
  Index n = 0;
  CMatrix data;
};

ComplexAdjoint to_adjoint(const QuatMatrix& a);

// Reads the top block row; throws ToleranceError if the lower block row deviates
// from the required symmetry by more than tol * (1 + ||data||_F).
QuatMatrix from_adjoint(const ComplexAdjoint& chi, double tol = 1e-9);

double block_symmetry_defect(const ComplexAdjoint& chi);

}  // namespace qsyl
