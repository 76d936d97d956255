#include "qsyl/adjoint.hpp"

#include "qsyl/errors.hpp"

namespace qsyl {

ComplexAdjoint to_adjoint(const QuatMatrix& a) {
  const Index m = a.rows(), n = a.cols();
  CMatrix chi(2 * m, 2 * n);
  chi.topLeftCorner(m, n) = a.z1();
  chi.topRightCorner(m, n) = a.z2();
  chi.bottomLeftCorner(m, n) = -a.z2().conjugate();
  chi.bottomRightCorner(m, n) = a.z1().conjugate();
  return {m, n, std::move(chi)};
}

double block_symmetry_defect(const ComplexAdjoint& chi) {
  const Index m = chi.m, n = chi.n;
  const auto& d = chi.data;
  return std::sqrt((d.bottomLeftCorner(m, n) + d.topRightCorner(m, n).conjugate()).squaredNorm() +
                   (d.bottomRightCorner(m, n) - d.topLeftCorner(m, n).conjugate()).squaredNorm());
}

QuatMatrix from_adjoint(const ComplexAdjoint& chi, double tol) {
  if (chi.data.rows() != 2 * chi.m || chi.data.cols() != 2 * chi.n)
    throw ShapeError("adjoint image has wrong dimensions");
  if (block_symmetry_defect(chi) > tol * (1.0 + chi.data.norm()))
    throw ToleranceError("matrix is not the adjoint image of a quaternion matrix");
  return {chi.data.topLeftCorner(chi.m, chi.n), chi.data.topRightCorner(chi.m, chi.n)};
}

}  // namespace qsyl
