#pragma once

#include <Eigen/Dense>

#include "qsyl/matrix.hpp"

namespace qsyl {

struct Tolerances {
  // Relative singular-value cutoff. Zero selects max(2m, 2n) * eps, applied to sigma_max of chi(A).
  double rank_rtol = 0.0;
  // Absolute floor on the cutoff for standalone rank/pinv calls.
  double rank_atol = 0.0;
  double cond_tol = 1e-9;
  double verify_tol = 1e-8;
  // Solvers floor the cutoff at zero_rtol * scale. Intermediates that vanish in exact
  // arithmetic carry rounding noise far above eps * sigma_max of the noise itself.
  double zero_rtol = 1e-11;

  void validate() const;
};

// 1 + max Frobenius norm over the given matrices.
double scale_of(std::initializer_list<const QuatMatrix*> ms);

// Rank, pseudoinverse and projectors sharing one cutoff policy.
class Ops {
 public:
  explicit Ops(Tolerances tol = {}, double atol = -1.0);

  const Tolerances& tolerances() const { return tol_; }
  double atol() const { return atol_; }

  int rank(const QuatMatrix& a) const;
  QuatMatrix pinv(const QuatMatrix& a) const;
  QuatMatrix L(const QuatMatrix& a) const;  // I - A^+ A
  QuatMatrix R(const QuatMatrix& a) const;  // I - A A^+

  // Singular values of chi(A), descending; each quaternion singular value appears twice.
  Eigen::VectorXd adjoint_singular_values(const QuatMatrix& a) const;
  double cutoff(const Eigen::VectorXd& sv, Index m, Index n) const;

 private:
  Tolerances tol_;
  double atol_;
};

int rank(const QuatMatrix& a, const Tolerances& tol = {});
QuatMatrix pinv(const QuatMatrix& a, const Tolerances& tol = {});
QuatMatrix proj_L(const QuatMatrix& a, const Tolerances& tol = {});
QuatMatrix proj_R(const QuatMatrix& a, const Tolerances& tol = {});

struct PenroseResiduals {
  double axa = 0, xax = 0, ax_hermitian = 0, xa_hermitian = 0;
  double max() const;
};
PenroseResiduals penrose_residuals(const QuatMatrix& a, const QuatMatrix& x);

}  // namespace qsyl
