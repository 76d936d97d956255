#include "qsyl/linalg.hpp"

#include <algorithm>
#include <limits>

#include "qsyl/adjoint.hpp"
#include "qsyl/errors.hpp"

namespace qsyl {

void Tolerances::validate() const {
  if (rank_rtol < 0 || rank_atol < 0 || zero_rtol < 0 || !(cond_tol > 0) || !(verify_tol > 0))
    throw std::invalid_argument("tolerances must be positive");
}

double scale_of(std::initializer_list<const QuatMatrix*> ms) {
  double s = 0.0;
  for (const auto* m : ms) s = std::max(s, m->frobenius());
  return 1.0 + s;
}

Ops::Ops(Tolerances tol, double atol) : tol_(tol), atol_(atol < 0 ? tol.rank_atol : atol) {
  tol_.validate();
}

double Ops::cutoff(const Eigen::VectorXd& sv, Index m, Index n) const {
  const double smax = sv.size() ? sv(0) : 0.0;
  const double rtol = tol_.rank_rtol > 0
                          ? tol_.rank_rtol
                          : static_cast<double>(std::max(2 * m, 2 * n)) * std::numeric_limits<double>::epsilon();
  return std::max(rtol * smax, atol_);
}

Eigen::VectorXd Ops::adjoint_singular_values(const QuatMatrix& a) const {
  if (a.empty()) return {};
  return Eigen::JacobiSVD<CMatrix>(to_adjoint(a).data).singularValues();
}

int Ops::rank(const QuatMatrix& a) const {
  if (a.empty()) return 0;
  const Eigen::VectorXd sv = adjoint_singular_values(a);
  const double cut = cutoff(sv, a.rows(), a.cols());
  int count = 0;
  for (Index i = 0; i < sv.size(); ++i)
    if (sv(i) > cut) ++count;
  if (count % 2 != 0)
    throw ToleranceError("odd complex rank " + std::to_string(count) +
                         " of adjoint image; the cutoff splits a singular-value pair");
  return count / 2;
}

QuatMatrix Ops::pinv(const QuatMatrix& a) const {
  if (a.empty()) return QuatMatrix::zeros(a.cols(), a.rows());
  const ComplexAdjoint chi = to_adjoint(a);
  Eigen::JacobiSVD<CMatrix> svd(chi.data, Eigen::ComputeThinU | Eigen::ComputeThinV);
  const Eigen::VectorXd& sv = svd.singularValues();
  const double cut = cutoff(sv, a.rows(), a.cols());
  Eigen::VectorXd inv = Eigen::VectorXd::Zero(sv.size());
  for (Index i = 0; i < sv.size(); ++i)
    if (sv(i) > cut) inv(i) = 1.0 / sv(i);
  ComplexAdjoint out{a.cols(), a.rows(), svd.matrixV() * inv.asDiagonal() * svd.matrixU().adjoint()};
  return from_adjoint(out, 1e-6);
}

QuatMatrix Ops::L(const QuatMatrix& a) const {
  return QuatMatrix::identity(a.cols()) - pinv(a) * a;
}

QuatMatrix Ops::R(const QuatMatrix& a) const {
  return QuatMatrix::identity(a.rows()) - a * pinv(a);
}

int rank(const QuatMatrix& a, const Tolerances& tol) { return Ops(tol).rank(a); }
QuatMatrix pinv(const QuatMatrix& a, const Tolerances& tol) { return Ops(tol).pinv(a); }
QuatMatrix proj_L(const QuatMatrix& a, const Tolerances& tol) { return Ops(tol).L(a); }
QuatMatrix proj_R(const QuatMatrix& a, const Tolerances& tol) { return Ops(tol).R(a); }

double PenroseResiduals::max() const {
  return std::max({axa, xax, ax_hermitian, xa_hermitian});
}

PenroseResiduals penrose_residuals(const QuatMatrix& a, const QuatMatrix& x) {
  const QuatMatrix ax = a * x, xa = x * a;
  return {(ax * a - a).frobenius(), (xa * x - x).frobenius(), (ax.conj_transpose() - ax).frobenius(),
          (xa.conj_transpose() - xa).frobenius()};
}

}  // namespace qsyl
