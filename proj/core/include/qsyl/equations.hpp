#pragma once

#include <vector>

#include "qsyl/matrix.hpp"

namespace qsyl {

// A X_left - X_right B = C over 0-based unknown indices.
struct OneSided {
  const QuatMatrix* A;
  const QuatMatrix* B;
  const QuatMatrix* C;
  int left;
  int right;
};

// Infers every unknown's shape from the coefficients; throws ShapeError on any conflict.
std::vector<Shape> infer_shapes(const std::vector<OneSided>& eqs, int unknowns);

// Frobenius norm of A X_l - X_r B - C per equation.
std::vector<double> one_sided_residuals(const std::vector<OneSided>& eqs, const std::vector<QuatMatrix>& X);

}  // namespace qsyl

namespace qsyl {

struct ResidualReport {
  std::vector<double> absolute;  // per equation, Frobenius norm
  double scale = 1.0;
  double max_relative() const;
};

}  // namespace qsyl
