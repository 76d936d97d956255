#include "qsyl/equations.hpp"

#include <algorithm>
#include <optional>
#include <string>

#include "qsyl/errors.hpp"

namespace qsyl {

namespace {

void pin(std::optional<Index>& slot, Index v, int unknown, const char* what) {
  if (slot && *slot != v)
    throw ShapeError("X" + std::to_string(unknown + 1) + " " + what + " conflict: " + std::to_string(*slot) +
                     " vs " + std::to_string(v));
  slot = v;
}

}  // namespace

std::vector<Shape> infer_shapes(const std::vector<OneSided>& eqs, int unknowns) {
  std::vector<std::optional<Index>> rows(static_cast<size_t>(unknowns)), cols(static_cast<size_t>(unknowns));
  for (size_t i = 0; i < eqs.size(); ++i) {
    const auto& e = eqs[i];
    const std::string tag = "equation " + std::to_string(i + 1) + ": ";
    if (e.A->rows() != e.C->rows()) throw ShapeError(tag + "rows(A) != rows(C)");
    if (e.B->cols() != e.C->cols()) throw ShapeError(tag + "cols(B) != cols(C)");
    pin(rows[static_cast<size_t>(e.left)], e.A->cols(), e.left, "row");
    pin(cols[static_cast<size_t>(e.left)], e.C->cols(), e.left, "column");
    pin(rows[static_cast<size_t>(e.right)], e.C->rows(), e.right, "row");
    pin(cols[static_cast<size_t>(e.right)], e.B->rows(), e.right, "column");
  }
  std::vector<Shape> out;
  for (int k = 0; k < unknowns; ++k) {
    if (!rows[static_cast<size_t>(k)] || !cols[static_cast<size_t>(k)])
      throw ShapeError("X" + std::to_string(k + 1) + " does not occur in any equation");
    out.push_back({*rows[static_cast<size_t>(k)], *cols[static_cast<size_t>(k)]});
  }
  return out;
}

std::vector<double> one_sided_residuals(const std::vector<OneSided>& eqs, const std::vector<QuatMatrix>& X) {
  std::vector<double> out;
  for (const auto& e : eqs) {
    if (static_cast<size_t>(std::max(e.left, e.right)) >= X.size()) throw ShapeError("missing unknown in solution");
    const auto& xl = X.at(static_cast<size_t>(e.left));
    const auto& xr = X.at(static_cast<size_t>(e.right));
    if (xl.rows() != e.A->cols() || xl.cols() != e.C->cols() || xr.rows() != e.C->rows() ||
        xr.cols() != e.B->rows())
      throw ShapeError("solution shape does not fit the equation");
    out.push_back(((*e.A) * xl - xr * (*e.B) - *e.C).frobenius());
  }
  return out;
}

}  // namespace qsyl

namespace qsyl {

double ResidualReport::max_relative() const {
  double m = 0.0;
  for (double a : absolute) m = std::max(m, a / scale);
  return m;
}

}  // namespace qsyl
