#include "qsyl/verification.hpp"

#include <Eigen/QR>

#include "qsyl/errors.hpp"

namespace qsyl {

ResidualReport residual(const CoupledSystem& sys, const std::vector<QuatMatrix>& X) {
  return {one_sided_residuals(sys.equations(), X), sys.scale()};
}

ResidualReport residual(const PairSystem& sys, const QuatMatrix& X1, const QuatMatrix& X2, const QuatMatrix& X3) {
  return {pair_residuals(sys, X1, X2, X3), sys.scale()};
}

ResidualReport residual(const FourTermEquation& eq, const FourTermSolution& x) {
  eq.unknown_shapes();
  if (x.X1.rows() != eq.A1.cols() || x.X2.cols() != eq.B1.rows() || x.X3.rows() != eq.C3.cols() ||
      x.X3.cols() != eq.D3.rows() || x.X4.rows() != eq.C4.cols() || x.X4.cols() != eq.D4.rows() ||
      x.X1.cols() != eq.E1.cols() || x.X2.rows() != eq.E1.rows())
    throw ShapeError("solution shape does not fit the four-term equation");
  return {{four_term_residual(eq, x)}, eq.scale()};
}

Eigen::Matrix4d left_mult(const Quaternion& q) {
  const double a = q.a0, b = q.a1, c = q.a2, d = q.a3;
  Eigen::Matrix4d m;
  m << a, -b, -c, -d,
       b,  a, -d,  c,
       c,  d,  a, -b,
       d, -c,  b,  a;
  return m;
}

Eigen::Matrix4d right_mult(const Quaternion& q) {
  const double a = q.a0, b = q.a1, c = q.a2, d = q.a3;
  Eigen::Matrix4d m;
  m << a, -b, -c, -d,
       b,  a,  d, -c,
       c, -d,  a,  b,
       d,  c, -b,  a;
  return m;
}

namespace {

// Entry (r, c) of an m x n matrix, column-major, four reals per entry.
Index slot(Index r, Index c, Index m) { return 4 * (r + m * c); }

Quaternion entry_or_identity(const QuatMatrix* a, Index r, Index c) {
  if (a) return (*a)(r, c);
  return r == c ? Quaternion{1, 0, 0, 0} : Quaternion{};
}

}  // namespace

OracleVerdict oracle_check(const std::vector<LinearEquation>& eqs, const std::vector<Shape>& unknowns,
                           const OracleOptions& opt) {
  std::vector<Index> offset;
  Index n = 0;
  for (const auto& s : unknowns) {
    offset.push_back(n);
    n += 4 * s.rows * s.cols;
  }
  if (n > opt.cap)
    throw CapExceeded("oracle needs " + std::to_string(n) + " real unknowns, cap is " + std::to_string(opt.cap));
  Index m = 0;
  std::vector<Index> row_offset;
  for (const auto& e : eqs) {
    if (!e.rhs) throw ShapeError("oracle equation without right-hand side");
    row_offset.push_back(m);
    m += 4 * e.rhs->rows() * e.rhs->cols();
  }

  Eigen::MatrixXd M = Eigen::MatrixXd::Zero(m, n);
  Eigen::VectorXd rhs(m);
  for (size_t i = 0; i < eqs.size(); ++i) {
    const auto& e = eqs[i];
    const Index er = e.rhs->rows(), ec = e.rhs->cols();
    for (Index r = 0; r < er; ++r)
      for (Index c = 0; c < ec; ++c) {
        const Quaternion q = (*e.rhs)(r, c);
        rhs.segment<4>(row_offset[i] + slot(r, c, er)) << q.a0, q.a1, q.a2, q.a3;
      }
    for (const auto& t : e.terms) {
      const Shape x = unknowns.at(static_cast<size_t>(t.unknown));
      const Index lr = t.left ? t.left->rows() : x.rows;
      const Index rc = t.right ? t.right->cols() : x.cols;
      if ((t.left && t.left->cols() != x.rows) || (t.right && t.right->rows() != x.cols) || lr != er || rc != ec)
        throw ShapeError("oracle term is not conformable");
      // (L X R)_ik = sum_jl L_ij X_jl R_lk, and q x p acts on x as left(q) right(p).
      for (Index i2 = 0; i2 < er; ++i2)
        for (Index j = 0; j < x.rows; ++j) {
          const Quaternion l = entry_or_identity(t.left, i2, j);
          if (l.norm2() == 0.0) continue;
          const Eigen::Matrix4d Lm = t.sign * left_mult(l);
          for (Index k = 0; k < ec; ++k)
            for (Index l2 = 0; l2 < x.cols; ++l2) {
              const Quaternion p = entry_or_identity(t.right, l2, k);
              if (p.norm2() == 0.0) continue;
              M.block<4, 4>(row_offset[i] + slot(i2, k, er), offset[static_cast<size_t>(t.unknown)] + slot(j, l2, x.rows)) +=
                  Lm * right_mult(p);
            }
        }
    }
  }

  OracleVerdict v;
  v.unknowns = n;
  if (m == 0) {
    v.consistent = true;
    return v;
  }
  Eigen::VectorXd x = Eigen::VectorXd::Zero(n);
  if (n > 0) x = M.completeOrthogonalDecomposition().solve(rhs);
  v.relative_residual = (M * x - rhs).norm() / (1.0 + rhs.norm());
  v.consistent = v.relative_residual <= opt.cond_tol;
  return v;
}

OracleVerdict oracle_check(const CoupledSystem& sys, const OracleOptions& opt) {
  const auto shapes = sys.unknown_shapes();
  std::vector<LinearEquation> eqs;
  for (const auto& e : sys.equations())
    eqs.push_back({{{e.A, e.left, nullptr, 1.0}, {nullptr, e.right, e.B, -1.0}}, e.C});
  return oracle_check(eqs, shapes, opt);
}

OracleVerdict oracle_check(const PairSystem& sys, const OracleOptions& opt) {
  const auto shapes = sys.unknown_shapes();
  const int second_left = sys.kind == PairKind::common_right ? 2 : sys.kind == PairKind::chain ? 1 : 0;
  const int second_right = sys.kind == PairKind::common_right ? 1 : 2;
  std::vector<LinearEquation> eqs{
      {{{&sys.A1, 0, nullptr, 1.0}, {nullptr, 1, &sys.B1, -1.0}}, &sys.C1},
      {{{&sys.A2, second_left, nullptr, 1.0}, {nullptr, second_right, &sys.B2, -1.0}}, &sys.C2}};
  return oracle_check(eqs, shapes, opt);
}

OracleVerdict oracle_check(const FourTermEquation& eq, const OracleOptions& opt) {
  const auto shapes = eq.unknown_shapes();
  std::vector<LinearEquation> eqs{{{{&eq.A1, 0, nullptr, 1.0},
                                    {nullptr, 1, &eq.B1, 1.0},
                                    {&eq.C3, 2, &eq.D3, 1.0},
                                    {&eq.C4, 3, &eq.D4, 1.0}},
                                   &eq.E1}};
  return oracle_check(eqs, shapes, opt);
}

const std::vector<std::string>& reference_ids() {
  static const std::vector<std::string> ids{"ex31", "ex41", "ex51", "ex61", "ex71"};
  return ids;
}

ReferenceFixture reference_fixture(const std::string& id, const std::filesystem::path& dir) {
  ReferenceFixture f;
  f.id = id;
  f.file = load_qsys(dir / (id + ".qsys"));
  f.checksum = checksum(f.file);
  f.reference_ranks = f.file.ranks;
  const SystemFile fixed = f.file.corrected();
  f.recorded = f.file.system();
  f.corrected = fixed.system();
  if (auto x = f.file.solution()) f.recorded_solution = std::move(*x);
  if (auto x = fixed.solution()) f.corrected_solution = std::move(*x);
  return f;
}

}  // namespace qsyl
