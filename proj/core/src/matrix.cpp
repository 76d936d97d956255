#include "qsyl/matrix.hpp"

#include <iomanip>

#include "qsyl/errors.hpp"

namespace qsyl {

namespace {

using cd = std::complex<double>;

void require(bool ok, const char* what) {
  if (!ok) throw ShapeError(what);
}

}  // namespace

std::ostream& operator<<(std::ostream& os, const Quaternion& q) {
  return os << '(' << q.a0 << ", " << q.a1 << ", " << q.a2 << ", " << q.a3 << ')';
}

QuatMatrix::QuatMatrix(Index rows, Index cols)
    : z1_(CMatrix::Zero(rows, cols)), z2_(CMatrix::Zero(rows, cols)) {}

QuatMatrix::QuatMatrix(CMatrix z1, CMatrix z2) : z1_(std::move(z1)), z2_(std::move(z2)) {
  require(z1_.rows() == z2_.rows() && z1_.cols() == z2_.cols(), "symplectic parts differ in shape");
}

QuatMatrix QuatMatrix::identity(Index n) {
  return {CMatrix::Identity(n, n), CMatrix::Zero(n, n)};
}

QuatMatrix QuatMatrix::from_entries(Index rows, Index cols, const std::vector<Quaternion>& entries) {
  require(static_cast<Index>(entries.size()) == rows * cols, "entry count does not match rows*cols");
  QuatMatrix m(rows, cols);
  for (Index r = 0; r < rows; ++r)
    for (Index c = 0; c < cols; ++c) m.set(r, c, entries[static_cast<size_t>(r * cols + c)]);
  return m;
}

QuatMatrix QuatMatrix::from_rows(std::initializer_list<std::initializer_list<Quaternion>> rows) {
  const Index m = static_cast<Index>(rows.size());
  const Index n = m ? static_cast<Index>(rows.begin()->size()) : 0;
  std::vector<Quaternion> e;
  for (const auto& row : rows) {
    require(static_cast<Index>(row.size()) == n, "ragged row list");
    e.insert(e.end(), row.begin(), row.end());
  }
  return from_entries(m, n, e);
}

QuatMatrix QuatMatrix::from_real(const Eigen::MatrixXd& re) {
  return {re.cast<cd>(), CMatrix::Zero(re.rows(), re.cols())};
}

Quaternion QuatMatrix::operator()(Index r, Index c) const {
  const cd a = z1_(r, c), b = z2_(r, c);
  return {a.real(), a.imag(), b.real(), b.imag()};
}

void QuatMatrix::set(Index r, Index c, const Quaternion& q) {
  z1_(r, c) = cd(q.a0, q.a1);
  z2_(r, c) = cd(q.a2, q.a3);
}

std::vector<Quaternion> QuatMatrix::entries() const {
  std::vector<Quaternion> e;
  e.reserve(static_cast<size_t>(rows() * cols()));
  for (Index r = 0; r < rows(); ++r)
    for (Index c = 0; c < cols(); ++c) e.push_back((*this)(r, c));
  return e;
}

// conj(z1 + z2 j) = conj(z1) - z2 j, so A* = Z1^H - Z2^T j.
QuatMatrix QuatMatrix::conj_transpose() const {
  return {z1_.adjoint(), -z2_.transpose()};
}

double QuatMatrix::frobenius() const {
  return std::sqrt(z1_.squaredNorm() + z2_.squaredNorm());
}

QuatMatrix QuatMatrix::block(Index r, Index c, Index h, Index w) const {
  require(r >= 0 && c >= 0 && h >= 0 && w >= 0 && r + h <= rows() && c + w <= cols(),
          "block out of range");
  return {z1_.block(r, c, h, w), z2_.block(r, c, h, w)};
}

QuatMatrix& QuatMatrix::operator+=(const QuatMatrix& o) {
  require(shape() == o.shape(), "addition of mismatched shapes");
  z1_ += o.z1_;
  z2_ += o.z2_;
  return *this;
}

QuatMatrix& QuatMatrix::operator-=(const QuatMatrix& o) {
  require(shape() == o.shape(), "subtraction of mismatched shapes");
  z1_ -= o.z1_;
  z2_ -= o.z2_;
  return *this;
}

bool operator==(const QuatMatrix& a, const QuatMatrix& b) {
  return a.shape() == b.shape() && a.z1_ == b.z1_ && a.z2_ == b.z2_;
}

QuatMatrix operator+(QuatMatrix a, const QuatMatrix& b) { return a += b; }
QuatMatrix operator-(QuatMatrix a, const QuatMatrix& b) { return a -= b; }

// (A1 + A2 j)(B1 + B2 j) = (A1 B1 - A2 conj(B2)) + (A1 B2 + A2 conj(B1)) j
QuatMatrix operator*(const QuatMatrix& a, const QuatMatrix& b) {
  require(a.cols() == b.rows(), "product of non-conformable matrices");
  if (a.rows() == 0 || b.cols() == 0 || a.cols() == 0) return QuatMatrix::zeros(a.rows(), b.cols());
  return {a.z1() * b.z1() - a.z2() * b.z2().conjugate(), a.z1() * b.z2() + a.z2() * b.z1().conjugate()};
}

QuatMatrix operator*(double s, const QuatMatrix& a) { return {s * a.z1(), s * a.z2()}; }

QuatMatrix operator*(const Quaternion& q, const QuatMatrix& a) {
  QuatMatrix out(a.rows(), a.cols());
  for (Index r = 0; r < a.rows(); ++r)
    for (Index c = 0; c < a.cols(); ++c) out.set(r, c, q * a(r, c));
  return out;
}

QuatMatrix hcat(const QuatMatrix& a, const QuatMatrix& b) { return grid({{a, b}}); }
QuatMatrix vcat(const QuatMatrix& a, const QuatMatrix& b) { return grid({{a}, {b}}); }

QuatMatrix grid(const std::vector<std::vector<QuatMatrix>>& blocks) {
  if (blocks.empty()) return {};
  const size_t nc = blocks.front().size();
  std::vector<Index> heights, widths(nc, 0);
  for (size_t i = 0; i < blocks.size(); ++i) {
    require(blocks[i].size() == nc, "ragged block layout");
    heights.push_back(blocks[i][0].rows());
    for (size_t j = 0; j < nc; ++j) {
      require(blocks[i][j].rows() == heights[i], "block row heights disagree");
      if (i == 0) widths[j] = blocks[0][j].cols();
      require(blocks[i][j].cols() == widths[j], "block column widths disagree");
    }
  }
  Index m = 0, n = 0;
  for (Index h : heights) m += h;
  for (Index w : widths) n += w;
  CMatrix z1(m, n), z2(m, n);
  Index r = 0;
  for (size_t i = 0; i < blocks.size(); ++i) {
    Index c = 0;
    for (size_t j = 0; j < nc; ++j) {
      z1.block(r, c, heights[i], widths[j]) = blocks[i][j].z1();
      z2.block(r, c, heights[i], widths[j]) = blocks[i][j].z2();
      c += widths[j];
    }
    r += heights[i];
  }
  return {std::move(z1), std::move(z2)};
}

std::ostream& operator<<(std::ostream& os, const QuatMatrix& a) {
  os << a.rows() << 'x' << a.cols() << '\n';
  for (Index r = 0; r < a.rows(); ++r) {
    for (Index c = 0; c < a.cols(); ++c) os << (c ? " " : "") << a(r, c);
    os << '\n';
  }
  return os;
}

}  // namespace qsyl
