#pragma once

#include <Eigen/Dense>
#include <initializer_list>
#include <vector>

#include "qsyl/quaternion.hpp"

namespace qsyl {

using Index = Eigen::Index;
using CMatrix = Eigen::MatrixXcd;

struct Shape {
  Index rows = 0;
  Index cols = 0;
  friend bool operator==(const Shape&, const Shape&) = default;
};

// Dense quaternion matrix stored in symplectic form A = Z1 + Z2 j, with Z1, Z2 complex.
// Entry a0 + a1 i + a2 j + a3 k maps to z1 = a0 + a1 i, z2 = a2 + a3 i.
class QuatMatrix {
 public:
  QuatMatrix() = default;
  QuatMatrix(Index rows, Index cols);
  QuatMatrix(CMatrix z1, CMatrix z2);

  static QuatMatrix zeros(Index rows, Index cols) { return {rows, cols}; }
  static QuatMatrix identity(Index n);
  // Row-major entries, length rows*cols.
  static QuatMatrix from_entries(Index rows, Index cols, const std::vector<Quaternion>& entries);
  static QuatMatrix from_rows(std::initializer_list<std::initializer_list<Quaternion>> rows);
  static QuatMatrix from_real(const Eigen::MatrixXd& re);

  Index rows() const { return z1_.rows(); }
  Index cols() const { return z1_.cols(); }
  Shape shape() const { return {rows(), cols()}; }
  bool empty() const { return rows() == 0 || cols() == 0; }

  Quaternion operator()(Index r, Index c) const;
  void set(Index r, Index c, const Quaternion& q);
  std::vector<Quaternion> entries() const;

  const CMatrix& z1() const { return z1_; }
  const CMatrix& z2() const { return z2_; }

  QuatMatrix conj_transpose() const;
  double frobenius() const;
  QuatMatrix block(Index r, Index c, Index h, Index w) const;
  QuatMatrix top_rows(Index n) const { return block(0, 0, n, cols()); }
  QuatMatrix bottom_rows(Index n) const { return block(rows() - n, 0, n, cols()); }
  QuatMatrix left_cols(Index n) const { return block(0, 0, rows(), n); }
  QuatMatrix right_cols(Index n) const { return block(0, cols() - n, rows(), n); }

  QuatMatrix& operator+=(const QuatMatrix& o);
  QuatMatrix& operator-=(const QuatMatrix& o);
  QuatMatrix operator-() const { return {-z1_, -z2_}; }

  friend bool operator==(const QuatMatrix& a, const QuatMatrix& b);

 private:
  CMatrix z1_;
  CMatrix z2_;
};

QuatMatrix operator+(QuatMatrix a, const QuatMatrix& b);
QuatMatrix operator-(QuatMatrix a, const QuatMatrix& b);
QuatMatrix operator*(const QuatMatrix& a, const QuatMatrix& b);
QuatMatrix operator*(double s, const QuatMatrix& a);
// Scalar quaternion on the left, acting entrywise: (q A)_rc = q * A_rc.
QuatMatrix operator*(const Quaternion& q, const QuatMatrix& a);

inline QuatMatrix conj_transpose(const QuatMatrix& a) { return a.conj_transpose(); }

QuatMatrix hcat(const QuatMatrix& a, const QuatMatrix& b);
QuatMatrix vcat(const QuatMatrix& a, const QuatMatrix& b);
// Every block in a row shares a row count and every block in a column a column count.
QuatMatrix grid(const std::vector<std::vector<QuatMatrix>>& blocks);
// Zero block with rows(a) rows and cols(b) columns; the filler in block layouts.
inline QuatMatrix zeros_like(const QuatMatrix& a, const QuatMatrix& b) {
  return QuatMatrix::zeros(a.rows(), b.cols());
}

std::ostream& operator<<(std::ostream& os, const QuatMatrix& a);

}  // namespace qsyl
