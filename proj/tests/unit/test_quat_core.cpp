#include <doctest.h>

#include <sstream>

#include "support.hpp"

using namespace qsyl;
using qsyl::test::dist;

namespace {
const Quaternion I = Quaternion::i();
const Quaternion J = Quaternion::j();
const Quaternion K = Quaternion::k();
}  // namespace

TEST_CASE("hamilton product basis") {
  CHECK(qmul(I, J) == K);
  CHECK(qmul(J, I) == -K);
  CHECK(qmul(J, K) == I);
  CHECK(qmul(K, I) == J);
  CHECK(I * I == Quaternion(-1));
  CHECK(qmul(Quaternion(1, 1, 0, 0), Quaternion(1, 0, 1, 0)) == Quaternion(1, 1, 1, 1));
}

TEST_CASE("quaternion inverse and conjugate") {
  const Quaternion q(1, -2, 3, 0.5);
  const Quaternion p = q * inverse(q);
  CHECK(p.a0 == doctest::Approx(1));
  CHECK(std::abs(p.a1) + std::abs(p.a2) + std::abs(p.a3) < 1e-15);
  CHECK((q * q.conj()).a0 == doctest::Approx(q.norm2()));
}

TEST_CASE("symplectic storage round trips entries") {
  const auto a = QuatMatrix::from_rows({{{1, 2, 3, 4}, {0, -1, 0, 5}}, {{7, 0, 0, 0}, {0, 0, 0, -2}}});
  CHECK(a(0, 0) == Quaternion(1, 2, 3, 4));
  CHECK(a(0, 1) == Quaternion(0, -1, 0, 5));
  CHECK(a(1, 1) == Quaternion(0, 0, 0, -2));
  CHECK(a.z1()(0, 0) == std::complex<double>(1, 2));
  CHECK(a.z2()(0, 0) == std::complex<double>(3, 4));
}

TEST_CASE("matrix product agrees with entrywise hamilton products") {
  std::mt19937_64 rng(11);
  const auto a = test::random_int(3, 4, rng);
  const auto b = test::random_int(4, 2, rng);
  const auto c = a * b;
  for (Index r = 0; r < 3; ++r) {
    for (Index s = 0; s < 2; ++s) {
      Quaternion acc;
      for (Index t = 0; t < 4; ++t) acc += a(r, t) * b(t, s);
      CHECK(c(r, s) == acc);
    }
  }
}

TEST_CASE("conjugate transpose") {
  CHECK(QuatMatrix::from_rows({{I}}).conj_transpose() == QuatMatrix::from_rows({{-I}}));
  CHECK(QuatMatrix::identity(3).conj_transpose() == QuatMatrix::identity(3));
  std::mt19937_64 rng(3);
  const auto a = test::random_int(2, 5, rng);
  CHECK(a.conj_transpose().shape() == Shape{5, 2});
  CHECK(a.conj_transpose().conj_transpose() == a);
  const auto b = test::random_int(5, 3, rng);
  CHECK(dist((a * b).conj_transpose(), b.conj_transpose() * a.conj_transpose()) < 1e-12);
}

TEST_CASE("complex adjoint") {
  const auto chi = to_adjoint(QuatMatrix::from_rows({{{1, 0, 1, 0}}}));
  CMatrix want(2, 2);
  want << 1, 1, -1, 1;
  CHECK((chi.data - want).norm() == 0);
  CHECK(to_adjoint(QuatMatrix::zeros(2, 3)).data.isZero());

  std::mt19937_64 rng(5);
  const auto a = test::random_real(3, 4, rng);
  const auto b = test::random_real(4, 2, rng);
  const double scale = 1 + std::max(a.frobenius(), b.frobenius());
  const CMatrix lhs = to_adjoint(a * b).data;
  const CMatrix rhs = to_adjoint(a).data * to_adjoint(b).data;
  CHECK((lhs - rhs).norm() <= 1e-12 * scale);
  CHECK(from_adjoint(to_adjoint(a)) == a);
  CHECK(block_symmetry_defect(to_adjoint(a)) == 0);
}

TEST_CASE("from_adjoint rejects a broken block structure") {
  auto chi = to_adjoint(QuatMatrix::identity(2));
  chi.data(3, 3) = 5;
  CHECK_THROWS_AS(from_adjoint(chi), ToleranceError);
}

TEST_CASE("rank") {
  CHECK(rank(QuatMatrix::identity(3)) == 3);
  CHECK(rank(QuatMatrix::zeros(2, 3)) == 0);
  CHECK(rank(QuatMatrix::from_rows({{1, I}, {J, K}})) == 2);
  // Row 2 is j times row 1 from the left.
  CHECK(rank(QuatMatrix::from_rows({{1, I}, {J, -K}})) == 1);
  std::mt19937_64 rng(9);
  for (int k = 0; k <= 3; ++k) CHECK(rank(test::random_low_rank(4, 5, k, rng)) <= k);
  CHECK(rank(QuatMatrix::zeros(0, 4)) == 0);
}

TEST_CASE("pseudoinverse") {
  CHECK(pinv(QuatMatrix::identity(3)) == QuatMatrix::identity(3));
  CHECK(dist(pinv(QuatMatrix::from_rows({{I}})), QuatMatrix::from_rows({{-I}})) < 1e-15);
  const Quaternion q(1, 2, -1, 3);
  CHECK(dist(pinv(QuatMatrix::from_rows({{q}})), QuatMatrix::from_rows({{inverse(q)}})) < 1e-15);

  std::mt19937_64 rng(21);
  const auto a = test::random_real(4, 3, rng);
  CHECK(penrose_residuals(a, pinv(a)).max() <= 1e-10 * (1 + a.frobenius()));
  const auto d = test::random_low_rank(5, 4, 2, rng);
  CHECK(penrose_residuals(d, pinv(d)).max() <= 1e-10 * (1 + d.frobenius()));
  CHECK(pinv(QuatMatrix::zeros(2, 3)) == QuatMatrix::zeros(3, 2));
}

TEST_CASE("projectors") {
  CHECK(proj_L(QuatMatrix::identity(3)).frobenius() < 1e-15);
  CHECK(proj_L(QuatMatrix::zeros(3, 3)) == QuatMatrix::identity(3));
  CHECK(proj_R(QuatMatrix::zeros(2, 4)) == QuatMatrix::identity(2));

  std::mt19937_64 rng(8);
  const auto a = test::random_low_rank(4, 5, 3, rng);
  const double scale = 1 + a.frobenius();
  const auto l = proj_L(a);
  const auto r = proj_R(a);
  CHECK(l.shape() == Shape{5, 5});
  CHECK(r.shape() == Shape{4, 4});
  CHECK(dist(l * l, l) <= 1e-12 * scale);
  CHECK(dist(r * r, r) <= 1e-12 * scale);
  CHECK(dist(l, l.conj_transpose()) <= 1e-12);
  CHECK(dist(r, r.conj_transpose()) <= 1e-12);
  CHECK((a * l).frobenius() <= 1e-12 * scale);
  CHECK((r * a).frobenius() <= 1e-12 * scale);
}

TEST_CASE("empty-matrix conventions") {
  const auto e = QuatMatrix::zeros(0, 3);
  CHECK(pinv(e).shape() == Shape{3, 0});
  CHECK(proj_L(e) == QuatMatrix::identity(3));
  CHECK(proj_R(e).shape() == Shape{0, 0});
  CHECK(rank(QuatMatrix::zeros(0, 0)) == 0);
  CHECK((QuatMatrix::zeros(2, 0) * QuatMatrix::zeros(0, 3)) == QuatMatrix::zeros(2, 3));
}

TEST_CASE("tolerance validation") {
  Tolerances t;
  CHECK_NOTHROW(t.validate());
  t.verify_tol = -1;
  CHECK_THROWS_AS(t.validate(), std::invalid_argument);
}

TEST_CASE("block layouts") {
  const auto a = QuatMatrix::identity(2);
  const auto g = grid({{a, QuatMatrix::zeros(2, 1)}, {QuatMatrix::zeros(1, 2), QuatMatrix::from_rows({{K}})}});
  CHECK(g.shape() == Shape{3, 3});
  CHECK(g(2, 2) == K);
  CHECK(hcat(a, a).shape() == Shape{2, 4});
  CHECK(vcat(a, QuatMatrix::zeros(0, 2)) == a);
  CHECK_THROWS_AS(hcat(a, QuatMatrix::zeros(3, 1)), ShapeError);
}

TEST_CASE("stream output is readable") {
  std::ostringstream os;
  os << Quaternion(1, -2, 0, 3);
  CHECK(!os.str().empty());
}
