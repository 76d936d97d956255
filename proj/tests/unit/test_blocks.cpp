#include <doctest.h>

#include "support.hpp"

using namespace qsyl;
using qsyl::test::dist;
using qsyl::test::random_int;
using qsyl::test::random_low_rank;

namespace {

double max_of(const std::vector<double>& v) {
  double m = 0;
  for (double x : v) m = std::max(m, x);
  return m;
}

// Consistent pair: random low-rank coefficients, right-hand sides from a planted solution.
PairSystem planted_pair(PairKind kind, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> side(1, 4);
  auto coef = [&](Index m, Index n) {
    std::uniform_int_distribution<int> k(0, static_cast<int>(std::min(m, n)));
    return random_low_rank(m, n, k(rng), rng);
  };
  const Index n1 = side(rng), q1 = side(rng), p1 = side(rng), r1 = side(rng);
  const Index m1 = side(rng), m2 = side(rng), c2 = side(rng);
  const QuatMatrix X1 = random_int(n1, q1, rng), X2 = random_int(p1, r1, rng);
  PairSystem s;
  s.kind = kind;
  s.A1 = coef(p1, n1);
  s.B1 = coef(r1, q1);
  s.C1 = s.A1 * X1 - X2 * s.B1;
  switch (kind) {
    case PairKind::common_right: {
      const QuatMatrix X3 = random_int(m1, c2, rng);
      s.A2 = coef(p1, m1);
      s.B2 = coef(r1, c2);
      s.C2 = s.A2 * X3 - X2 * s.B2;
      break;
    }
    case PairKind::chain: {
      const QuatMatrix X3 = random_int(m2, c2, rng);
      s.A2 = coef(m2, p1);
      s.B2 = coef(c2, r1);
      s.C2 = s.A2 * X2 - X3 * s.B2;
      break;
    }
    case PairKind::common_left: {
      const QuatMatrix X3 = random_int(m2, c2, rng);
      s.A2 = coef(m2, n1);
      s.B2 = coef(c2, q1);
      s.C2 = s.A2 * X1 - X3 * s.B2;
      break;
    }
  }
  return s;
}

FourTermEquation planted_four_term(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> side(1, 4);
  auto coef = [&](Index m, Index n) {
    std::uniform_int_distribution<int> k(0, static_cast<int>(std::min(m, n)));
    return random_low_rank(m, n, k(rng), rng);
  };
  const Index m = side(rng), n = side(rng);
  const Index a = side(rng), b = side(rng), c = side(rng), d = side(rng), e = side(rng), f = side(rng);
  FourTermEquation eq;
  eq.A1 = coef(m, a);
  eq.B1 = coef(b, n);
  eq.C3 = coef(m, c);
  eq.D3 = coef(d, n);
  eq.C4 = coef(m, e);
  eq.D4 = coef(f, n);
  eq.E1 = eq.A1 * random_int(a, n, rng) + random_int(m, b, rng) * eq.B1 + eq.C3 * random_int(c, d, rng) * eq.D3 +
          eq.C4 * random_int(e, f, rng) * eq.D4;
  return eq;
}

const std::filesystem::path fixtures = QSYL_FIXTURE_DIR;

}  // namespace

TEST_CASE("single equation") {
  std::mt19937_64 rng(1);
  const auto C = random_int(3, 3, rng);
  const auto I3 = QuatMatrix::identity(3);
  const auto s = solve_single(I3, I3, C);
  CHECK(dist(s.X, C) < 1e-14);
  CHECK(s.Y.frobenius() < 1e-14);

  const auto Z = QuatMatrix::zeros(2, 2);
  CHECK_THROWS_AS(solve_single(Z, Z, QuatMatrix::identity(2)), Inconsistent);

  for (int t = 0; t < 20; ++t) {
    const auto A = random_low_rank(3, 4, t % 4, rng);
    const auto B = random_low_rank(2, 5, t % 3, rng);
    const auto C0 = A * random_int(4, 5, rng) - random_int(3, 2, rng) * B;
    const double scale = scale_of({&A, &B, &C0});
    for (int d = 0; d < 3; ++d) {
      const auto free = d ? random_parameters(single_shapes(A, B, C0), 100 * t + d) : FreeParameters{};
      const auto x = solve_single(A, B, C0, free);
      CHECK((A * x.X - x.Y * B - C0).frobenius() <= 1e-8 * scale);
    }
  }
}

TEST_CASE("pair solver, all kinds, zero and random parameters") {
  std::mt19937_64 rng(2);
  for (PairKind kind : {PairKind::common_right, PairKind::chain, PairKind::common_left}) {
    CAPTURE(to_string(kind));
    for (int t = 0; t < 30; ++t) {
      const PairSystem s = planted_pair(kind, rng);
      const auto cert = check_pair(s);
      REQUIRE(cert.rank_verdict());
      REQUIRE(cert.projector_verdict());
      for (int d = 0; d < 6; ++d) {
        const auto free = d ? random_parameters(pair_shapes(s), 31 * t + d) : FreeParameters{};
        const auto x = solve_pair(s, free);
        CHECK(residual(s, x.X1, x.X2, x.X3).max_relative() <= 1e-8);
      }
    }
  }
}

TEST_CASE("pair with zero right-hand sides returns zero") {
  std::mt19937_64 rng(3);
  for (PairKind kind : {PairKind::common_right, PairKind::chain, PairKind::common_left}) {
    PairSystem s = planted_pair(kind, rng);
    s.C1 = QuatMatrix::zeros(s.C1.rows(), s.C1.cols());
    s.C2 = QuatMatrix::zeros(s.C2.rows(), s.C2.cols());
    for (const auto& c : check_pair(s).ranks) CHECK(c.holds());
    const auto x = solve_pair(s);
    CHECK(x.X1.frobenius() == 0);
    CHECK(x.X2.frobenius() == 0);
    CHECK(x.X3.frobenius() == 0);
  }
}

TEST_CASE("perturbed chain pair is rejected by both routes") {
  std::mt19937_64 rng(4);
  int tested = 0;
  for (int t = 0; t < 40; ++t) {
    PairSystem s = planted_pair(PairKind::chain, rng);
    const Ops o;
    const auto RA = o.R(s.A2), LB = o.L(s.B2);
    // A rank-1 bump u v* with R_A2 u != 0 and v* L_B2 != 0 cannot be absorbed.
    const auto u = RA * random_int(s.C2.rows(), 1, rng);
    const auto v = random_int(1, s.C2.cols(), rng) * LB;
    if (u.frobenius() < 1e-6 || v.frobenius() < 1e-6) continue;
    s.C2 = s.C2 + u * v;
    const auto cert = check_pair(s);
    CHECK_FALSE(cert.rank_verdict());
    CHECK_FALSE(cert.projector_verdict());
    CHECK_FALSE(oracle_check(s).consistent);
    ++tested;
  }
  CHECK(tested > 10);
}

TEST_CASE("common_right pair from the first reference system") {
  const auto f = reference_fixture("ex31", fixtures);
  PairSystem s{PairKind::common_right, f.recorded.A[0], f.recorded.B[0], f.recorded.C[0],
               f.recorded.A[1],        f.recorded.B[1], f.recorded.C[1]};
  const auto cert = check_pair(s);
  REQUIRE(cert.ranks.size() == 3);
  CHECK(cert.ranks[2].id == "row[1|2]");
  CHECK(cert.ranks[2].lhs == 6);
  CHECK(cert.ranks[2].rhs == 6);
  CHECK(cert.consistent());
}

TEST_CASE("chain pair from the second reference system") {
  const auto f = reference_fixture("ex41", fixtures);
  PairSystem s{PairKind::chain,  f.recorded.A[0], f.recorded.B[0], f.recorded.C[0],
               f.recorded.A[1], f.recorded.B[1], f.recorded.C[1]};
  REQUIRE(check_pair(s).consistent());
  const auto x = solve_pair(s);
  CHECK(residual(s, x.X1, x.X2, x.X3).max_relative() <= 1e-8);
}

TEST_CASE("common_right pair with an empty second equation degrades to a single equation") {
  std::mt19937_64 rng(5);
  for (int t = 0; t < 10; ++t) {
    const auto A = random_low_rank(3, 2, t % 3, rng);
    const auto B = random_low_rank(4, 3, t % 4, rng);
    const auto C = A * random_int(2, 3, rng) - random_int(3, 4, rng) * B;
    PairSystem s{PairKind::common_right, A, B, C, QuatMatrix::zeros(3, 0), QuatMatrix::zeros(4, 0),
                 QuatMatrix::zeros(3, 0)};
    const auto p = solve_pair(s);
    const auto q = solve_single(A, B, C);
    CHECK(max_of(pair_residuals(s, p.X1, p.X2, p.X3)) <= 1e-8 * s.scale());
    CHECK(dist(p.X1, q.X) <= 1e-8 * s.scale());
    CHECK(dist(p.X2, q.Y) <= 1e-8 * s.scale());
    CHECK(p.X3.shape() == Shape{0, 0});
  }
}

TEST_CASE("pair parameter shapes are checked") {
  std::mt19937_64 rng(6);
  const PairSystem s = planted_pair(PairKind::common_left, rng);
  FreeParameters bad{{"W1", QuatMatrix::zeros(7, 7)}};
  CHECK_THROWS_AS(solve_pair(s, bad), ShapeError);
  CHECK_THROWS_AS(solve_pair(s, {{"Q9", QuatMatrix::zeros(1, 1)}}), ShapeError);
}

TEST_CASE("four-term equation") {
  std::mt19937_64 rng(7);
  SUBCASE("zero right-hand side") {
    auto eq = planted_four_term(rng);
    eq.E1 = QuatMatrix::zeros(eq.E1.rows(), eq.E1.cols());
    const auto x = solve_four_term(eq);
    CHECK(x.X1.frobenius() + x.X2.frobenius() + x.X3.frobenius() + x.X4.frobenius() == 0);
  }
  SUBCASE("identity outer coefficients") {
    const auto E = random_int(3, 3, rng);
    const auto Z = QuatMatrix::zeros(3, 3);
    const FourTermEquation eq{QuatMatrix::identity(3), QuatMatrix::identity(3), Z, Z, Z, Z, E};
    const auto x = solve_four_term(eq);
    CHECK(dist(x.X1, E) < 1e-14);
    CHECK(x.X2.frobenius() < 1e-14);
  }
  SUBCASE("planted instances with parameter draws") {
    for (int t = 0; t < 50; ++t) {
      const auto eq = planted_four_term(rng);
      const Ops o(Tolerances{}, Tolerances{}.zero_rtol * eq.scale());
      for (const auto& c : four_term_conditions(four_term_aux(eq, o), o, eq.scale())) CHECK(c.holds);
      for (int d = 0; d < 6; ++d) {
        const auto T = d ? random_parameters(four_term_shapes(eq), 17 * t + d) : FreeParameters{};
        const auto x = solve_four_term(eq, T);
        CHECK(residual(eq, x).max_relative() <= 1e-8);
        CHECK(four_term_residual(eq, x) <= 1e-8 * eq.scale());
      }
    }
  }
  SUBCASE("inconsistent") {
    const auto Z = QuatMatrix::zeros(2, 2);
    const FourTermEquation eq{Z, Z, Z, Z, Z, Z, QuatMatrix::identity(2)};
    CHECK_THROWS_AS(solve_four_term(eq), Inconsistent);
    CHECK_FALSE(oracle_check(eq).consistent);
  }
}

TEST_CASE("rank identities") {
  std::mt19937_64 rng(8);
  const auto B = random_int(3, 2, rng);
  const auto C = random_int(4, 3, rng);
  const auto I3 = QuatMatrix::identity(3);
  const Ops o;
  CHECK(o.rank(o.R(I3) * B) == 0);
  CHECK(o.rank(hcat(I3, B)) == 3);
  const auto id = rank_identity_check(I3, B, C);
  CHECK(id.row_identity);
  CHECK(id.col_identity);
  const auto z = rank_identity_check(QuatMatrix::zeros(3, 3), B, C);
  CHECK(z.row_identity);
  CHECK(z.col_identity);

  std::uniform_int_distribution<int> side(1, 5);
  for (int t = 0; t < 200; ++t) {
    const Index m = side(rng), n = side(rng), p = side(rng), q = side(rng);
    std::uniform_int_distribution<int> k(0, static_cast<int>(std::min(m, n)));
    const auto A = random_low_rank(m, n, k(rng), rng);
    const auto r = rank_identity_check(A, random_low_rank(m, p, 1 + t % 3, rng), random_low_rank(q, n, 1 + t % 2, rng));
    CHECK(r.row_identity);
    CHECK(r.col_identity);
  }
  CHECK_THROWS_AS(rank_identity_check(I3, QuatMatrix::zeros(2, 2), C), ShapeError);
}
