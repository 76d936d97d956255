#include <doctest.h>

#include "support.hpp"

using namespace qsyl;
using qsyl::test::random_int;

namespace {

CoupledSystem homogeneous(CoupledSystem s) {
  for (auto& c : s.C) c = QuatMatrix::zeros(c.rows(), c.cols());
  return s;
}

CoupledSystem random_coefficients(Kind kind, const std::vector<Shape>& u, unsigned long long seed) {
  std::mt19937_64 rng(seed);
  CoupledSystem s = CoupledSystem::zeros(kind, u);
  for (auto* v : {&s.A, &s.B, &s.C})
    for (auto& m : *v) m = random_int(m.rows(), m.cols(), rng);
  return s;
}

}  // namespace

TEST_CASE("kind names and patterns") {
  for (Kind k : all_kinds) {
    CHECK(parse_kind(to_string(k)) == k);
    CHECK(static_cast<int>(pattern(k).size()) == equation_count(k));
    CHECK(unknown_count(k) == (is_special(k) ? 4 : 5));
  }
  CHECK_FALSE(parse_kind("sys06").has_value());
}

TEST_CASE("zero right-hand sides are consistent and solve to zero") {
  for (Kind k : all_kinds) {
    CAPTURE(to_string(k));
    const auto g = generate(k, {}, 77);
    const auto s = homogeneous(g.sys);
    const auto cert = check(s);
    for (const auto& c : cert.ranks) CHECK(c.holds());
    CHECK(cert.projector_verdict());
    const auto x = solve(s);
    for (const auto& X : x.X) CHECK(X.frobenius() == 0);
  }
}

TEST_CASE("planted solution satisfies the generated system") {
  for (Kind k : all_kinds) {
    for (unsigned long long seed = 0; seed < 10; ++seed) {
      const auto g = generate(k, {}, seed);
      CHECK(static_cast<int>(g.planted.size()) == unknown_count(k));
      CHECK(residual(g.sys, g.planted).max_relative() <= 1e-13);
    }
  }
}

TEST_CASE("generated instances: both routes agree and solutions verify") {
  for (Kind k : all_kinds) {
    CAPTURE(to_string(k));
    for (unsigned long long seed = 0; seed < 15; ++seed) {
      const auto g = generate(k, {}, seed);
      const auto cert = check(g.sys);
      CHECK(cert.rank_verdict());
      CHECK(cert.projector_verdict());
      const auto shapes = shape_query(g.sys);
      for (int d = 0; d < 6; ++d) {
        const auto free = d ? random_parameters(shapes, 1000 * seed + d) : FreeParameters{};
        const auto x = solve(g.sys, free);
        CHECK(x.residuals.max_relative() <= 1e-8);
        CHECK(x.X3_alternate.has_value() != is_special(k));
        CHECK(x.branch_gap <= 1e-8 * g.sys.scale());
      }
    }
  }
}

TEST_CASE("perturbed instances are inconsistent on both routes") {
  for (Kind k : all_kinds) {
    CAPTURE(to_string(k));
    for (unsigned long long seed = 0; seed < 10; ++seed) {
      const auto p = perturb(generate(k, {}, seed).sys, seed + 500);
      REQUIRE(p.guaranteed);
      const auto cert = check(p.sys);
      CHECK_FALSE(cert.rank_verdict());
      CHECK_FALSE(cert.projector_verdict());
      CHECK_THROWS_AS(solve(p.sys), Inconsistent);
    }
  }
}

TEST_CASE("free-parameter reach: differences solve the homogeneous system") {
  for (Kind k : all_kinds) {
    const auto g = generate(k, {}, 4242);
    const auto shapes = shape_query(g.sys);
    const auto a = solve(g.sys, random_parameters(shapes, 1));
    const auto b = solve(g.sys, random_parameters(shapes, 2));
    std::vector<QuatMatrix> diff;
    for (size_t i = 0; i < a.X.size(); ++i) diff.push_back(a.X[i] - b.X[i]);
    const auto h = homogeneous(g.sys);
    CHECK(residual(h, diff).max_relative() <= 1e-8);
  }
}

TEST_CASE("solve is deterministic") {
  for (Kind k : all_kinds) {
    const auto g = generate(k, {}, 9);
    const auto free = random_parameters(shape_query(g.sys), 3);
    const auto a = solve(g.sys, free);
    const auto b = solve(g.sys, free);
    for (size_t i = 0; i < a.X.size(); ++i) CHECK(a.X[i] == b.X[i]);
    CHECK(generate(k, {}, 9).sys.C == g.sys.C);
  }
}

TEST_CASE("zero right-hand sides in the last full kind give a zero solution") {
  auto s = homogeneous(random_coefficients(Kind::sys05, {{3, 3}, {3, 3}, {3, 3}, {3, 3}, {3, 3}}, 5));
  const auto x = solve(s);
  REQUIRE(x.X.size() == 5);
  for (const auto& X : x.X) CHECK(X == QuatMatrix::zeros(3, 3));
}

TEST_CASE("shape query") {
  SUBCASE("square coefficients") {
    const std::vector<Shape> u(5, Shape{3, 3});
    const auto shapes = shape_query(random_coefficients(Kind::sys01, u, 1));
    CHECK(shapes.count("W4"));
    CHECK(shapes.count("T5"));
    // The inner four-term unknowns stack two outer parameters, so three of them are not square.
    for (const auto& [name, s] : shapes) {
      CAPTURE(name);
      if (name == "Z6")
        CHECK(s == Shape{6, 3});
      else if (name == "Z7" || name == "Z8")
        CHECK(s == Shape{3, 6});
      else
        CHECK(s == Shape{3, 3});
    }
  }
  SUBCASE("wide first coefficient") {
    // A1 is 2 x 4: X1 has 4 rows and X2 has 2.
    const auto s = CoupledSystem::zeros(Kind::sys01, {{4, 3}, {2, 3}, {3, 3}, {3, 3}, {3, 3}});
    REQUIRE(s.A[0].shape() == Shape{2, 4});
    CHECK(shape_query(s).at("W6").rows == 4);
  }
  SUBCASE("empty system") {
    for (Kind k : all_kinds) {
      const auto s = CoupledSystem::zeros(k, std::vector<Shape>(static_cast<size_t>(unknown_count(k))));
      for (const auto& [name, sh] : shape_query(s)) CHECK(sh == Shape{0, 0});
      const auto x = solve(s);
      for (const auto& X : x.X) CHECK(X.empty());
    }
  }
  SUBCASE("parameter shapes are enforced") {
    const auto g = generate(Kind::sys02, {}, 3);
    CHECK_THROWS_AS(solve(g.sys, {{"W1", QuatMatrix::zeros(9, 9)}}), ShapeError);
    CHECK_THROWS_AS(solve(g.sys, {{"nope", QuatMatrix::zeros(1, 1)}}), ShapeError);
  }
}

TEST_CASE("nonconformable systems are rejected") {
  auto s = CoupledSystem::zeros(Kind::sys03, std::vector<Shape>(5, Shape{2, 2}));
  s.B[2] = QuatMatrix::zeros(3, 2);
  CHECK_THROWS_AS(s.unknown_shapes(), ShapeError);
  CHECK_THROWS_AS(check(s), ShapeError);
}

TEST_CASE("auxiliary operators are named") {
  const auto g = generate(Kind::sys01, {}, 12);
  const auto aux = auxiliary(g.sys);
  CHECK_NOTHROW(aux.at("A11"));
  CHECK_NOTHROW(aux.at("E1"));
  CHECK_THROWS_AS(aux.at("nothing"), std::out_of_range);
  CHECK(aux.p1 >= 0);
}

TEST_CASE("three-equation kinds agree with the embedded full systems") {
  for (Kind k : {Kind::special01, Kind::special02, Kind::special03}) {
    CAPTURE(to_string(k));
    for (unsigned long long seed = 0; seed < 20; ++seed) {
      const auto g = generate(k, {}, seed);
      const auto e = embed_special(g.sys);
      CHECK(equation_count(e.kind) == 4);
      CHECK(check(e).consistent());
      const auto direct = solve_special(g.sys);
      const auto padded = solve(e);
      CHECK(direct.residuals.max_relative() <= 1e-8);
      CHECK(padded.residuals.max_relative() <= 1e-8);
      // The embedded solution restricted to the first four unknowns solves the original system.
      const std::vector<QuatMatrix> head(padded.X.begin(), padded.X.begin() + 4);
      CHECK(residual(g.sys, head).max_relative() <= 1e-8);
    }
  }
  CHECK_THROWS_AS(embed_special(generate(Kind::sys01, {}, 1).sys), ShapeError);
  CHECK_THROWS_AS(solve_special(generate(Kind::sys01, {}, 1).sys), ShapeError);
}

TEST_CASE("generator options") {
  GenOptions opt;
  opt.vary_dims = false;
  opt.rank_deficient = false;
  opt.max_dim = 2;
  const auto g = generate(Kind::sys04, opt, 1);
  for (const auto& s : g.sys.unknown_shapes()) CHECK(s == Shape{2, 2});
  CHECK(check(g.sys).consistent());
}
