#include <doctest.h>

#include <fstream>

#include "support.hpp"

using namespace qsyl;

namespace {

const std::filesystem::path fixtures = QSYL_FIXTURE_DIR;

std::filesystem::path scratch(const std::string& name) {
  auto p = std::filesystem::temp_directory_path() / ("qsyl_unit_" + name);
  std::filesystem::remove_all(p);
  std::filesystem::create_directories(p);
  return p;
}

}  // namespace

TEST_CASE("qmat parse and format") {
  const auto m = parse_qmat("# header comment\n2 2\n1 0 0 0  0 1 0 0\n\n0 0 1 0  0 0 0 -1.5\n");
  CHECK(m.shape() == Shape{2, 2});
  CHECK(m(1, 1) == Quaternion(0, 0, 0, -1.5));
  CHECK(format_qmat(QuatMatrix::identity(1)) == "1 1\n1 0 0 0\n");
  CHECK(parse_qmat("0 3\n").shape() == Shape{0, 3});
}

TEST_CASE("qmat writer and parser are inverse") {
  std::mt19937_64 rng(4);
  const auto a = test::random_real(3, 5, rng);
  CHECK(parse_qmat(format_qmat(a)) == a);
  const auto b = test::random_int(2, 2, rng);
  CHECK(parse_qmat(format_qmat(b)) == b);
  const auto dir = scratch("qmat");
  save_qmat(dir / "a.qmat", a);
  CHECK(load_qmat(dir / "a.qmat") == a);
}

TEST_CASE("qmat parse errors carry a position") {
  try {
    parse_qmat("2 2\n1 0 0 0  0 1 0 0\n1 0 0\n");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 3);
    CHECK(e.column() > 0);
  }
  CHECK_THROWS_AS(parse_qmat("2 x\n"), ParseError);
  CHECK_THROWS_AS(parse_qmat("1 1\n1 2 3 4 5\n"), ParseError);
  CHECK_THROWS_AS(parse_qmat("-1 1\n"), ParseError);
  CHECK_THROWS_AS(load_qmat("/nonexistent/file.qmat"), std::runtime_error);
}

TEST_CASE("qsys round trip") {
  for (Kind k : all_kinds) {
    const auto g = generate(k, {}, 31);
    auto f = SystemFile::from_system(g.sys, g.planted);
    f.comments.push_back("# generated");
    f.ranks = {1, 2, 3};
    f.fixes.push_back({"C1", 0, 0, Quaternion(1, 2, 3, 4)});
    const auto text = format_qsys(f);
    const auto back = parse_qsys(text);
    CHECK(format_qsys(back) == text);
    CHECK(back.kind == k);
    CHECK(back.blocks == f.blocks);
    CHECK(back.ranks == f.ranks);
    REQUIRE(back.fixes.size() == 1);
    CHECK(back.fixes[0].row == 0);
    CHECK(back.system().C == g.sys.C);
    REQUIRE(back.solution().has_value());
    CHECK(*back.solution() == g.planted);
  }
}

TEST_CASE("qsys fixes are applied on request") {
  SystemFile f = SystemFile::from_system(CoupledSystem::zeros(Kind::special02, std::vector<Shape>(4, Shape{2, 2})));
  f.fixes.push_back({"C2", 1, 0, Quaternion(0, 0, 7, 0)});
  const auto c = f.corrected();
  CHECK(c.fixes.empty());
  CHECK(c.blocks.at("C2")(1, 0) == Quaternion(0, 0, 7, 0));
  CHECK(f.blocks.at("C2")(1, 0) == Quaternion());
}

TEST_CASE("qsys parse errors") {
  CHECK_THROWS_AS(parse_qsys("sys09\n"), ParseError);
  CHECK_THROWS_AS(parse_qsys("sys01\nQ1:\n1 1\n0 0 0 0\n"), ParseError);
  CHECK_THROWS_AS(parse_qsys("special01\nA1:\n1 1\n0 0 0\n"), ParseError);
  // Missing blocks surface when the system is assembled.
  CHECK_THROWS(parse_qsys("special01\nA1:\n1 1\n0 0 0 0\n").system());
}

TEST_CASE("checksum hashes the printed blocks") {
  CHECK(fnv1a64("") == 0xcbf29ce484222325ULL);
  CHECK(fnv1a64("a") == 0xaf63dc4c8601ec8cULL);
  auto f = load_qsys(fixtures / "ex51.qsys");
  const auto base = checksum(f);
  f.fixes.push_back({"C1", 0, 0, Quaternion(9)});
  CHECK(checksum(f) == base);
  f.blocks["C1"].set(0, 0, Quaternion(9));
  CHECK(checksum(f) != base);
}

TEST_CASE("reference fixtures match their frozen checksums") {
  const std::map<std::string, std::string> frozen{{"ex31", "1295f2117905ffcc"},
                                                  {"ex41", "8a7a68fc321da260"},
                                                  {"ex51", "b1bff8fd01c26bc1"},
                                                  {"ex61", "fd2113443a0b99b2"},
                                                  {"ex71", "e06850703cc23a2d"}};
  for (const auto& id : reference_ids()) {
    CAPTURE(id);
    const auto f = reference_fixture(id, fixtures);
    CHECK(f.checksum == frozen.at(id));
    CHECK_FALSE(f.reference_ranks.empty());
    CHECK(f.recorded_solution.size() == 5);
  }
}

TEST_CASE("saved system files reload") {
  const auto dir = scratch("qsys");
  const auto g = generate(Kind::sys02, {}, 8);
  save_qsys(dir / "s.qsys", SystemFile::from_system(g.sys));
  CHECK(load_qsys(dir / "s.qsys").system().A == g.sys.A);
}
