#include <doctest.h>

#include <filesystem>

#include "support/generators.hpp"
#include "support/oracles.hpp"
#include "tetra/errors.hpp"
#include "tetra/triangle.hpp"

using namespace tetra;

namespace {

std::vector<std::vector<BigInt>> rows(std::initializer_list<std::initializer_list<int>> data) {
  std::vector<std::vector<BigInt>> out;
  for (const auto& r : data) out.emplace_back(r.begin(), r.end());
  return out;
}

}  // namespace

TEST_CASE("pascal_triangle") {
  CHECK(pascal_triangle(0).to_rows() == rows({{1}}));
  CHECK(pascal_triangle(2).to_rows() == rows({{1}, {1, 1}, {1, 2, 1}}));
  CHECK(pascal_triangle(4).at(4, 2) == 6);
  const auto oracle_rows = oracle::pascal_rows(40);
  CHECK(pascal_triangle(40).to_rows() == oracle_rows);
  CHECK_THROWS_AS(pascal_triangle(-1), DomainError);
}

TEST_CASE("gat_triangle follows the constant-left-diagonal pattern") {
  // Symbolic check with c, a1, a2, a3 chosen as distinct powers of 1000 so
  // each coefficient can be read off.
  const BigInt c = 1, a1 = 1000, a2 = 1000000, a3 = 1000000000;
  const GatSpec spec{c, {a1, a2, a3}};
  const Triangle t = gat_triangle(spec, 3);
  CHECK(t.to_rows()[2] == std::vector<BigInt>{c, c + a1, a2});
  CHECK(t.to_rows()[3] == std::vector<BigInt>{c, 2 * c + a1, c + a1 + a2, a3});

  CHECK(gat_triangle({1, {1, 1, 1, 1}}, 4) == pascal_triangle(4));
  CHECK_THROWS_AS(gat_triangle({1, {1, 1}}, 3), DomainError);
}

TEST_CASE("gat_entry_closed: tabulated entries") {
  const BigInt c = 7, a1 = 1000, a2 = 1000000;
  const GatSpec spec{c, {a1, a2, 5, 9}};
  CHECK(gat_entry_closed(spec, 3, 2) == c + a1 + a2);
  CHECK(gat_entry_closed(spec, 2, 1) == c + a1);
  CHECK(gat_entry_closed(spec, 3, 0) == c);
  CHECK(gat_entry_closed(spec, 4, 4) == 9);
  CHECK(gat_entry_closed({1, std::vector<BigInt>(4, 1)}, 4, 2) == 6);
  CHECK_THROWS_AS(gat_entry_closed(spec, 3, 4), DomainError);
  CHECK_THROWS_AS(gat_entry_closed(spec, 3, -1), DomainError);
}

TEST_CASE("property: gat_entry_closed agrees with gat_triangle, i <= 30") {
  gen::Source src(0x6a7);
  for (int trial = 0; trial < 25; ++trial) {
    const GatSpec spec = src.gat(30, 1000000);
    const Triangle t = gat_triangle(spec, 30);
    CHECK(satisfies_pascal_rule(t));
    CHECK(has_constant_left_diagonal(t));
    for (index_t i = 0; i <= 30; ++i) {
      CHECK(t.at(i, 0) == spec.c);
      for (index_t j = 0; j <= i; ++j) {
        REQUIRE_MESSAGE(gat_entry_closed(spec, i, j) == t.at(i, j), "i=" << i << " j=" << j);
      }
    }
  }
}

TEST_CASE("from_rows validates shape") {
  CHECK(Triangle::from_rows(rows({{5}})).row_count() == 1);
  CHECK(Triangle::from_rows(rows({{1}, {2, 3}})).max_row() == 1);
  try {
    Triangle::from_rows(rows({{1}, {2}}));
    FAIL("expected ShapeError");
  } catch (const ShapeError& e) {
    CHECK(e.row() == 1);
  }
  CHECK_THROWS_AS(Triangle::from_rows({}), ShapeError);
}

TEST_CASE("structural predicates") {
  CHECK(is_vertically_symmetric(pascal_triangle(6)));
  CHECK_FALSE(is_vertically_symmetric(Triangle::from_rows(rows({{1}, {1, 2}}))));
  CHECK(is_vertically_symmetric(gat_triangle({2, std::vector<BigInt>(12, 2)}, 12)));

  CHECK(satisfies_pascal_rule(pascal_triangle(5)));
  CHECK_FALSE(satisfies_pascal_rule(Triangle::from_rows(rows({{1}, {1, 1}, {1, 5, 1}}))));

  gen::Source src(11);
  for (int trial = 0; trial < 10; ++trial) {
    CHECK(satisfies_pascal_rule(gat_triangle(src.gat(15, 1000), 15)));
    CHECK(is_vertically_symmetric(src.symmetric_triangle(12, 1000)));
  }
  for (index_t n = 0; n <= 40; ++n) CHECK(is_vertically_symmetric(pascal_triangle(n)));
}

TEST_CASE("zero-extended lookup") {
  const Triangle t = pascal_triangle(3);
  CHECK(t.at_or_zero(3, -1) == 0);
  CHECK(t.at_or_zero(3, 4) == 0);
  CHECK(t.at_or_zero(3, 1) == 3);
  CHECK_THROWS_AS(t.at_or_zero(4, 0), DomainError);
  CHECK_THROWS_AS(t.at(3, 4), DomainError);
}

TEST_CASE("JSON and CSV interchange") {
  const Triangle t = Triangle::from_rows(
      {{BigInt("-123456789012345678901234567890")}, {BigInt(0), BigInt(7)}});
  CHECK(triangle_to_json(t) == R"([["-123456789012345678901234567890"],["0","7"]])");
  CHECK(triangle_from_json(triangle_to_json(t)) == t);
  CHECK(triangle_to_csv(t) == "-123456789012345678901234567890\n0,7\n");
  CHECK(triangle_from_csv(triangle_to_csv(t)) == t);

  CHECK(triangle_from_json("[[1],[2,3]]") == Triangle::from_rows(rows({{1}, {2, 3}})));
  CHECK(triangle_from_csv("1\r\n 2 , 3 \n\n") == Triangle::from_rows(rows({{1}, {2, 3}})));

  CHECK_THROWS_AS(triangle_from_json("[[1],[2]]"), ShapeError);
  CHECK_THROWS_AS(triangle_from_json("[[1],[\"x\",2]]"), ParseError);
  CHECK_THROWS_AS(triangle_from_json("{"), ParseError);
  CHECK_THROWS_AS(triangle_from_json("{\"a\":1}"), ParseError);
  try {
    triangle_from_csv("1\n2,zz\n");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.line() == 2);
  }
}

TEST_CASE("file round trip") {
  const auto dir = std::filesystem::temp_directory_path() / "tetra_triangle_io";
  std::filesystem::create_directories(dir);
  const Triangle t = gat_triangle({3, {1, 4, 1, 5}}, 4);
  save_triangle(t, dir / "t.json");
  save_triangle(t, dir / "t.csv");
  CHECK(load_triangle(dir / "t.json") == t);
  CHECK(load_triangle(dir / "t.csv") == t);
  std::filesystem::remove_all(dir);
}
