#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "practium/errors.hpp"
#include "practium/expr.hpp"

using namespace practium;

TEST_CASE("products of decimals and powers") {
  CHECK(parse_product("42") == 42);
  CHECK(parse_product("2^10") == 1024);
  CHECK(parse_product("3^35 * 2") == pow_nat(3, 35) * 2);
  CHECK(parse_product("2 * 3 * 11") == 66);
  CHECK(parse_product("  2^316 ") == pow2(316));
}

TEST_CASE("sums only exist in the extended grammar") {
  CHECK_THROWS_AS(parse_product("2^316+2"), ParseError);
  CHECK(parse_sum("2^316+2") == pow2(316) + 2);
  CHECK(parse_sum("3^71-3") == pow_nat(3, 71) - 3);
  CHECK(parse_sum("2^36 + 2") == pow2(36) + 2);
  CHECK(parse_sum("10") == 10);
  CHECK(parse_sum("2-5") == -3);
  CHECK(parse_sum("2^5*3 - 1") == 95);
}

TEST_CASE("malformed expressions") {
  CHECK_THROWS_AS(parse_sum(""), ParseError);
  CHECK_THROWS_AS(parse_sum("x"), ParseError);
  CHECK_THROWS_AS(parse_sum("2^"), ParseError);
  CHECK_THROWS_AS(parse_sum("2**3"), ParseError);
  CHECK_THROWS_AS(parse_sum("(2+3)"), ParseError);
  CHECK_THROWS_AS(parse_product("2 2"), ParseError);
}
