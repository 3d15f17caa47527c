#include "doctest.h"

#include "bl/parse.hpp"
#include "oracle.hpp"

using namespace bl;

TEST_CASE("parser accepts the grammar") {
  CHECK(parse_expr("T(2) ^ K(3)") == smash(telescope(2), morava_k(3)));
  CHECK(parse_expr("K(0) v K(1) ^ F(2)") ==
        wedge(morava_k(0), smash(morava_k(1), finite_type(2))));
  CHECK(parse_expr("(K(0) v K(1)) ^ F(2)") ==
        smash(wedge(morava_k(0), morava_k(1)), finite_type(2)));
  CHECK(parse_expr("0") == zero_expr());
  CHECK(parse_expr("S^I") == smash(sphere(), brown_comenetz()));
  CHECK(parse_expr("HFp v BP v Q") == wedge(wedge(hfp(), bp()), all_morava()));
  CHECK(parse_expr("  E( 4 )  ") == johnson_wilson(4));
  CHECK(parse_expr("K(0)vK(1)") == wedge(morava_k(0), morava_k(1)));
  // unicode aliases
  CHECK(parse_expr("T(2) ∧ K(3)") == smash(telescope(2), morava_k(3)));
  CHECK(parse_expr("K(0) ∨ K(1)") == wedge(morava_k(0), morava_k(1)));
}

TEST_CASE("parser reports positions and rejects overflow") {
  auto offset_of = [](const char* text) {
    try {
      parse_expr(text);
    } catch (const ParseError& e) {
      return e.offset();
    }
    return size_t(-1);
  };
  CHECK(offset_of("E(") == 2);
  CHECK(offset_of("K(1") == 3);
  CHECK(offset_of("v K(1)") == 0);
  CHECK(offset_of("K(1) K(2)") == 5);
  CHECK(offset_of("") == 0);
  CHECK(offset_of("K(99999)") == 2);
  CHECK_NOTHROW(parse_expr("K(65536)"));
  CHECK_THROWS_AS(parse_expr("K(65537)"), ParseError);
}

TEST_CASE("pretty-print round trip is stable") {
  oracle::ExprGen gen(2024);
  gen.allow_q = true;
  for (int it = 0; it < 10000; ++it) {
    ClassExpr e = gen.random_expr();
    ClassExpr first = parse_expr(e.to_string());
    ClassExpr second = parse_expr(first.to_string());
    CHECK(first == second);
  }
}
