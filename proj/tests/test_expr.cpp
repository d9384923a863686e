#include <doctest.h>

#include "lpa/expr.hpp"
#include "lpa/contraction.hpp"
#include "lpa/moves.hpp"
#include "lpa/sampling.hpp"

using namespace lpa;

TEST_CASE("expression parsing basics") {
  Ring Z = Ring::Z();
  GraphRef par = two_parallel_edges_graph();

  CHECK(parse_element(par, Z, "p(v)") == Element::vertex(par, Z, "v"));
  CHECK(parse_element(par, Z, "  p( v )  ") == Element::vertex(par, Z, "v"));
  CHECK(parse_element(par, Z, "0").is_zero());
  CHECK(parse_element(par, Z, "3 * p(v) - 3*p(v)").is_zero());

  Element se = Element::path(par, Z, Path::make(*par, {"e"}));
  CHECK(parse_element(par, Z, "s(e)") == se);
  CHECK(parse_element(par, Z, "(p(v)) * s(e)") == se);
  CHECK(parse_element(par, Z, "-1 * s(e) + 2 * s(e)") == se);

  // ghost atom and products
  Element x = parse_element(par, Z, "s(e)*sx(f)");
  REQUIRE(x.term_count() == 1);
  CHECK(x.terms().begin()->first.mu.edges == std::vector<std::string>{"e"});
  CHECK(x.terms().begin()->first.nu.edges == std::vector<std::string>{"f"});

  // the (L3) instance from the CLI examples
  CHECK(parse_element(par, Z, "p(v) - s(e)*sx(e) - s(f)*sx(f)").is_zero());

  GraphRef loop = single_loop_graph();
  Element aa = parse_element(loop, Z, "s(a.a)");
  REQUIRE(aa.term_count() == 1);
  CHECK(aa.terms().begin()->first.mu.edges ==
        std::vector<std::string>{"a", "a"});
}

TEST_CASE("expression parse errors cite a column") {
  Ring Z = Ring::Z();
  GraphRef par = two_parallel_edges_graph();
  CHECK_THROWS_AS(parse_element(par, Z, "p(zz)"), ParseError);
  CHECK_THROWS_AS(parse_element(par, Z, "s(e"), ParseError);
  CHECK_THROWS_AS(parse_element(par, Z, "s(e) +"), ParseError);
  CHECK_THROWS_AS(parse_element(par, Z, "5"), ParseError);  // no global unit
  CHECK_THROWS_AS(parse_element(par, Z, "q(v)"), ParseError);
  CHECK_THROWS_AS(parse_element(par, Z, "s(e.f)"), ParseError);  // not composable
  CHECK_THROWS_AS(parse_element(par, Z, "p(v) p(w)"), ParseError);
  try {
    parse_element(par, Z, "p(v) + q(w)");
    CHECK(false);
  } catch (const ParseError& e) {
    CHECK(e.column >= 8);
  }
}

TEST_CASE("dotted edge identifiers are segmented against the graph") {
  Ring Z = Ring::Z();
  // Contracted graphs carry edge ids like c_e2.w#e1; the path grammar must
  // recover them.
  Fixture fx = fixture(FixtureName::EX53, 3);
  ContractionResult res = contract(fx.E, fx.G0, Z);
  Element t = parse_element(res.G, Z, "s(c_e2.w#e1)");
  REQUIRE(t.term_count() == 1);
  CHECK(t.terms().begin()->first.mu.edges ==
        std::vector<std::string>{"c_e2.w#e1"});

  // A two-edge path of contracted edges, dot-joined.
  Fixture fx51 = fixture(FixtureName::EX51, 3);
  ContractionResult res51 = contract(fx51.E, fx51.G0, Z);
  Element t2 = parse_element(res51.G, Z, "s(c_y0.c_x1.a1)");
  REQUIRE(t2.term_count() == 1);
  CHECK(t2.terms().begin()->first.mu.edges ==
        (std::vector<std::string>{"c_y0", "c_x1.a1"}));
}

TEST_CASE("to_expr round trips on random elements") {
  for (Ring ring : {Ring::Z(), Ring::Zmod(4)}) {
    for (auto name : {FixtureName::EX51, FixtureName::EX52, FixtureName::EX53}) {
      Fixture fx = fixture(name, 3);
      Sampler sm(fx.E, ring, 53);
      for (int i = 0; i < 40; ++i) {
        Element x = sm.element(6, 4);
        CHECK(parse_element(fx.E, ring, to_expr(x)) == x);
      }
    }
  }
  // zero renders as "0" and parses back
  GraphRef loop = single_loop_graph();
  CHECK(to_expr(Element::zero(loop, Ring::Z())) == "0");
  CHECK(parse_element(loop, Ring::Z(), "0").is_zero());
}

TEST_CASE("negative leading coefficients render parseably") {
  Ring Z = Ring::Z();
  GraphRef loop = single_loop_graph();
  Element x = Element::vertex(loop, Z, "v").scaled(-1);
  std::string s = to_expr(x);
  CHECK(s == "-1 * p(v)");
  CHECK(parse_element(loop, Z, s) == x);
  Element y = Element::vertex(loop, Z, "v").scaled(-3) +
              Element::path(loop, Z, Path::make(*loop, {"a"})).scaled(2);
  CHECK(parse_element(loop, Z, to_expr(y)) == y);
}
