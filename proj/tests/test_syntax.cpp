#include "oag/syntax.hpp"
#include "oracles.hpp"

#include <gtest/gtest.h>

using namespace oag;

TEST(ParseSpec, Examples) {
  GroupSpec g = parse_spec("lex(Q, Gp(2)^2)");
  ASSERT_EQ(g.size(), 3u);
  EXPECT_EQ(g[0], Block::rationals());
  EXPECT_EQ(g[1], Block::pspan(2));
  EXPECT_EQ(g[2], Block::pspan(2));
  GroupSpec z = parse_spec("lex(Z)");
  ASSERT_EQ(z.size(), 1u);
  EXPECT_EQ(z[0], Block::integers());
  EXPECT_EQ(parse_spec("  lex ( Zloc(3) ,Z^3 )").size(), 4u);
}

TEST(ParseSpec, Errors) {
  try {
    parse_spec("lex(Gp(4))");
    FAIL() << "accepted a non-prime";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.position(), 4u);
    EXPECT_NE(std::string(e.what()).find("not prime"), std::string::npos);
  }
  for (const char* bad : {"", "lex()", "lex(Q", "lex(R)", "lex(Q,)", "lex(Q)x", "lex(Q^0)", "(Q)"})
    EXPECT_THROW(parse_spec(bad), ParseError) << bad;
}

TEST(PrintSpec, CompressesRuns) {
  EXPECT_EQ(to_string(parse_spec("lex(Q,Gp(2),Gp(2),Zloc(3),Gp(2))")), "lex(Q, Gp(2)^2, Zloc(3), Gp(2))");
  EXPECT_EQ(to_string(parse_spec("lex(Z)")), "lex(Z)");
}

TEST(ParseElement, Examples) {
  GroupSpec g = parse_spec("lex(Q, Gp(2), Gp(3))");
  Element e = parse_element("( 1/2 | b0 + 2*b1 | 0 )", g);
  EXPECT_EQ(e[0], BlockElement(mpq_class(1, 2)));
  EXPECT_EQ(e[1], BlockElement::basis(0) + BlockElement::basis(1, 2));
  EXPECT_TRUE(e[2].is_zero());
  Element f = parse_element("(0 | -b1 - 2*b1 | 3/2*b0 + -1*b2)", g);
  EXPECT_EQ(f[1], BlockElement::basis(1, -3));
  EXPECT_EQ(f[2], BlockElement::basis(0, mpq_class(3, 2)) + BlockElement::basis(2, -1));
  EXPECT_THROW(parse_element("(0 | 3/2*b0 | 0)", g), ParseError);
  EXPECT_EQ(to_string(e), "(1/2 | b0 + 2*b1 | 0)");
}

TEST(ParseElement, Errors) {
  GroupSpec g = parse_spec("lex(Z, Gp(2))");
  EXPECT_THROW(parse_element("(1)", g), ParseError);
  EXPECT_THROW(parse_element("(1/2 | 0)", g), ParseError);
  EXPECT_THROW(parse_element("(1 | 1/2*b1)", g), ParseError);
  EXPECT_THROW(parse_element("(b1 | 0)", g), ParseError);
  EXPECT_THROW(parse_element("(1 | 1/0)", g), ParseError);
  EXPECT_THROW(parse_element("1 | 0", g), ParseError);
}

TEST(ParseParams, Separators) {
  GroupSpec g = parse_spec("lex(Q)");
  EXPECT_EQ(parse_params("(1), (2); (3) (4)", g).size(), 4u);
  EXPECT_TRUE(parse_params("  ", g).empty());
}

TEST(ParseFormula, Example) {
  auto lits = parse_formula("cong[4, cut2](3x, 1*a0 + -2*a1) & 1x < 1*a2");
  ASSERT_EQ(lits.size(), 2u);
  EXPECT_EQ(lits[0], Literal::cong(3, 4, {2}, Term{{{0, 1}, {1, -2}}}));
  EXPECT_EQ(lits[1], Literal::ord(1, Cmp::Lt, Term::param(2)));
}

TEST(ParseFormula, Variants) {
  EXPECT_EQ(parse_formula("1*a0 < 2x")[0], Literal::ord(2, Cmp::Gt, Term::param(0)));
  EXPECT_EQ(parse_formula("!x < 1*a0")[0], Literal::ord(1, Cmp::Ge, Term::param(0)));
  EXPECT_EQ(parse_formula("!x = 1*a0")[0], Literal::neq(1, Term::param(0)));
  EXPECT_EQ(parse_formula("!cong[2, cut1](x, a0)")[0], Literal::ncong(1, 2, {1}, Term::param(0)));
  EXPECT_EQ(parse_formula("ing[cut1](-2x, 0)")[0], Literal::in_coset(-2, {1}, Term{}));
  EXPECT_EQ(parse_formula("!ing[cut0](x, 3*a1 - 1*a0)")[0],
            Literal::not_in_coset(1, {0}, Term{{{0, -1}, {1, 3}}}));
  EXPECT_EQ(parse_formula("x >= 0")[0], Literal::ord(1, Cmp::Ge, Term{}));
}

TEST(ParseFormula, Errors) {
  for (const char* bad : {"", "x", "cong[0, cut1](x, a0)", "cong[2, cut1](0x, a0)", "1*a0 < 1*a1",
                          "x < a0 &", "ing[1](x, a0)", "cong[2 cut1](x, a0)"})
    EXPECT_THROW(parse_formula(bad), ParseError) << bad;
}

TEST(RoundTrip, RandomSpecsElementsFormulas) {
  fixtures::Gen gen(99);
  for (int n = 0; n < 500; ++n) {
    GroupSpec g = gen.spec(6);
    EXPECT_EQ(parse_spec(to_string(g)), g);
    Element e = gen.element(g);
    EXPECT_EQ(parse_element(to_string(e), g), e);
    std::vector<Literal> lits;
    for (auto k = gen.uniform(1, 4); k > 0; --k) {
      Term t = fixtures::random_term(gen, 3);
      std::int64_t c = gen.pick(std::vector<std::int64_t>{1, -1, 2, -3, 12});
      ConvexCut cut{static_cast<std::size_t>(gen.uniform(0, 5))};
      switch (gen.uniform(0, 5)) {
        case 0: lits.push_back(Literal::cong(c, gen.uniform(1, 30), cut, t)); break;
        case 1: lits.push_back(Literal::ncong(c, gen.uniform(1, 30), cut, t)); break;
        case 2: lits.push_back(Literal::ord(c, gen.pick(std::vector<Cmp>{Cmp::Lt, Cmp::Le, Cmp::Eq, Cmp::Ge, Cmp::Gt}), t)); break;
        case 3: lits.push_back(Literal::in_coset(c, cut, t)); break;
        case 4: lits.push_back(Literal::neq(c, t)); break;
        default: lits.push_back(Literal::not_in_coset(c, cut, t)); break;
      }
    }
    EXPECT_EQ(parse_formula(to_string(lits)), lits) << to_string(lits);
  }
}
