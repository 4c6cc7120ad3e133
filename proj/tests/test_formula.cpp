#include "oag/formula.hpp"
#include "oracles.hpp"

#include <gtest/gtest.h>

using namespace oag;

namespace {

GroupSpec q_g2() { return GroupSpec({Block::rationals(), Block::pspan(2)}); }

Element pspan_el(const GroupSpec& g, BlockElement v) {
  return Element(g, {BlockElement(), std::move(v)});
}

BlockElement b(std::uint32_t i, const mpq_class& c = 1) { return BlockElement::basis(i, c); }

const Term a0 = Term::param(0);

}  // namespace

TEST(Evaluate, Examples) {
  auto g = q_g2();
  std::vector<Element> params{pspan_el(g, b(0))};
  Literal lit = Literal::cong(1, 2, {2}, a0);
  EXPECT_TRUE(evaluate(lit, params[0], params));
  EXPECT_TRUE(evaluate(lit, pspan_el(g, b(0) + b(1, 2)), params));
  EXPECT_FALSE(evaluate(lit, pspan_el(g, b(1)), params));
  EXPECT_THROW(evaluate(Literal::cong(1, 2, {2}, Term::param(3)), params[0], params),
               UnresolvedParameter);
  EXPECT_THROW(evaluate(Literal::cong(1, 2, {5}, a0), params[0], params), PreconditionError);
}

TEST(Evaluate, OrderAndCosetLiterals) {
  auto g = q_g2();
  std::vector<Element> params{pspan_el(g, b(1))};
  Element two = pspan_el(g, b(0, 2));
  EXPECT_TRUE(evaluate(Literal::ord(1, Cmp::Gt, a0), two, params));
  EXPECT_FALSE(evaluate(Literal::ord(1, Cmp::Le, a0), two, params));
  EXPECT_TRUE(evaluate(Literal::ord(-1, Cmp::Lt, a0), two, params));
  EXPECT_TRUE(evaluate(Literal::neq(1, a0), two, params));
  EXPECT_TRUE(evaluate(Literal::in_coset(1, {1}, a0), two, params));
  EXPECT_FALSE(evaluate(Literal::in_coset(1, {2}, a0), two, params));
  EXPECT_TRUE(evaluate(Literal::not_in_coset(1, {2}, a0), two, params));
  EXPECT_FALSE(evaluate(Literal::in_coset(1, {1}, a0), Element::unit(g, 0), params));
}

TEST(Evaluate, PointwiseProperties) {
  fixtures::Gen gen(41);
  for (int n = 0; n < 1000; ++n) {
    GroupSpec g = gen.spec();
    std::vector<Element> params{gen.element(g), gen.element(g)};
    Term t = fixtures::random_term(gen, 2);
    ConvexCut alpha{static_cast<std::size_t>(gen.uniform(0, static_cast<std::int64_t>(g.size())))};
    std::int64_t k = gen.uniform(1, 9), m = gen.uniform(1, 30);
    Element x = gen.element(g);
    EXPECT_TRUE(evaluate(Literal::cong(k, m, {0}, t), x, params));
    EXPECT_NE(evaluate(Literal::cong(k, m, alpha, t), x, params),
              evaluate(Literal::ncong(k, m, alpha, t), x, params));
    EXPECT_NE(evaluate(Literal::in_coset(k, alpha, t), x, params),
              evaluate(Literal::not_in_coset(k, alpha, t), x, params));
    EXPECT_NE(evaluate(Literal::ord(k, Cmp::Eq, t), x, params),
              evaluate(Literal::neq(k, t), x, params));
    EXPECT_NE(evaluate(Literal::ord(k, Cmp::Lt, t), x, params),
              evaluate(Literal::ord(k, Cmp::Ge, t), x, params));
  }
}

TEST(Classify, Types) {
  EXPECT_EQ(classify(Literal::cong(3, 4, {1}, Term{{{0, 1}, {1, -2}}})), LiteralType::I);
  EXPECT_EQ(classify(Literal::ncong(3, 4, {1}, a0)), LiteralType::II);
  EXPECT_EQ(classify(Literal::ord(2, Cmp::Lt, a0)), LiteralType::III);
  EXPECT_EQ(classify(Literal::ord(2, Cmp::Eq, a0)), LiteralType::III);
  EXPECT_EQ(classify(Literal::in_coset(2, {1}, a0)), LiteralType::III);
  EXPECT_EQ(classify(Literal::not_in_coset(1, {1}, a0)), LiteralType::IV);
  EXPECT_EQ(classify(Literal::neq(1, a0)), LiteralType::IV);
}

TEST(PrimePower, Detection) {
  EXPECT_EQ(prime_power(8), (std::pair<std::uint64_t, unsigned>{2, 3}));
  EXPECT_EQ(prime_power(7), (std::pair<std::uint64_t, unsigned>{7, 1}));
  EXPECT_FALSE(prime_power(12));
  EXPECT_FALSE(prime_power(1));
}

TEST(CrtSplit, Examples) {
  Literal lit = Literal::cong(5, 12, {1}, a0);
  auto parts = crt_split(lit);
  ASSERT_EQ(parts.size(), 2u);
  EXPECT_EQ(parts[0], Literal::cong(5, 4, {1}, a0));
  EXPECT_EQ(parts[1], Literal::cong(5, 3, {1}, a0));
  EXPECT_EQ(crt_split(Literal::cong(1, 8, {1}, a0)), std::vector<Literal>{Literal::cong(1, 8, {1}, a0)});
  EXPECT_TRUE(crt_split(Literal::cong(1, 1, {1}, a0)).empty());
  EXPECT_THROW(crt_split(Literal::ord(1, Cmp::Lt, a0)), PreconditionError);
}

TEST(ReduceKPrime, Examples) {
  GroupSpec g({Block::pspan(2)});
  Element a_prime = Element::unit(g, 0, 1);
  std::vector<Element> params{2 * a_prime, a_prime};
  Literal out = reduce_k_prime(Literal::cong(2, 4, {1}, a0), params, Term::param(1));
  EXPECT_EQ(out, Literal::cong(1, 2, {1}, Term::param(1)));
  Literal vacuous = reduce_k_prime(Literal::cong(2, 2, {0}, a0), params, Term::param(1));
  EXPECT_EQ(vacuous.m, 1);
  EXPECT_TRUE(evaluate(vacuous, Element::unit(g, 0, 3), params));
  EXPECT_THROW(reduce_k_prime(Literal::cong(2, 4, {1}, a0), params, Term::param(0)),
               PreconditionError);
  EXPECT_THROW(reduce_k_prime(Literal::cong(3, 4, {1}, a0), params, Term::param(1)),
               PreconditionError);
  auto appended = reduce_k_prime(Literal::cong(2, 4, {1}, a0), {params[0]}, a_prime);
  EXPECT_EQ(appended.params.size(), 2u);
  EXPECT_EQ(appended.literal, out);
}

TEST(UnitNormalize, Examples) {
  EXPECT_EQ(unit_normalize(Literal::cong(3, 2, {1}, a0)), Literal::cong(1, 2, {1}, a0));
  EXPECT_EQ(unit_normalize(Literal::cong(3, 4, {1}, a0)), Literal::cong(1, 4, {1}, Term::param(0, 3)));
  EXPECT_EQ(unit_normalize(Literal::cong(1, 4, {1}, a0)), Literal::cong(1, 4, {1}, a0));
  EXPECT_EQ(unit_normalize(Literal::cong(5, 8, {1}, a0)), Literal::cong(1, 8, {1}, Term::param(0, 5)));
  EXPECT_EQ(unit_normalize(Literal::cong(4, 1, {1}, a0)), Literal::cong(1, 1, {1}, a0));
  EXPECT_THROW(unit_normalize(Literal::cong(2, 4, {1}, a0)), PreconditionError);
}

TEST(NormalizeTypeI, Examples) {
  GroupSpec g({Block::rationals(), Block::pspan(2), Block::pspan(3)});
  ConvexCut alpha{2};
  // t = 2a' + h with h in G_alpha.
  Element a_prime = Element::unit(g, 1, 1) + Element::unit(g, 0);
  Element h = Element::unit(g, 2, 2);
  std::vector<Element> params{2 * a_prime + h};
  Literal lit = Literal::cong(6, 12, alpha, a0);
  NormalizeResult r = normalize_type_I(lit, params);
  ASSERT_EQ(r.literals.size(), 2u);
  EXPECT_EQ(r.literals[0].m, 2);
  // 3 | 6, so the mod-3 piece reduces to a vacuous modulus-1 literal.
  EXPECT_EQ(r.literals[1].m, 1);
  for (const Literal& out : r.literals) EXPECT_EQ(out.k, 1);
  EXPECT_EQ(r.steps.front().op, "crt_split");

  fixtures::Gen gen(3);
  for (int n = 0; n < 300; ++n) {
    Element x = gen.element(g);
    if (n % 3 == 0) x = a_prime + 2 * gen.element(g) + Element::unit(g, 2, 0, gen.uniform(0, 5));
    bool all = true;
    for (const Literal& out : r.literals) all = all && evaluate(out, x, r.params);
    EXPECT_EQ(evaluate(lit, x, params), all);
  }

  EXPECT_TRUE(normalize_type_I(Literal::cong(1, 8, alpha, a0), params).steps.empty());
  NormalizeResult five = normalize_type_I(Literal::cong(5, 8, alpha, a0), params);
  EXPECT_EQ(five.literals, std::vector<Literal>{Literal::cong(1, 8, alpha, Term::param(0, 5))});
}

TEST(NormalizeTypeI, UnsatisfiableWithoutDecomposition) {
  GroupSpec g({Block::pspan(2)});
  std::vector<Element> params{Element::unit(g, 0)};
  EXPECT_THROW(normalize_type_I(Literal::cong(2, 4, {1}, a0), params), PreconditionError);
  // No x has 2x == b0 mod 4G.
  fixtures::Gen gen(1);
  for (int n = 0; n < 200; ++n)
    EXPECT_FALSE(evaluate(Literal::cong(2, 4, {1}, a0), gen.element(g), params));
}

TEST(NormalizeTypeI, UsesHints) {
  GroupSpec g({Block::pspan(2), Block::pspan(2)});
  Element hint = Element::unit(g, 0, 2);
  std::vector<Element> params{2 * hint + Element::unit(g, 1, 0)};
  std::vector<Element> hints{hint};
  NormalizeResult r = normalize_type_I(Literal::cong(2, 8, {1}, a0), params, hints);
  ASSERT_EQ(r.params.size(), 2u);
  EXPECT_EQ(r.params[1], hint);
  EXPECT_EQ(r.literals, std::vector<Literal>{Literal::cong(1, 4, {1}, Term::param(1))});
}

TEST(Rewrites, SoundOnRandomCases) {
  fixtures::Gen gen(2024);
  std::size_t satisfied = 0;
  for (int n = 0; n < 2000; ++n) {
    fixtures::RewriteCase c = fixtures::rewrite_case(gen);
    for (const Element& x : c.probes) {
      bool lhs = evaluate(c.original, x, c.params);
      bool rhs = true;
      for (const Literal& lit : c.rewritten) rhs = rhs && evaluate(lit, x, c.params);
      ASSERT_EQ(lhs, rhs) << c.op;
      satisfied += lhs;
    }
  }
  EXPECT_GT(satisfied, 2000u);
}
