#include "oag/convex.hpp"
#include "oracles.hpp"

#include <gtest/gtest.h>

#include <set>

using namespace oag;

namespace {

GroupSpec q_g2_g2() { return GroupSpec({Block::rationals(), Block::pspan(2), Block::pspan(2)}); }
GroupSpec q_g2_g3() { return GroupSpec({Block::rationals(), Block::pspan(2), Block::pspan(3)}); }

std::vector<std::size_t> cuts(const std::vector<ConvexCut>& v) {
  std::vector<std::size_t> out;
  for (ConvexCut c : v) out.push_back(c.s);
  return out;
}

}  // namespace

TEST(InCoset, Examples) {
  auto g = q_g2_g2();
  Element x = Element::unit(g, 1);
  EXPECT_TRUE(in_coset(x, {0}, 2));
  EXPECT_FALSE(in_coset(x, {2}, 2));
  EXPECT_EQ(in_coset(x, {3}, 2), is_divisible(x, 2));
  EXPECT_TRUE(in_coset(x, {3}, 3));
  EXPECT_TRUE(in_subgroup(Element::unit(g, 2), {2}));
  EXPECT_FALSE(in_subgroup(Element::unit(g, 1), {2}));
}

TEST(Hsub, Examples) {
  auto g = q_g2_g2();
  EXPECT_EQ(hsub(Element::unit(g, 1), 2).s, 2u);
  EXPECT_EQ(hsub(Element::unit(g, 2), 2).s, 3u);
  EXPECT_EQ(hsub(2 * Element::unit(g, 1), 2).s, 3u);
  EXPECT_EQ(hsub(Element::unit(g, 0), 2).s, 3u);
}

TEST(Hsub, MatchesDefinitionScan) {
  fixtures::Gen gen(101);
  for (int n = 0; n < 3000; ++n) {
    GroupSpec g = gen.spec(6);
    Element a = gen.element(g);
    std::int64_t m = gen.pick(std::vector<std::int64_t>{1, 2, 3, 4, 5, 6, 8, 9, 12, 25});
    ASSERT_EQ(hsub(a, m), fixtures::hsub_by_scan(a, m));
    for (std::size_t s = 0; s <= g.size(); ++s)
      ASSERT_EQ(in_coset(a, {s}, m), fixtures::in_coset_by_definition(a, s, m));
  }
}

TEST(ProjectInto, Example) {
  auto g = q_g2_g2();
  Element a(g, {BlockElement(mpq_class(1, 2)), BlockElement::basis(0, 2), BlockElement::basis(1)});
  Element pa = project_into(a, {1}, 2);
  EXPECT_EQ(pa, Element(g, {BlockElement(), BlockElement::basis(0, 2), BlockElement::basis(1)}));
  EXPECT_EQ(hsub(pa, 2), hsub(a, 2));
  EXPECT_EQ(project_into(pa, {1}, 2), pa);
  EXPECT_THROW(project_into(Element::unit(g, 1), {2}, 2), PreconditionError);
}

TEST(ProjectInto, PreservesClassModP) {
  fixtures::Gen gen(5);
  for (int n = 0; n < 1000; ++n) {
    GroupSpec g = gen.spec(5);
    Element a = gen.element(g);
    std::uint64_t p = gen.prime();
    ConvexCut h = hsub(a, static_cast<std::int64_t>(p));
    for (std::size_t s = 0; s <= h.s && s <= g.size(); ++s) {
      if (!in_coset(a, {s}, static_cast<std::int64_t>(p))) continue;
      Element pa = project_into(a, {s}, p);
      EXPECT_TRUE(in_subgroup(pa, {s}));
      EXPECT_TRUE(is_divisible(a - pa, static_cast<std::int64_t>(p)));
      EXPECT_EQ(hsub(pa, static_cast<std::int64_t>(p)), h);
    }
  }
}

TEST(Sorts, Examples) {
  EXPECT_EQ(cuts(sorts(GroupSpec({Block::rationals()}), 2)), (std::vector<std::size_t>{1}));
  EXPECT_EQ(cuts(sorts(q_g2_g2(), 2)), (std::vector<std::size_t>{3, 2}));
  GroupSpec zz({Block::integers(), Block::integers()});
  EXPECT_EQ(cuts(sorts(zz, 2)), (std::vector<std::size_t>{2, 1}));
}

TEST(Sorts, EqualsHsubImageOverSamples) {
  fixtures::Gen gen(17);
  for (int round = 0; round < 200; ++round) {
    GroupSpec g = gen.spec(5);
    std::int64_t n = gen.pick(std::vector<std::int64_t>{2, 3, 4, 6});
    // Unit vectors, their multiples and random elements reach every cut.
    std::set<std::size_t> seen{g.size()};
    for (std::size_t i = 0; i < g.size(); ++i)
      for (std::int64_t k : {std::int64_t{1}, n})
        seen.insert(fixtures::hsub_by_scan(k * Element::unit(g, i), n).s);
    for (int j = 0; j < 20; ++j) seen.insert(fixtures::hsub_by_scan(gen.element(g), n).s);
    auto got = cuts(sorts(g, n));
    EXPECT_EQ(std::set<std::size_t>(got.begin(), got.end()), seen);
    EXPECT_TRUE(std::is_sorted(got.rbegin(), got.rend()));
  }
}

TEST(CollapseSorts, Examples) {
  auto mixed = collapse_sorts(q_g2_g3(), 2);
  ASSERT_EQ(mixed.size(), 1u);
  EXPECT_EQ(cuts(mixed[0]), (std::vector<std::size_t>{3, 2}));
  auto single = collapse_sorts(q_g2_g2(), 2);
  ASSERT_EQ(single.size(), 2u);
  EXPECT_EQ(cuts(single[0]), (std::vector<std::size_t>{3}));
}

// Cuts in one class give the same G_s + p^l G for l <= 3.
TEST(CollapseSorts, ClassesAgreeOnCosets) {
  fixtures::Gen gen(23);
  for (int round = 0; round < 100; ++round) {
    GroupSpec g = gen.spec(5);
    std::uint64_t p = gen.prime();
    auto classes = collapse_sorts(g, p);
    EXPECT_EQ(classes.front().front().s, g.size());
    std::size_t total = 0;
    for (const auto& cls : classes) total += cls.size();
    EXPECT_EQ(total, sorts(g, static_cast<std::int64_t>(p)).size());
    for (int j = 0; j < 20; ++j) {
      Element x = gen.element(g);
      for (const auto& cls : classes)
        for (std::int64_t m : {std::int64_t(p), std::int64_t(p * p), std::int64_t(p * p * p)})
          for (ConvexCut c : cls) EXPECT_EQ(in_coset(x, c, m), in_coset(x, cls.front(), m));
    }
  }
}

TEST(SingularPrimes, Examples) {
  EXPECT_TRUE(singular_primes(GroupSpec({Block::integers(), Block::rationals()})).empty());
  EXPECT_EQ(singular_primes(q_g2_g2()), (std::set<std::uint64_t>{2}));
  EXPECT_EQ(singular_primes(q_g2_g3()), (std::set<std::uint64_t>{2, 3}));
  EXPECT_TRUE(singular_primes(GroupSpec({Block::plocal(2)})).empty());
}

TEST(Bracket, Examples) {
  auto g = q_g2_g2();
  Element x = Element::unit(g, 1);
  EXPECT_TRUE(bracket_membership(x, {2, {2}}, 2));
  EXPECT_FALSE(bracket_membership(x, {2, {3}}, 2));
  EXPECT_TRUE(bracket_membership(2 * x, {2, {3}}, 2));
  EXPECT_THROW(bracket_membership(x, {2, {1}}, 2), PreconditionError);
}

TEST(Bracket, DivisibleElementsInEveryBracket) {
  fixtures::Gen gen(29);
  for (int n = 0; n < 300; ++n) {
    GroupSpec g = gen.spec(5);
    std::int64_t m = gen.prime();
    Element x = m * gen.element(g);
    for (ConvexCut c : sorts(g, m)) EXPECT_TRUE(bracket_membership(x, {std::uint64_t(m), c}, m));
  }
}

TEST(RankBound, Examples) {
  EXPECT_EQ(dp_rank_bound(GroupSpec({Block::integers()})).bound, 1u);
  RankBound single = dp_rank_bound(q_g2_g2());
  EXPECT_EQ(single.bound, 3u);
  EXPECT_TRUE(single.strongly_dependent);
  ASSERT_EQ(single.counts.size(), 1u);
  EXPECT_EQ(single.counts[0].collapsed, 2u);
  RankBound multi = dp_rank_bound(q_g2_g3());
  EXPECT_EQ(multi.bound, 3u);
  ASSERT_EQ(multi.counts.size(), 2u);
  EXPECT_EQ(multi.counts[0].collapsed, 1u);
  EXPECT_EQ(multi.counts[1].collapsed, 1u);
  EXPECT_EQ(multi.counts[0].raw, 2u);
  EXPECT_EQ(multi.counts[1].raw, 1u);
}
