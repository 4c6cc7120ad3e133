#include "oag/convex.hpp"

#include "oag/arith.hpp"

#include <algorithm>

namespace oag {

bool in_coset(const Element& x, ConvexCut cut, std::int64_t m) {
  std::size_t upto = std::min(cut.s, x.size());
  for (std::size_t i = 0; i < upto; ++i)
    if (!block_divisible(x.spec()[i], x[i], m)) return false;
  return true;
}

bool in_subgroup(const Element& x, ConvexCut cut) {
  std::size_t upto = std::min(cut.s, x.size());
  for (std::size_t i = 0; i < upto; ++i)
    if (!x[i].is_zero()) return false;
  return true;
}

ConvexCut hsub(const Element& a, std::int64_t n) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (!block_divisible(a.spec()[i], a[i], n)) return {i + 1};
  return {a.size()};
}

Element project_into(const Element& a, ConvexCut target, std::uint64_t p) {
  if (target.s > a.size()) throw PreconditionError("cut beyond group length");
  if (!in_coset(a, target, static_cast<std::int64_t>(p)))
    throw PreconditionError("element is not in G_target + pG");
  std::vector<BlockElement> coords = a.coords();
  for (std::size_t i = 0; i < target.s; ++i) coords[i] = BlockElement();
  return Element(a.spec(), std::move(coords));
}

std::vector<ConvexCut> sorts(const GroupSpec& g, std::int64_t n) {
  std::vector<ConvexCut> out{{g.size()}};
  for (std::size_t i = g.size(); i-- > 0;)
    if (!g[i].divisible_by(n) && i + 1 != g.size()) out.push_back({i + 1});
  return out;
}

std::vector<std::vector<ConvexCut>> collapse_sorts(const GroupSpec& g, std::uint64_t p) {
  const auto pn = static_cast<std::int64_t>(p);
  std::vector<std::vector<ConvexCut>> classes;
  for (ConvexCut cut : sorts(g, pn)) {
    if (!classes.empty()) {
      std::size_t upper = classes.back().back().s;
      bool divisible = true;
      for (std::size_t i = cut.s; i < upper; ++i) divisible = divisible && g[i].divisible_by(pn);
      if (divisible) {
        classes.back().push_back(cut);
        continue;
      }
    }
    classes.push_back({cut});
  }
  return classes;
}

std::set<std::uint64_t> singular_primes(const GroupSpec& g) {
  std::set<std::uint64_t> out;
  for (const Block& b : g)
    if (b.kind == BlockKind::PSpan) out.insert(b.p);
  return out;
}

bool bracket_membership(const Element& x, const SortElement& alpha, std::int64_t n) {
  auto all = sorts(x.spec(), n);
  if (std::find(all.begin(), all.end(), alpha.cut) == all.end())
    throw PreconditionError("cut " + alpha.cut.describe() + " is not a sort of S_" +
                            std::to_string(n));
  for (ConvexCut other : all)
    if (other.s < alpha.cut.s && !in_coset(x, other, n)) return false;
  return true;
}

RankBound dp_rank_bound(const GroupSpec& g) {
  RankBound out;
  for (std::uint64_t p : singular_primes(g)) {
    PrimeSortCount count{p, sorts(g, static_cast<std::int64_t>(p)).size(),
                         collapse_sorts(g, p).size()};
    out.bound += count.collapsed;
    out.counts.push_back(count);
  }
  // Finitely many blocks: finitely many singular primes, each S_p finite.
  out.strongly_dependent = true;
  return out;
}

}  // namespace oag
