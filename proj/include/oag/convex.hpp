#pragma once

// Definable convex subgroups of a finite lexicographic sum.
//
// The convex subgroups are exactly the K+1 coordinate suffixes. ConvexCut{s}
// names G_s = {x : x_i = 0 for i < s}; s = 0 is all of G and s = K is {0}.
// A larger s is a smaller subgroup.

#include "oag/group.hpp"

#include <compare>
#include <cstdint>
#include <set>
#include <string>
#include <vector>

namespace oag {

struct ConvexCut {
  std::size_t s = 0;

  // G_this is a subgroup of G_other.
  bool subgroup_of(ConvexCut other) const { return s >= other.s; }
  std::string describe() const { return "coords>=" + std::to_string(s); }

  auto operator<=>(const ConvexCut&) const = default;
};

// An element of the sort S_p: a cut that occurs as some H_p(a).
struct SortElement {
  std::uint64_t p = 2;
  ConvexCut cut;

  auto operator<=>(const SortElement&) const = default;
};

// x in G_cut + mG.
bool in_coset(const Element& x, ConvexCut cut, std::int64_t m);

// x in G_cut.
bool in_subgroup(const Element& x, ConvexCut cut);

// H_n(a): the largest convex subgroup H with a not in H + nG; {0} when a in nG.
ConvexCut hsub(const Element& a, std::int64_t n);

// a with its coordinates above `target` zeroed. Requires a in G_target + pG,
// which is what H_p(a) strictly inside G_target (or a in pG) guarantees.
// Throws PreconditionError otherwise.
Element project_into(const Element& a, ConvexCut target, std::uint64_t p);

// {H_n(a) : a in G}, smallest subgroup first.
std::vector<ConvexCut> sorts(const GroupSpec& g, std::int64_t n);

// Raw S_p with cuts identified whenever every block between them is
// p-divisible (then G_s + p^l G = G_s' + p^l G for all l). Classes are
// ordered smallest subgroup first; each class lists its cuts the same way.
std::vector<std::vector<ConvexCut>> collapse_sorts(const GroupSpec& g, std::uint64_t p);

// Primes with [G : pG] infinite, i.e. primes of PSpan blocks.
std::set<std::uint64_t> singular_primes(const GroupSpec& g);

// x in G^{[n]}_alpha, the intersection of G_a' + nG over sorts a' in S_n
// strictly above alpha. Throws PreconditionError when alpha.cut is not in S_n.
bool bracket_membership(const Element& x, const SortElement& alpha, std::int64_t n);

struct PrimeSortCount {
  std::uint64_t p;
  std::size_t raw;
  std::size_t collapsed;
};

struct RankBound {
  std::size_t bound = 1;
  bool strongly_dependent = true;
  std::vector<PrimeSortCount> counts;  // one per singular prime, increasing p
};

// 1 + sum over singular p of |collapse_sorts(g, p)|.
RankBound dp_rank_bound(const GroupSpec& g);

}  // namespace oag
