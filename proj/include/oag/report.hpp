#pragma once

// JSON views of analysis, solver and pattern results. Keys are emitted in a
// fixed order so identical inputs give byte-identical output.

#include "oag/convex.hpp"
#include "oag/formula.hpp"
#include "oag/pattern.hpp"
#include "oag/solver.hpp"

#include "json.hpp"

#include <set>
#include <vector>

namespace oag {

using Json = nlohmann::ordered_json;

struct PrimeSorts {
  std::uint64_t p = 2;
  std::vector<ConvexCut> raw;
  std::vector<std::vector<ConvexCut>> collapsed;
};

struct Analysis {
  GroupSpec spec;
  std::set<std::uint64_t> singular;
  std::vector<PrimeSorts> sorts;  // one per singular prime
  RankBound bound;
};

Analysis analyze(const GroupSpec& spec);

Json sort_json(std::uint64_t p, ConvexCut cut);
Json to_json(const Analysis& analysis);
Json to_json(const CertificateEntry& entry);
Json to_json(const SolveResult& result);
Json to_json(const NormalizeResult& result);
Json to_json(const InpPattern& pattern);
Json to_json(const VerificationReport& report);

}  // namespace oag
