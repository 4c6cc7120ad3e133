#pragma once

// Inp-patterns over a finite grid of columns: each row is a formula template
// instantiated with one parameter tuple per column. A pattern is verified
// when every row is k-inconsistent and every checked path (one column per
// row) is consistent with an evaluator-confirmed witness.

#include "oag/formula.hpp"
#include "oag/solver.hpp"

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace oag {

struct PatternRow {
  std::string label;
  std::vector<Literal> formula;  // over the column's parameters a0, a1, ...
  std::vector<std::vector<Element>> columns;
  std::size_t k = 2;
  // Optional per-column summands of the constructed path witness.
  std::vector<Element> witness_parts;

  Conjunction instance(const GroupSpec& group, std::size_t column) const;
};

struct InpPattern {
  GroupSpec group;
  std::vector<PatternRow> rows;

  std::size_t depth() const { return rows.size(); }
  // Sum of witness parts along eta, when every row carries them.
  std::optional<Element> constructed_witness(std::span<const std::size_t> eta) const;
};

struct RowReport {
  std::size_t index = 0;
  std::size_t k = 2;
  Verdict verdict = Verdict::Unknown;
  std::vector<SubsetResult> subsets;
};

struct PathReport {
  std::vector<std::size_t> eta;
  SolveStatus status = SolveStatus::Unknown;
  std::optional<Element> witness;
  bool witness_confirmed = false;
  std::optional<bool> constructed_confirmed;
  std::string reason;
};

struct StructuralReport {
  bool sp_lemma = true;
  std::size_t convex_rows = 0;
};

struct VerificationReport {
  std::size_t depth = 0;
  bool verified = false;
  std::vector<RowReport> rows;
  std::vector<PathReport> paths;
  std::uint64_t total_paths = 0;  // saturates at UINT64_MAX
  bool sampled = false;
  std::uint64_t seed = 0;
  StructuralReport structural;
  std::vector<std::string> unknowns;
};

// Rows are checked for k-inconsistency; all paths are solved when there are at
// most path_budget of them, otherwise path_budget distinct paths drawn with
// the given seed. threads = 0 uses the hardware concurrency.
VerificationReport verify(const InpPattern& pattern, std::size_t path_budget,
                          std::uint64_t seed = 0, unsigned threads = 0);

// Depth-n pattern in PSpan(p)^{(n+1)(m+1)}: row i is x == c_{i,j} mod
// (p^{i+1}, H_p(e_i)) with c_{i,j} = p^i f_{i,j}, columns j = 1..m.
InpPattern gen_chain_pattern(std::uint64_t p, std::size_t depth, std::size_t width);

// Q + sum_i PSpan(p_i)^{k_i} with one congruence row per (i, j < k_i) and a
// final row of disjoint rational intervals; depth 1 + sum k_i.
InpPattern gen_optimal_pattern(std::span<const std::uint64_t> primes,
                               std::span<const std::size_t> multiplicities, std::size_t grid);

// Same, reading primes and multiplicities off a spec shaped Q, Gp(p0)^k0, ...
InpPattern gen_optimal_pattern(const GroupSpec& group, std::size_t grid);

// For each pair of single-congruence rows with moduli p^l, p^l' and sorts
// G_alpha within G_alpha': l < l' and some beta in S_p has
// G_alpha within G_beta strictly within G_alpha'.
bool check_sp_lemma(const InpPattern& pattern);

// Rows made only of order / subgroup-membership literals.
std::size_t count_convex_rows(const InpPattern& pattern);

}  // namespace oag
