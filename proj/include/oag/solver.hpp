#pragma once

// Consistency of one-variable conjunctions over a concrete GroupSpec.
//
// solve() works coordinate by coordinate. Congruences become residue
// conditions on individual basis coefficients (finitely many matter: the
// supports of all parameter values plus one unused symbol per PSpan
// coordinate), negated literals are disjunctions over such atoms and are
// branched on, and order literals are resolved by a lexicographic search
// that either ties a coordinate to a bound or moves strictly inside the
// open interval left by the active bounds. Every SAT witness is re-checked
// with evaluate_conj before it is returned.

#include "oag/formula.hpp"

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace oag {

enum class SolveStatus { Sat, Unsat, Unknown };

std::string to_string(SolveStatus status);

// One refuted piece of the search. kind is "residue" (every residue class
// of the coefficient modulo `modulus` is excluded; `excluded` maps each class
// to the first literal excluding it), "order" (no lexicographic completion)
// or "equality" (fixed coordinates clash or leave their block).
struct CertificateEntry {
  std::string kind;
  std::size_t coordinate = 0;
  std::uint32_t basis = 0;
  std::int64_t modulus = 1;
  std::vector<std::pair<std::int64_t, std::size_t>> excluded;
  std::string detail;
};

struct SolveResult {
  SolveStatus status = SolveStatus::Unknown;
  std::optional<Element> witness;
  std::vector<CertificateEntry> certificate;
  std::string reason;
};

struct SolveOptions {
  std::size_t branch_budget = 1'000'000;
  std::int64_t max_modulus = std::int64_t{1} << 22;
};

SolveResult solve(const Conjunction& conj, const SolveOptions& options = {});

// Brute-force cross-check: x = sum lambda_u * u over parameters, one unused
// basis unit per PSpan coordinate, and p^-d scalings (d <= 2) of divisible
// parameters for the primes of the conjunction's moduli, with
// sum |lambda_u| <= radius. Returns the first evaluator-verified witness.
std::optional<Element> oracle_search(const Conjunction& conj, int radius);

// Conjunction of several instances over one group; parameter banks are
// concatenated and terms renumbered.
Conjunction combine(std::span<const Conjunction> parts);

enum class Verdict { True, False, Unknown };

std::string to_string(Verdict verdict);

struct SubsetResult {
  std::vector<std::size_t> columns;
  SolveResult result;
};

struct KInconsistency {
  Verdict verdict = Verdict::True;
  std::vector<SubsetResult> subsets;
};

// Solves every k-subset of the instances; True iff all are UNSAT.
KInconsistency check_k_inconsistency(std::span<const Conjunction> instances, std::size_t k,
                                     const SolveOptions& options = {});

Verdict check_k_inconsistent(std::span<const Conjunction> instances, std::size_t k);

}  // namespace oag
