#include "oag/pattern.hpp"

#include "oag/arith.hpp"

#include <algorithm>
#include <future>
#include <limits>
#include <random>
#include <set>
#include <thread>

namespace oag {

Conjunction PatternRow::instance(const GroupSpec& group, std::size_t column) const {
  return Conjunction{group, formula, columns.at(column)};
}

std::optional<Element> InpPattern::constructed_witness(std::span<const std::size_t> eta) const {
  Element sum = Element::zero(group);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].witness_parts.size() != rows[i].columns.size()) return std::nullopt;
    sum += rows[i].witness_parts[eta[i]];
  }
  return sum;
}

namespace {

std::vector<std::vector<std::size_t>> choose_paths(const InpPattern& pattern, std::size_t budget,
                                                   std::uint64_t seed, std::uint64_t& total,
                                                   bool& sampled) {
  total = 1;
  for (const PatternRow& row : pattern.rows) {
    std::uint64_t width = row.columns.size();
    if (width != 0 && total > std::numeric_limits<std::uint64_t>::max() / width)
      total = std::numeric_limits<std::uint64_t>::max();
    else
      total *= width;
  }
  std::vector<std::vector<std::size_t>> out;
  if (total <= budget) {
    sampled = false;
    if (total == 0) return out;
    std::vector<std::size_t> eta(pattern.rows.size(), 0);
    for (std::uint64_t n = 0; n < total; ++n) {
      out.push_back(eta);
      for (std::size_t i = eta.size(); i-- > 0;) {
        if (++eta[i] < pattern.rows[i].columns.size()) break;
        eta[i] = 0;
      }
    }
    return out;
  }
  sampled = true;
  std::mt19937_64 rng(seed);
  std::set<std::vector<std::size_t>> seen;
  while (out.size() < budget) {
    std::vector<std::size_t> eta;
    for (const PatternRow& row : pattern.rows)
      eta.push_back(std::uniform_int_distribution<std::size_t>(0, row.columns.size() - 1)(rng));
    if (seen.insert(eta).second) out.push_back(std::move(eta));
  }
  return out;
}

PathReport check_path(const InpPattern& pattern, const std::vector<std::size_t>& eta) {
  std::vector<Conjunction> parts;
  for (std::size_t i = 0; i < pattern.rows.size(); ++i)
    parts.push_back(pattern.rows[i].instance(pattern.group, eta[i]));
  Conjunction conj = combine(parts);
  PathReport report;
  report.eta = eta;
  SolveResult result = solve(conj);
  report.status = result.status;
  report.reason = result.reason;
  if (result.witness) {
    report.witness_confirmed = evaluate_conj(conj, *result.witness);
    report.witness = std::move(result.witness);
  }
  if (auto constructed = pattern.constructed_witness(eta))
    report.constructed_confirmed = evaluate_conj(conj, *constructed);
  return report;
}

template <typename Task>
void parallel_for(std::size_t count, unsigned threads, Task task) {
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, std::max<std::size_t>(count, 1)));
  std::vector<std::future<void>> jobs;
  for (unsigned t = 0; t < threads; ++t) {
    jobs.push_back(std::async(std::launch::async, [=, &task] {
      for (std::size_t n = t; n < count; n += threads) task(n);
    }));
  }
  for (auto& job : jobs) job.get();
}

bool is_type_one_row(const PatternRow& row) {
  return row.formula.size() == 1 && row.formula.front().kind == LiteralKind::Cong &&
         prime_power(row.formula.front().m).has_value();
}

}  // namespace

VerificationReport verify(const InpPattern& pattern, std::size_t path_budget, std::uint64_t seed,
                          unsigned threads) {
  VerificationReport report;
  report.depth = pattern.depth();
  report.seed = seed;
  report.rows.resize(pattern.rows.size());
  if (pattern.rows.empty()) return report;

  parallel_for(pattern.rows.size(), threads, [&](std::size_t i) {
    const PatternRow& row = pattern.rows[i];
    std::vector<Conjunction> instances;
    for (std::size_t j = 0; j < row.columns.size(); ++j)
      instances.push_back(row.instance(pattern.group, j));
    KInconsistency check = check_k_inconsistency(instances, row.k);
    report.rows[i] = {i, row.k, check.verdict, std::move(check.subsets)};
  });

  auto etas = choose_paths(pattern, path_budget, seed, report.total_paths, report.sampled);
  report.paths.resize(etas.size());
  parallel_for(etas.size(), threads,
               [&](std::size_t n) { report.paths[n] = check_path(pattern, etas[n]); });

  report.structural.sp_lemma = check_sp_lemma(pattern);
  report.structural.convex_rows = count_convex_rows(pattern);

  bool ok = !pattern.rows.empty();
  for (const RowReport& row : report.rows) {
    if (row.verdict == Verdict::Unknown)
      report.unknowns.push_back("row " + std::to_string(row.index) + " inconsistency undecided");
    ok = ok && row.verdict == Verdict::True;
  }
  for (const PathReport& path : report.paths) {
    if (path.status == SolveStatus::Unknown) report.unknowns.push_back("path: " + path.reason);
    ok = ok && path.status == SolveStatus::Sat && path.witness_confirmed &&
         path.constructed_confirmed.value_or(true);
  }
  report.verified = ok;
  return report;
}

InpPattern gen_chain_pattern(std::uint64_t p, std::size_t depth, std::size_t width) {
  if (!is_prime(p)) throw PreconditionError("chain pattern needs a prime");
  if (depth < 1 || width < 1) throw PreconditionError("depth and width must be at least 1");
  const std::size_t size = (depth + 1) * (width + 1);
  GroupSpec group(std::vector<Block>(size, Block::pspan(static_cast<std::uint32_t>(p))));
  const auto pn = static_cast<std::int64_t>(p);

  // Right position r (0 = least significant) sits at coordinate size-1-r.
  auto at_right = [&](std::size_t r) { return Element::unit(group, size - 1 - r); };
  auto e = [&](std::size_t i) { return at_right((i - 1) * (width + 1)); };
  auto f = [&](std::size_t i, std::size_t j) { return at_right((i - 1) * (width + 1) + j); };

  InpPattern pattern{group, {}};
  for (std::size_t i = 1; i <= depth; ++i) {
    PatternRow row;
    row.label = "chain row " + std::to_string(i);
    ConvexCut alpha = hsub(e(i), pn);
    row.formula = {Literal::cong(1, ipow(pn, static_cast<unsigned>(i + 1)), alpha, Term::param(0))};
    for (std::size_t j = 1; j <= width; ++j) {
      Element c = ipow(pn, static_cast<unsigned>(i)) * f(i, j);
      row.columns.push_back({c});
      row.witness_parts.push_back(c);
    }
    pattern.rows.push_back(std::move(row));
  }
  return pattern;
}

InpPattern gen_optimal_pattern(std::span<const std::uint64_t> primes,
                               std::span<const std::size_t> multiplicities, std::size_t grid) {
  if (primes.empty() || primes.size() != multiplicities.size())
    throw PreconditionError("need one multiplicity per prime");
  if (grid < 2) throw PreconditionError("grid must be at least 2");
  std::set<std::uint64_t> distinct(primes.begin(), primes.end());
  if (distinct.size() != primes.size()) throw PreconditionError("primes must be distinct");

  std::vector<Block> blocks{Block::rationals()};
  std::vector<std::size_t> start;
  for (std::size_t i = 0; i < primes.size(); ++i) {
    if (!is_prime(primes[i])) throw PreconditionError("not a prime: " + std::to_string(primes[i]));
    if (multiplicities[i] < 1) throw PreconditionError("multiplicities must be positive");
    start.push_back(blocks.size());
    for (std::size_t c = 0; c < multiplicities[i]; ++c)
      blocks.push_back(Block::pspan(static_cast<std::uint32_t>(primes[i])));
  }
  GroupSpec group(blocks);
  const std::size_t size = group.size();

  InpPattern pattern{group, {}};
  for (std::size_t i = 0; i < primes.size(); ++i) {
    const auto p = static_cast<std::int64_t>(primes[i]);
    const std::size_t k = multiplicities[i];
    for (std::size_t j = 0; j < k; ++j) {
      // j-th copy of G_p counted from the right; alpha names G_p^j + H_i,
      // or {0} when j = 0.
      std::size_t coord = start[i] + k - 1 - j;
      ConvexCut alpha{j == 0 ? size : start[i] + k - j};
      std::int64_t scale_j = ipow(p, static_cast<unsigned>(j));
      PatternRow row;
      row.label = "prime " + std::to_string(p) + " level " + std::to_string(j);
      row.formula = {Literal::cong(1, checked_mul(scale_j, p), alpha, Term::param(0))};
      for (std::size_t col = 0; col < grid; ++col) {
        Element e = Element::unit(group, coord, static_cast<std::uint32_t>(col), mpq_class(scale_j));
        row.columns.push_back({e});
        row.witness_parts.push_back(e);
      }
      pattern.rows.push_back(std::move(row));
    }
  }

  PatternRow intervals;
  intervals.label = "intervals";
  intervals.formula = {Literal::ord(1, Cmp::Gt, Term::param(0)),
                       Literal::ord(1, Cmp::Lt, Term::param(1))};
  for (std::size_t col = 0; col < grid; ++col) {
    mpq_class a(static_cast<long>(col));
    intervals.columns.push_back({Element::unit(group, 0, 0, a),
                                 Element::unit(group, 0, 0, a + mpq_class(1, 2))});
    intervals.witness_parts.push_back(Element::unit(group, 0, 0, a + mpq_class(1, 4)));
  }
  pattern.rows.push_back(std::move(intervals));
  return pattern;
}

InpPattern gen_optimal_pattern(const GroupSpec& group, std::size_t grid) {
  if (group[0].kind != BlockKind::Rat || group.size() < 2)
    throw PreconditionError("optimal pattern needs a spec of the form lex(Q, Gp(p)^k, ...)");
  std::vector<std::uint64_t> primes;
  std::vector<std::size_t> multiplicities;
  for (std::size_t i = 1; i < group.size(); ++i) {
    if (group[i].kind != BlockKind::PSpan)
      throw PreconditionError("optimal pattern needs Gp blocks after the leading Q");
    if (!primes.empty() && primes.back() == group[i].p) {
      ++multiplicities.back();
      continue;
    }
    primes.push_back(group[i].p);
    multiplicities.push_back(1);
  }
  return gen_optimal_pattern(primes, multiplicities, grid);
}

bool check_sp_lemma(const InpPattern& pattern) {
  for (std::size_t a = 0; a < pattern.rows.size(); ++a) {
    if (!is_type_one_row(pattern.rows[a])) continue;
    for (std::size_t b = 0; b < pattern.rows.size(); ++b) {
      if (a == b || !is_type_one_row(pattern.rows[b])) continue;
      const Literal& lit = pattern.rows[a].formula.front();
      const Literal& other = pattern.rows[b].formula.front();
      auto [p, l] = *prime_power(lit.m);
      auto [q, l2] = *prime_power(other.m);
      if (p != q || !lit.alpha.subgroup_of(other.alpha)) continue;
      if (l >= l2) return false;
      bool found = false;
      for (ConvexCut beta : sorts(pattern.group, static_cast<std::int64_t>(p)))
        found = found || (beta.subgroup_of(other.alpha) && beta != other.alpha &&
                          lit.alpha.subgroup_of(beta));
      if (!found) return false;
    }
  }
  return true;
}

std::size_t count_convex_rows(const InpPattern& pattern) {
  return static_cast<std::size_t>(
      std::count_if(pattern.rows.begin(), pattern.rows.end(), [](const PatternRow& row) {
        return !row.formula.empty() &&
               std::all_of(row.formula.begin(), row.formula.end(), [](const Literal& lit) {
                 return classify(lit) == LiteralType::III;
               });
      }));
}

}  // namespace oag
