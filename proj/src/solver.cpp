#include "oag/solver.hpp"

#include "oag/arith.hpp"
#include "oag/order.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

namespace oag {

std::string to_string(SolveStatus status) {
  switch (status) {
    case SolveStatus::Sat: return "SAT";
    case SolveStatus::Unsat: return "UNSAT";
    case SolveStatus::Unknown: return "UNKNOWN";
  }
  return "UNKNOWN";
}

std::string to_string(Verdict verdict) {
  switch (verdict) {
    case Verdict::True: return "true";
    case Verdict::False: return "false";
    case Verdict::Unknown: return "unknown";
  }
  return "unknown";
}

namespace {

constexpr std::size_t kMaxCertificateEntries = 64;

struct GiveUp : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// k*y == target mod modulus on one basis coefficient y (or its negation).
struct CoefConstraint {
  std::int64_t k = 1;
  std::int64_t modulus = 1;
  std::int64_t target = 0;
  std::size_t literal = 0;
  bool negated = false;

  bool admits(std::int64_t r) const {
    bool hit = mod_floor(k * (r % modulus) - target, modulus) == 0;
    return negated ? !hit : hit;
  }
};

struct Residues {
  std::int64_t modulus = 1;
  std::vector<std::int64_t> allowed{0};

  bool contains(std::int64_t r) const {
    return std::binary_search(allowed.begin(), allowed.end(), r);
  }
};

struct OrderBound {
  Cmp rel = Cmp::Lt;  // never Eq
  std::vector<BlockElement> w;
  std::size_t literal = 0;

  bool wants_above() const { return rel == Cmp::Gt || rel == Cmp::Ge; }
  bool strict() const { return rel == Cmp::Gt || rel == Cmp::Lt; }
};

struct Atom {
  std::size_t coord = 0;
  bool coefficient = true;  // residue atom, else point avoidance
  std::uint32_t basis = 0;
  CoefConstraint constraint;
  BlockElement point;
};

struct NegLiteral {
  std::size_t literal = 0;
  std::vector<Atom> atoms;
};

bool is_local(const Block& b) { return b.kind == BlockKind::PLocal || b.kind == BlockKind::PSpan; }

// Effective modulus of m-divisibility on one coefficient of the block.
std::int64_t effective_modulus(const Block& b, std::int64_t m) {
  switch (b.kind) {
    case BlockKind::Rat: return 1;
    case BlockKind::Int: return m;
    case BlockKind::PLocal:
    case BlockKind::PSpan: return ipow(b.p, static_cast<unsigned>(valuation(m, b.p)));
  }
  return 1;
}

std::int64_t coefficient_residue(const Block& b, const mpq_class& c, std::int64_t modulus) {
  if (modulus == 1) return 0;
  if (b.kind == BlockKind::Int) return mod_floor(c.get_num(), modulus);
  return residue(c, modulus);
}

BlockElement divide_hull(const BlockElement& v, std::int64_t k) {
  return mpq_class(1, static_cast<unsigned long>(std::llabs(k))) * (k < 0 ? -v : v);
}

class Search {
 public:
  Search(const Conjunction& conj, const SolveOptions& options)
      : conj_(conj), spec_(conj.group), options_(options), size_(spec_.size()) {}

  SolveResult run();

 private:
  bool preprocess(std::vector<Element>& values);
  std::optional<Residues> residues_for(std::size_t i, std::uint32_t b, bool record);
  bool branch(std::size_t next);
  bool place(std::size_t i, const std::vector<std::size_t>& active);
  bool value_ok(std::size_t i, const BlockElement& v) const;
  bool advance(const std::vector<std::size_t>& active, std::size_t i, const BlockElement& v,
               std::vector<std::size_t>& out) const;
  std::optional<BlockElement> choose(std::size_t i, const std::optional<BlockElement>& lower,
                                     const std::optional<BlockElement>& upper) const;
  std::optional<BlockElement> choose_int(std::size_t i, const std::optional<BlockElement>& lower,
                                         const std::optional<BlockElement>& upper) const;
  std::optional<BlockElement> choose_dense(std::size_t i,
                                           const std::optional<BlockElement>& lower,
                                           const std::optional<BlockElement>& upper) const;
  bool strictly_inside(const BlockElement& v, const std::optional<BlockElement>& lower,
                       const std::optional<BlockElement>& upper) const;
  void tick();
  void record(CertificateEntry entry);

  const Conjunction& conj_;
  GroupSpec spec_;
  SolveOptions options_;
  std::size_t size_;

  std::vector<std::vector<std::uint32_t>> keys_;
  std::vector<std::map<std::uint32_t, std::vector<CoefConstraint>>> constraints_;
  std::vector<std::map<std::uint32_t, Residues>> residues_;
  std::vector<std::optional<BlockElement>> fixed_;
  std::vector<std::vector<BlockElement>> avoid_;
  std::vector<OrderBound> bounds_;
  std::vector<NegLiteral> negs_;
  std::vector<BlockElement> x_;
  std::vector<CertificateEntry> certificate_;
  std::size_t nodes_ = 0;
};

void Search::tick() {
  if (++nodes_ > options_.branch_budget) throw GiveUp("search budget exhausted");
}

void Search::record(CertificateEntry entry) {
  if (certificate_.size() < kMaxCertificateEntries) certificate_.push_back(std::move(entry));
}

bool Search::preprocess(std::vector<Element>& values) {
  keys_.assign(size_, {});
  constraints_.assign(size_, {});
  residues_.assign(size_, {});
  fixed_.assign(size_, std::nullopt);
  avoid_.assign(size_, {});
  x_.assign(size_, BlockElement());

  std::vector<std::set<std::uint32_t>> support(size_, std::set<std::uint32_t>{0});
  auto note = [&](std::size_t i, const BlockElement& v) {
    for (const auto& [b, c] : v.terms()) support[i].insert(b);
  };

  for (std::size_t j = 0; j < conj_.literals.size(); ++j) {
    const Literal& lit = conj_.literals[j];
    if (lit.alpha.s > size_) throw PreconditionError("cut beyond group length");
    values.push_back(lit.t.value(conj_.params, spec_));
    for (std::size_t i = 0; i < size_; ++i) note(i, divide_hull(values.back()[i], lit.k));
    for (std::size_t i = 0; i < size_; ++i) note(i, values.back()[i]);
  }

  auto fix = [&](std::size_t i, const BlockElement& v, std::size_t literal) {
    if (!block_contains(spec_[i], v)) {
      record({"equality", i, 0, 1, {}, "literal " + std::to_string(literal) +
                                            " forces a value outside the block"});
      return false;
    }
    if (fixed_[i] && !(*fixed_[i] == v)) {
      record({"equality", i, 0, 1, {}, "literal " + std::to_string(literal) +
                                            " conflicts with an earlier equality"});
      return false;
    }
    fixed_[i] = v;
    return true;
  };

  for (std::size_t i = 0; i < size_; ++i) {
    keys_[i].assign(support[i].begin(), support[i].end());
    if (spec_[i].kind == BlockKind::PSpan) keys_[i].push_back(keys_[i].back() + 1);
    if (spec_[i].kind != BlockKind::PSpan) keys_[i] = {0};
  }

  for (std::size_t j = 0; j < conj_.literals.size(); ++j) {
    const Literal& lit = conj_.literals[j];
    const Element& tv = values[j];
    switch (lit.kind) {
      case LiteralKind::Cong:
      case LiteralKind::NCong: {
        std::vector<Atom> atoms;
        for (std::size_t i = 0; i < lit.alpha.s; ++i) {
          std::int64_t modulus = effective_modulus(spec_[i], lit.m);
          if (modulus == 1) continue;
          if (modulus > options_.max_modulus) throw GiveUp("modulus exceeds search limit");
          for (std::uint32_t b : keys_[i]) {
            CoefConstraint c{mod_floor(lit.k, modulus), modulus,
                             coefficient_residue(spec_[i], tv[i].coefficient(b), modulus), j,
                             lit.kind == LiteralKind::NCong};
            if (lit.kind == LiteralKind::Cong)
              constraints_[i][b].push_back(c);
            else
              atoms.push_back({i, true, b, c, {}});
          }
        }
        if (lit.kind == LiteralKind::NCong) {
          if (atoms.empty()) {
            record({"residue", 0, 0, 1, {},
                    "literal " + std::to_string(j) + " can never fail its congruence"});
            return false;
          }
          negs_.push_back({j, std::move(atoms)});
        }
        break;
      }
      case LiteralKind::InCoset:
        for (std::size_t i = 0; i < lit.alpha.s; ++i)
          if (!fix(i, divide_hull(tv[i], lit.k), j)) return false;
        break;
      case LiteralKind::Ord: {
        if (lit.cmp == Cmp::Eq) {
          for (std::size_t i = 0; i < size_; ++i)
            if (!fix(i, divide_hull(tv[i], lit.k), j)) return false;
          break;
        }
        OrderBound bound{lit.cmp, {}, j};
        if (lit.k < 0) {
          switch (lit.cmp) {
            case Cmp::Lt: bound.rel = Cmp::Gt; break;
            case Cmp::Le: bound.rel = Cmp::Ge; break;
            case Cmp::Gt: bound.rel = Cmp::Lt; break;
            case Cmp::Ge: bound.rel = Cmp::Le; break;
            case Cmp::Eq: break;
          }
        }
        for (std::size_t i = 0; i < size_; ++i) bound.w.push_back(divide_hull(tv[i], lit.k));
        bounds_.push_back(std::move(bound));
        break;
      }
      case LiteralKind::Neq:
      case LiteralKind::NotInCoset: {
        std::size_t upto = lit.kind == LiteralKind::Neq ? size_ : lit.alpha.s;
        std::vector<Atom> atoms;
        bool trivially_true = false;
        for (std::size_t i = 0; i < upto; ++i) {
          BlockElement w = divide_hull(tv[i], lit.k);
          if (!block_contains(spec_[i], w)) trivially_true = true;
          atoms.push_back({i, false, 0, {}, std::move(w)});
        }
        if (trivially_true) break;
        if (atoms.empty()) {
          record({"equality", 0, 0, 1, {},
                  "literal " + std::to_string(j) + " excludes the whole group"});
          return false;
        }
        negs_.push_back({j, std::move(atoms)});
        break;
      }
    }
  }

  bool ok = true;
  for (std::size_t i = 0; i < size_; ++i) {
    for (std::uint32_t b : keys_[i]) {
      auto r = residues_for(i, b, true);
      if (!r) {
        ok = false;
        continue;
      }
      residues_[i][b] = std::move(*r);
    }
  }
  return ok;
}

std::optional<Residues> Search::residues_for(std::size_t i, std::uint32_t b, bool record_failure) {
  auto it = constraints_[i].find(b);
  if (it == constraints_[i].end() || it->second.empty()) return Residues{};
  const auto& list = it->second;
  std::int64_t modulus = 1;
  for (const auto& c : list) {
    modulus = is_local(spec_[i]) ? std::max(modulus, c.modulus) : std::lcm(modulus, c.modulus);
    if (modulus > options_.max_modulus) throw GiveUp("residue modulus exceeds search limit");
  }
  Residues out{modulus, {}};
  std::vector<std::pair<std::int64_t, std::size_t>> excluded;
  for (std::int64_t r = 0; r < modulus; ++r) {
    const CoefConstraint* blocker = nullptr;
    for (const auto& c : list) {
      if (!c.admits(r)) {
        blocker = &c;
        break;
      }
    }
    if (blocker == nullptr)
      out.allowed.push_back(r);
    else if (record_failure)
      excluded.emplace_back(r, blocker->literal);
  }
  if (out.allowed.empty()) {
    if (record_failure) record({"residue", i, b, modulus, std::move(excluded), ""});
    return std::nullopt;
  }
  return out;
}

bool Search::branch(std::size_t next) {
  tick();
  if (next == negs_.size()) {
    for (std::size_t i = 0; i < size_; ++i) {
      if (fixed_[i] && !value_ok(i, *fixed_[i])) {
        record({"equality", i, 0, 1, {}, "fixed coordinate violates a congruence or disequality"});
        return false;
      }
    }
    std::vector<std::size_t> active(bounds_.size());
    std::iota(active.begin(), active.end(), 0);
    if (place(0, active)) return true;
    record({"order", 0, 0, 1, {}, "no lexicographic completion satisfies the order literals"});
    return false;
  }
  for (const Atom& atom : negs_[next].atoms) {
    if (atom.coefficient) {
      auto& list = constraints_[atom.coord][atom.basis];
      list.push_back(atom.constraint);
      Residues saved = residues_[atom.coord][atom.basis];
      auto r = residues_for(atom.coord, atom.basis, true);
      bool found = false;
      if (r) {
        residues_[atom.coord][atom.basis] = std::move(*r);
        found = branch(next + 1);
      }
      residues_[atom.coord][atom.basis] = std::move(saved);
      list.pop_back();
      if (found) return true;
    } else {
      avoid_[atom.coord].push_back(atom.point);
      bool found = branch(next + 1);
      avoid_[atom.coord].pop_back();
      if (found) return true;
    }
  }
  return false;
}

bool Search::value_ok(std::size_t i, const BlockElement& v) const {
  const Block& block = spec_[i];
  if (!block_contains(block, v)) return false;
  for (const auto& [b, c] : v.terms())
    if (residues_[i].find(b) == residues_[i].end()) return false;
  for (const auto& [b, r] : residues_[i])
    if (!r.contains(coefficient_residue(block, v.coefficient(b), r.modulus))) return false;
  for (const auto& point : avoid_[i])
    if (point == v) return false;
  return true;
}

bool Search::advance(const std::vector<std::size_t>& active, std::size_t i, const BlockElement& v,
                     std::vector<std::size_t>& out) const {
  out.clear();
  for (std::size_t idx : active) {
    const OrderBound& bound = bounds_[idx];
    auto c = compare_blocks(v, bound.w[i]);
    if (c == 0) {
      out.push_back(idx);
      continue;
    }
    if ((c > 0) != bound.wants_above()) return false;
  }
  return true;
}

bool Search::strictly_inside(const BlockElement& v, const std::optional<BlockElement>& lower,
                             const std::optional<BlockElement>& upper) const {
  if (lower && compare_blocks(v, *lower) <= 0) return false;
  if (upper && compare_blocks(v, *upper) >= 0) return false;
  return true;
}

std::optional<BlockElement> Search::choose(std::size_t i, const std::optional<BlockElement>& lower,
                                           const std::optional<BlockElement>& upper) const {
  if (spec_[i].kind == BlockKind::Int) return choose_int(i, lower, upper);
  return choose_dense(i, lower, upper);
}

std::optional<BlockElement> Search::choose_int(std::size_t i,
                                               const std::optional<BlockElement>& lower,
                                               const std::optional<BlockElement>& upper) const {
  const Residues& r = residues_[i].at(0);
  std::int64_t span = r.modulus * static_cast<std::int64_t>(avoid_[i].size() + 1);
  auto ok = [&](const mpz_class& n) { return value_ok(i, BlockElement(mpq_class(n))); };
  if (lower) {
    mpz_class start;
    mpz_fdiv_q(start.get_mpz_t(), lower->coefficient(0).get_num_mpz_t(),
               lower->coefficient(0).get_den_mpz_t());
    start += 1;
    for (std::int64_t step = 0; step < span; ++step) {
      mpz_class n = start + step;
      if (upper && mpq_class(n) >= upper->coefficient(0)) return std::nullopt;
      if (ok(n)) return BlockElement(mpq_class(n));
    }
    return std::nullopt;
  }
  if (upper) {
    mpz_class start;
    mpz_cdiv_q(start.get_mpz_t(), upper->coefficient(0).get_num_mpz_t(),
               upper->coefficient(0).get_den_mpz_t());
    start -= 1;
    for (std::int64_t step = 0; step < span; ++step) {
      mpz_class n = start - step;
      if (ok(n)) return BlockElement(mpq_class(n));
    }
    return std::nullopt;
  }
  for (std::int64_t step = 0; step <= span; ++step) {
    for (long sign : {1L, -1L}) {
      mpz_class n = sign * step;
      if (ok(n)) return BlockElement(mpq_class(n));
    }
  }
  return std::nullopt;
}

std::optional<BlockElement> Search::choose_dense(std::size_t i,
                                                 const std::optional<BlockElement>& lower,
                                                 const std::optional<BlockElement>& upper) const {
  const Block& block = spec_[i];
  if (lower && upper && compare_blocks(*lower, *upper) >= 0) return std::nullopt;

  BlockElement rep;
  for (const auto& [b, r] : residues_[i])
    if (b != 0) rep += BlockElement::basis(b, r.allowed.front());
  const Residues& r0 = residues_[i].at(0);
  mpq_class base0 = r0.allowed.front();

  std::optional<BlockElement> natural;
  if (lower && upper)
    natural = mpq_class(1, 2) * (*lower + *upper);
  else if (lower)
    natural = *lower + BlockElement(mpq_class(1));
  else if (upper)
    natural = *upper - BlockElement(mpq_class(1));
  else
    natural = rep + BlockElement(base0);
  if (value_ok(i, *natural) && strictly_inside(*natural, lower, upper)) return natural;

  const std::size_t tries = avoid_[i].size() + 1;
  const mpq_class modulus0(r0.modulus);

  if (!lower && !upper) {
    for (std::size_t n = 0; n <= 2 * tries; ++n) {
      mpq_class shift = modulus0 * static_cast<long>((n + 1) / 2) * (n % 2 == 0 ? -1 : 1);
      BlockElement v = rep + BlockElement(base0 + shift);
      if (value_ok(i, v)) return v;
    }
    return std::nullopt;
  }

  // Solve for the b0 coefficient c0 = base0 + n * modulus0 / d^j inside
  // (lower - rest, upper - rest).
  const long d = (is_local(block) && block.p == 2) ? 3 : 2;
  std::optional<mpq_class> lo, hi;
  for (unsigned long bits = 64;; bits *= 2) {
    if (bits > (1UL << 16)) throw GiveUp("interval too narrow to certify");
    if (lower) lo = enclose(*lower - rep, bits).hi;
    if (upper) hi = enclose(*upper - rep, bits).lo;
    if (!lo || !hi || *lo < *hi) break;
  }

  mpq_class step = modulus0;
  for (int j = 0; j < 4096; ++j, step /= d) {
    if (lo && hi && step * static_cast<long>(tries + 1) >= *hi - *lo) continue;
    mpz_class n;
    if (lo) {
      mpq_class q = (*lo - base0) / step;
      mpz_fdiv_q(n.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
      n += 1;
    } else {
      mpq_class q = (*hi - base0) / step;
      mpz_cdiv_q(n.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
      n -= 1;
    }
    long direction = lo ? 1 : -1;
    for (std::size_t t = 0; t < tries; ++t) {
      mpq_class c0 = base0 + mpq_class(n + direction * static_cast<long>(t)) * step;
      BlockElement v = rep + BlockElement(c0);
      if (strictly_inside(v, lower, upper) && value_ok(i, v)) return v;
    }
    if (!(lo && hi)) break;
  }
  throw GiveUp("could not place a value strictly inside an interval");
}

bool Search::place(std::size_t i, const std::vector<std::size_t>& active) {
  tick();
  if (i == size_) {
    for (std::size_t idx : active)
      if (bounds_[idx].strict()) return false;
    return true;
  }
  std::vector<std::size_t> next;
  if (fixed_[i]) {
    if (!value_ok(i, *fixed_[i]) || !advance(active, i, *fixed_[i], next)) return false;
    x_[i] = *fixed_[i];
    return place(i + 1, next);
  }

  std::optional<BlockElement> lower, upper;
  for (std::size_t idx : active) {
    const OrderBound& bound = bounds_[idx];
    const BlockElement& w = bound.w[i];
    if (bound.wants_above()) {
      if (!lower || compare_blocks(w, *lower) > 0) lower = w;
    } else {
      if (!upper || compare_blocks(w, *upper) < 0) upper = w;
    }
  }
  if (auto v = choose(i, lower, upper)) {
    x_[i] = *v;
    if (place(i + 1, {})) return true;
  }

  std::vector<BlockElement> ties;
  for (std::size_t idx : active) {
    const BlockElement& w = bounds_[idx].w[i];
    if (std::find(ties.begin(), ties.end(), w) == ties.end()) ties.push_back(w);
  }
  std::sort(ties.begin(), ties.end(),
            [](const BlockElement& a, const BlockElement& b) { return compare_blocks(a, b) < 0; });
  for (const BlockElement& w : ties) {
    if (!value_ok(i, w) || !advance(active, i, w, next)) continue;
    x_[i] = w;
    if (place(i + 1, next)) return true;
  }
  return false;
}

SolveResult Search::run() {
  SolveResult out;
  try {
    std::vector<Element> values;
    if (!preprocess(values) || !branch(0)) {
      out.status = SolveStatus::Unsat;
      out.certificate = std::move(certificate_);
      return out;
    }
  } catch (const GiveUp& e) {
    out.status = SolveStatus::Unknown;
    out.reason = e.what();
    return out;
  }
  Element witness(spec_, x_);
  if (!evaluate_conj(conj_, witness))
    throw std::logic_error("solver produced a witness that fails evaluation");
  out.status = SolveStatus::Sat;
  out.witness = std::move(witness);
  return out;
}

}  // namespace

SolveResult solve(const Conjunction& conj, const SolveOptions& options) {
  for (const Element& p : conj.params) require_same_spec(conj.group, p.spec());
  return Search(conj, options).run();
}

Conjunction combine(std::span<const Conjunction> parts) {
  if (parts.empty()) throw PreconditionError("nothing to combine");
  Conjunction out{parts.front().group, {}, {}};
  for (const Conjunction& part : parts) {
    require_same_spec(out.group, part.group);
    std::size_t offset = out.params.size();
    for (Literal lit : part.literals) {
      lit.t = lit.t.shifted(offset);
      out.literals.push_back(std::move(lit));
    }
    out.params.insert(out.params.end(), part.params.begin(), part.params.end());
  }
  return out;
}

namespace {

// Congruence literals reduced to residues of single basis coefficients:
// kx - t lies in G_alpha + mG iff every tracked coefficient of it is 0 mod
// its slot modulus. Candidates failing this filter are rejected without
// building an Element; survivors still go through evaluate_conj.
class ResidueFilter {
 public:
  ResidueFilter(const Conjunction& flat, const std::vector<Element>& gens) {
    const GroupSpec& spec = flat.group;
    steps_.resize(gens.size());
    for (std::size_t l = 0; l < flat.literals.size(); ++l) {
      const Literal& lit = flat.literals[l];
      if (lit.kind != LiteralKind::Cong && lit.kind != LiteralKind::NCong) continue;
      const Element& t = flat.params[l];
      bool exact = true;
      for (std::size_t i = 0; i < lit.alpha.s; ++i)
        exact = exact && coordinate_modulus(spec[i], lit.m) <= (std::int64_t{1} << 40);
      if (!exact) continue;
      Tracked tracked{lit.kind == LiteralKind::Cong, slots_.size(), slots_.size()};
      for (std::size_t i = 0; i < lit.alpha.s; ++i) {
        std::int64_t q = coordinate_modulus(spec[i], lit.m);
        if (q == 1) continue;
        std::set<std::uint32_t> basis;
        for (const auto& [b, c] : t[i].terms()) basis.insert(b);
        for (const Element& g : gens)
          for (const auto& [b, c] : g[i].terms()) basis.insert(b);
        for (std::uint32_t b : basis) {
          std::size_t slot = slots_.size();
          slots_.push_back({q, mod_floor(-residue(t[i].coefficient(b), q), q)});
          for (std::size_t u = 0; u < gens.size(); ++u) {
            std::int64_t r = residue(lit.k * gens[u][i].coefficient(b), q);
            if (r != 0) steps_[u].push_back({slot, r});
          }
        }
      }
      tracked.end = slots_.size();
      literals_.push_back(tracked);
    }
  }

  void add(std::size_t gen, std::int64_t lambda) {
    for (const auto& [slot, r] : steps_[gen]) {
      Slot& s = slots_[slot];
      auto shift = static_cast<__int128>(mod_floor(lambda, s.modulus)) * r;
      s.value = static_cast<std::int64_t>((s.value + shift) % s.modulus);
    }
  }

  bool passes() const {
    for (const Tracked& t : literals_) {
      bool zero = true;
      for (std::size_t s = t.begin; s < t.end && zero; ++s) zero = slots_[s].value == 0;
      if (zero != t.positive) return false;
    }
    return true;
  }

 private:
  struct Slot {
    std::int64_t modulus;
    std::int64_t value;
  };
  struct Tracked {
    bool positive;
    std::size_t begin, end;
  };

  // c in m * block iff c == 0 mod the returned modulus (1 = always).
  static std::int64_t coordinate_modulus(const Block& block, std::int64_t m) {
    switch (block.kind) {
      case BlockKind::Rat: return 1;
      case BlockKind::Int: return m;
      case BlockKind::PLocal:
      case BlockKind::PSpan: {
        int v = valuation(m, block.p);
        return v > 40 ? std::int64_t{1} << 41 : ipow(block.p, static_cast<unsigned>(v));
      }
    }
    return 1;
  }

  std::vector<Slot> slots_;
  std::vector<Tracked> literals_;
  std::vector<std::vector<std::pair<std::size_t, std::int64_t>>> steps_;
};

}  // namespace

std::optional<Element> oracle_search(const Conjunction& conj, int radius) {
  const GroupSpec& spec = conj.group;

  // Pre-evaluate every term so each candidate costs one pass over the literals.
  Conjunction flat{spec, {}, {}};
  for (const Literal& lit : conj.literals) {
    Literal copy = lit;
    flat.params.push_back(lit.t.value(conj.params, spec));
    copy.t = Term::param(flat.params.size() - 1);
    flat.literals.push_back(std::move(copy));
  }

  std::set<std::uint64_t> primes;
  for (const Literal& lit : conj.literals)
    if (lit.kind == LiteralKind::Cong || lit.kind == LiteralKind::NCong)
      for (auto [p, e] : factorize(static_cast<std::uint64_t>(lit.m))) primes.insert(p);

  std::vector<Element> gens;
  auto add = [&](const Element& g) {
    if (!g.is_zero() && std::find(gens.begin(), gens.end(), g) == gens.end()) gens.push_back(g);
  };
  for (const Element& a : conj.params) add(a);
  for (std::size_t i = 0; i < spec.size(); ++i) {
    if (spec[i].kind != BlockKind::PSpan) continue;
    std::uint32_t fresh = 0;
    for (const Element& a : conj.params) fresh = std::max(fresh, a[i].max_basis());
    add(Element::unit(spec, i, fresh + 1));
  }
  for (const Element& a : conj.params) {
    for (std::uint64_t p : primes) {
      std::int64_t factor = 1;
      for (int d = 1; d <= 2; ++d) {
        factor *= static_cast<std::int64_t>(p);
        if (is_divisible(a, factor)) add(divide_exact(a, factor));
      }
    }
  }

  ResidueFilter filter(flat, gens);
  std::vector<std::int64_t> lambda(gens.size(), 0);
  std::optional<Element> found;
  // Every vector with sum |lambda| <= radius, generators in order.
  auto walk = [&](auto&& self, std::size_t g, int budget) -> bool {
    if (g == gens.size()) {
      if (!filter.passes()) return false;
      Element x = Element::zero(spec);
      for (std::size_t u = 0; u < gens.size(); ++u)
        if (lambda[u] != 0) x += lambda[u] * gens[u];
      if (evaluate_conj(flat, x)) {
        found = std::move(x);
        return true;
      }
      return false;
    }
    if (self(self, g + 1, budget)) return true;
    for (int step = 1; step <= budget; ++step) {
      for (int sign : {1, -1}) {
        lambda[g] = sign * step;
        filter.add(g, lambda[g]);
        bool hit = self(self, g + 1, budget - step);
        filter.add(g, -lambda[g]);
        lambda[g] = 0;
        if (hit) return true;
      }
    }
    return false;
  };
  walk(walk, 0, radius);
  return found;
}

KInconsistency check_k_inconsistency(std::span<const Conjunction> instances, std::size_t k,
                                     const SolveOptions& options) {
  KInconsistency out;
  if (k == 0) throw PreconditionError("k must be positive");
  if (k > instances.size()) return out;
  std::vector<std::size_t> pick(k);
  std::iota(pick.begin(), pick.end(), 0);
  bool unknown = false;
  while (true) {
    std::vector<Conjunction> parts;
    for (std::size_t c : pick) parts.push_back(instances[c]);
    SubsetResult subset{pick, solve(combine(parts), options)};
    if (subset.result.status == SolveStatus::Sat) {
      out.verdict = Verdict::False;
      out.subsets.push_back(std::move(subset));
      return out;
    }
    unknown = unknown || subset.result.status == SolveStatus::Unknown;
    out.subsets.push_back(std::move(subset));

    std::size_t pos = k;
    while (pos > 0 && pick[pos - 1] == instances.size() - k + pos - 1) --pos;
    if (pos == 0) break;
    ++pick[pos - 1];
    for (std::size_t q = pos; q < k; ++q) pick[q] = pick[q - 1] + 1;
  }
  out.verdict = unknown ? Verdict::Unknown : Verdict::True;
  return out;
}

Verdict check_k_inconsistent(std::span<const Conjunction> instances, std::size_t k) {
  return check_k_inconsistency(instances, k).verdict;
}

}  // namespace oag
