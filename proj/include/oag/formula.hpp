#pragma once

// Quantifier-free literals in one variable x with explicit element
// parameters, the four-way literal taxonomy, and the congruence rewrites
// that bring a positive congruence to the shape x == t mod (p^l, alpha).

#include "oag/convex.hpp"
#include "oag/group.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace oag {

// Integer combination of parameters a0, a1, ...
struct Term {
  std::map<std::size_t, std::int64_t> coeffs;

  static Term param(std::size_t index, std::int64_t coeff = 1) { return Term{{{index, coeff}}}; }

  Element value(std::span<const Element> params, const GroupSpec& spec) const;
  Term scaled(std::int64_t factor) const;
  Term shifted(std::size_t offset) const;  // renumber a_i -> a_{i+offset}
  bool is_zero() const { return coeffs.empty(); }

  bool operator==(const Term&) const = default;
};

enum class LiteralKind { Cong, NCong, Ord, InCoset, Neq, NotInCoset };
enum class Cmp { Lt, Le, Eq, Ge, Gt };
enum class LiteralType { I, II, III, IV };

// kx ~ t. `m` is used by Cong/NCong, `alpha` by Cong/NCong/InCoset/NotInCoset,
// `cmp` by Ord only.
struct Literal {
  LiteralKind kind = LiteralKind::Cong;
  std::int64_t k = 1;
  std::int64_t m = 1;
  ConvexCut alpha;
  Cmp cmp = Cmp::Eq;
  Term t;

  static Literal cong(std::int64_t k, std::int64_t m, ConvexCut alpha, Term t);
  static Literal ncong(std::int64_t k, std::int64_t m, ConvexCut alpha, Term t);
  static Literal ord(std::int64_t k, Cmp cmp, Term t);
  static Literal in_coset(std::int64_t k, ConvexCut alpha, Term t);
  static Literal neq(std::int64_t k, Term t);
  static Literal not_in_coset(std::int64_t k, ConvexCut alpha, Term t);

  bool operator==(const Literal&) const = default;
};

struct Conjunction {
  GroupSpec group;
  std::vector<Literal> literals;
  std::vector<Element> params;
};

bool evaluate(const Literal& lit, const Element& x, std::span<const Element> params);
bool evaluate_conj(const Conjunction& conj, const Element& x);

LiteralType classify(const Literal& lit);

// m as p^e, or nullopt when m is not a prime power.
std::optional<std::pair<std::uint64_t, unsigned>> prime_power(std::int64_t m);

// One congruence per prime-power factor of m, increasing prime order. Empty
// when m == 1.
std::vector<Literal> crt_split(const Literal& lit);

// kx == t mod (p^l, alpha) with p | k becomes (k/p)x == a' mod (p^{l-1}, alpha),
// given a term a' over the same bank with t - p*a' in G_alpha.
Literal reduce_k_prime(const Literal& lit, std::span<const Element> params, const Term& a_prime);

struct ReducedLiteral {
  Literal literal;
  std::vector<Element> params;  // input bank with a' appended
};
ReducedLiteral reduce_k_prime(const Literal& lit, std::vector<Element> params,
                              const Element& a_prime);

// kx == t mod (m, alpha) with gcd(k, m) = 1 becomes x == s*t mod (m, alpha),
// s*k == 1 mod m, s in [1, m).
Literal unit_normalize(const Literal& lit);

struct RewriteStep {
  std::string op;
  Literal before;
  std::vector<Literal> after;
};

struct NormalizeResult {
  std::vector<Literal> literals;
  std::vector<Element> params;
  std::vector<RewriteStep> steps;
};

// crt_split, then reduce_k_prime while p | k, then unit_normalize. A witness
// a' for each reduction comes from (in order): the term itself when all its
// coefficients are divisible by p, the next unused hint, or the parameter
// values when t lies in G_alpha + pG. Otherwise the literal is unsatisfiable
// and PreconditionError is thrown.
NormalizeResult normalize_type_I(const Literal& lit, std::vector<Element> params,
                                 std::span<const Element> hints = {});

}  // namespace oag
