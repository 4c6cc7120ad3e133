#include "oag/formula.hpp"

#include "oag/arith.hpp"

#include <numeric>

namespace oag {

Element Term::value(std::span<const Element> params, const GroupSpec& spec) const {
  Element out = Element::zero(spec);
  for (const auto& [index, c] : coeffs) {
    if (index >= params.size())
      throw UnresolvedParameter("parameter a" + std::to_string(index) + " is not bound");
    out += c * params[index];
  }
  return out;
}

Term Term::scaled(std::int64_t factor) const {
  Term out;
  if (factor == 0) return out;
  for (const auto& [index, c] : coeffs) out.coeffs.emplace(index, checked_mul(c, factor));
  return out;
}

Term Term::shifted(std::size_t offset) const {
  Term out;
  for (const auto& [index, c] : coeffs) out.coeffs.emplace(index + offset, c);
  return out;
}

namespace {

void check_k(std::int64_t k) {
  if (k == 0) throw PreconditionError("coefficient of x must be nonzero");
}

void check_m(std::int64_t m) {
  if (m < 1) throw PreconditionError("modulus must be positive");
}

Term drop_zeros(Term t) {
  std::erase_if(t.coeffs, [](const auto& kv) { return kv.second == 0; });
  return t;
}

}  // namespace

Literal Literal::cong(std::int64_t k, std::int64_t m, ConvexCut alpha, Term t) {
  check_k(k);
  check_m(m);
  return {LiteralKind::Cong, k, m, alpha, Cmp::Eq, drop_zeros(std::move(t))};
}

Literal Literal::ncong(std::int64_t k, std::int64_t m, ConvexCut alpha, Term t) {
  Literal out = cong(k, m, alpha, std::move(t));
  out.kind = LiteralKind::NCong;
  return out;
}

Literal Literal::ord(std::int64_t k, Cmp cmp, Term t) {
  check_k(k);
  return {LiteralKind::Ord, k, 1, {}, cmp, drop_zeros(std::move(t))};
}

Literal Literal::in_coset(std::int64_t k, ConvexCut alpha, Term t) {
  check_k(k);
  return {LiteralKind::InCoset, k, 1, alpha, Cmp::Eq, drop_zeros(std::move(t))};
}

Literal Literal::neq(std::int64_t k, Term t) {
  check_k(k);
  return {LiteralKind::Neq, k, 1, {}, Cmp::Eq, drop_zeros(std::move(t))};
}

Literal Literal::not_in_coset(std::int64_t k, ConvexCut alpha, Term t) {
  Literal out = in_coset(k, alpha, std::move(t));
  out.kind = LiteralKind::NotInCoset;
  return out;
}

bool evaluate(const Literal& lit, const Element& x, std::span<const Element> params) {
  if (lit.alpha.s > x.size()) throw PreconditionError("cut beyond group length");
  Element tv = lit.t.value(params, x.spec());
  Element kx = lit.k * x;
  switch (lit.kind) {
    case LiteralKind::Cong:
      return in_coset(kx - tv, lit.alpha, lit.m);
    case LiteralKind::NCong:
      return !in_coset(kx - tv, lit.alpha, lit.m);
    case LiteralKind::InCoset:
      return in_subgroup(kx - tv, lit.alpha);
    case LiteralKind::NotInCoset:
      return !in_subgroup(kx - tv, lit.alpha);
    case LiteralKind::Neq:
      return !(kx == tv);
    case LiteralKind::Ord: {
      auto c = compare(kx, tv);
      switch (lit.cmp) {
        case Cmp::Lt: return c < 0;
        case Cmp::Le: return c <= 0;
        case Cmp::Eq: return c == 0;
        case Cmp::Ge: return c >= 0;
        case Cmp::Gt: return c > 0;
      }
    }
  }
  return false;
}

bool evaluate_conj(const Conjunction& conj, const Element& x) {
  require_same_spec(conj.group, x.spec());
  for (const Literal& lit : conj.literals)
    if (!evaluate(lit, x, conj.params)) return false;
  return true;
}

LiteralType classify(const Literal& lit) {
  switch (lit.kind) {
    case LiteralKind::Cong: return LiteralType::I;
    case LiteralKind::NCong: return LiteralType::II;
    case LiteralKind::Ord:
    case LiteralKind::InCoset: return LiteralType::III;
    case LiteralKind::Neq:
    case LiteralKind::NotInCoset: return LiteralType::IV;
  }
  return LiteralType::III;
}

std::optional<std::pair<std::uint64_t, unsigned>> prime_power(std::int64_t m) {
  if (m < 2) return std::nullopt;
  auto f = factorize(static_cast<std::uint64_t>(m));
  if (f.size() != 1) return std::nullopt;
  return f.front();
}

std::vector<Literal> crt_split(const Literal& lit) {
  if (lit.kind != LiteralKind::Cong) throw PreconditionError("crt_split needs a congruence");
  std::vector<Literal> out;
  for (auto [p, e] : factorize(static_cast<std::uint64_t>(lit.m)))
    out.push_back(Literal::cong(lit.k, ipow(static_cast<std::int64_t>(p), e), lit.alpha, lit.t));
  return out;
}

Literal reduce_k_prime(const Literal& lit, std::span<const Element> params, const Term& a_prime) {
  if (lit.kind != LiteralKind::Cong) throw PreconditionError("reduce_k_prime needs a congruence");
  auto pp = prime_power(lit.m);
  if (!pp) throw PreconditionError("modulus is not a prime power");
  auto p = static_cast<std::int64_t>(pp->first);
  if (lit.k % p != 0) throw PreconditionError("p does not divide k");
  if (params.empty() && !(lit.t.is_zero() && a_prime.is_zero()))
    throw UnresolvedParameter("empty parameter bank");
  if (!params.empty()) {
    const GroupSpec& spec = params.front().spec();
    Element gap = lit.t.value(params, spec) - p * a_prime.value(params, spec);
    if (!in_subgroup(gap, lit.alpha))
      throw PreconditionError("t - p*a' is not in G_alpha");
  }
  return Literal::cong(lit.k / p, lit.m / p, lit.alpha, a_prime);
}

ReducedLiteral reduce_k_prime(const Literal& lit, std::vector<Element> params,
                              const Element& a_prime) {
  params.push_back(a_prime);
  Literal out = reduce_k_prime(lit, params, Term::param(params.size() - 1));
  return {std::move(out), std::move(params)};
}

Literal unit_normalize(const Literal& lit) {
  if (lit.kind != LiteralKind::Cong) throw PreconditionError("unit_normalize needs a congruence");
  if (std::gcd(lit.k, lit.m) != 1) throw PreconditionError("k is not a unit modulo m");
  std::int64_t s = lit.m == 1 ? 1 : mod_inverse(lit.k, lit.m);
  return Literal::cong(1, lit.m, lit.alpha, lit.t.scaled(s));
}

NormalizeResult normalize_type_I(const Literal& lit, std::vector<Element> params,
                                 std::span<const Element> hints) {
  if (lit.kind != LiteralKind::Cong) throw PreconditionError("normalize_type_I needs a congruence");
  NormalizeResult out;
  out.params = std::move(params);

  if (lit.m == 1) {
    Literal unit = unit_normalize(lit);
    if (!(unit == lit)) out.steps.push_back({"unit_normalize", lit, {unit}});
    out.literals.push_back(unit);
    return out;
  }

  std::vector<Literal> pieces = crt_split(lit);
  if (pieces.size() > 1) out.steps.push_back({"crt_split", lit, pieces});

  std::size_t next_hint = 0;
  for (Literal cur : pieces) {
    auto p = static_cast<std::int64_t>(prime_power(cur.m)->first);
    while (cur.m > 1 && cur.k % p == 0) {
      Term a_prime;
      bool by_term = true;
      for (const auto& [index, c] : cur.t.coeffs) by_term = by_term && c % p == 0;
      if (by_term) {
        for (const auto& [index, c] : cur.t.coeffs) a_prime.coeffs.emplace(index, c / p);
      } else if (next_hint < hints.size()) {
        out.params.push_back(hints[next_hint++]);
        a_prime = Term::param(out.params.size() - 1);
      } else {
        if (out.params.empty()) throw UnresolvedParameter("term needs parameters");
        const GroupSpec& spec = out.params.front().spec();
        Element tv = cur.t.value(out.params, spec);
        if (!in_coset(tv, cur.alpha, p))
          throw PreconditionError("no decomposition t = p*a' + g exists: literal is unsatisfiable");
        std::vector<BlockElement> coords(spec.size());
        for (std::size_t i = 0; i < cur.alpha.s; ++i) coords[i] = mpq_class(1, p) * tv[i];
        out.params.push_back(Element(spec, std::move(coords)));
        a_prime = Term::param(out.params.size() - 1);
      }
      Literal next = reduce_k_prime(cur, out.params, a_prime);
      out.steps.push_back({"reduce_k_prime", cur, {next}});
      cur = next;
    }
    if (cur.k != 1) {
      Literal next = unit_normalize(cur);
      out.steps.push_back({"unit_normalize", cur, {next}});
      cur = next;
    }
    out.literals.push_back(cur);
  }
  return out;
}

}  // namespace oag
