#include "oag/arith.hpp"

#include <mutex>
#include <numeric>
#include <stdexcept>

namespace oag {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t d = 3; d * d <= n; d += 2)
    if (n % d == 0) return false;
  return true;
}

std::uint32_t nth_prime(std::size_t index) {
  if (index == 0) throw std::invalid_argument("nth_prime is 1-based");
  static std::mutex mutex;
  static std::vector<std::uint32_t> primes{2};
  std::lock_guard lock(mutex);
  while (primes.size() < index) {
    std::uint32_t candidate = primes.back() + 1;
    while (!is_prime(candidate)) ++candidate;
    primes.push_back(candidate);
  }
  return primes[index - 1];
}

std::vector<std::pair<std::uint64_t, unsigned>> factorize(std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("cannot factor 0");
  std::vector<std::pair<std::uint64_t, unsigned>> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    unsigned e = 0;
    while (n % d == 0) {
      n /= d;
      ++e;
    }
    if (e > 0) out.emplace_back(d, e);
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

int valuation(const mpz_class& z, std::uint64_t p) {
  if (z == 0) return kInfiniteValuation;
  mpz_class prime(static_cast<unsigned long>(p));
  mpz_class rest(z);
  return static_cast<int>(mpz_remove(rest.get_mpz_t(), rest.get_mpz_t(), prime.get_mpz_t()));
}

int valuation(const mpq_class& q, std::uint64_t p) {
  if (q == 0) return kInfiniteValuation;
  return valuation(q.get_num(), p) - valuation(q.get_den(), p);
}

int valuation(std::int64_t n, std::uint64_t p) {
  return valuation(mpz_class(static_cast<long>(n)), p);
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t out = 0;
  if (__builtin_mul_overflow(a, b, &out)) throw std::overflow_error("integer overflow");
  return out;
}

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t out = 0;
  if (__builtin_add_overflow(a, b, &out)) throw std::overflow_error("integer overflow");
  return out;
}

std::int64_t ipow(std::int64_t n, unsigned e) {
  std::int64_t out = 1;
  for (unsigned i = 0; i < e; ++i) out = checked_mul(out, n);
  return out;
}

std::int64_t mod_floor(std::int64_t a, std::int64_t m) {
  std::int64_t r = a % m;
  return r < 0 ? r + m : r;
}

std::int64_t mod_floor(const mpz_class& a, std::int64_t m) {
  mpz_class r;
  mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), mpz_class(static_cast<long>(m)).get_mpz_t());
  return r.get_si();
}

std::int64_t mod_inverse(std::int64_t a, std::int64_t m) {
  if (m == 1) return 0;
  mpz_class inv;
  mpz_class base(static_cast<long>(mod_floor(a, m)));
  mpz_class mod(static_cast<long>(m));
  if (mpz_invert(inv.get_mpz_t(), base.get_mpz_t(), mod.get_mpz_t()) == 0)
    throw std::domain_error("no modular inverse");
  return inv.get_si();
}

std::int64_t residue(const mpq_class& q, std::int64_t m) {
  if (m == 1) return 0;
  std::int64_t num = mod_floor(q.get_num(), m);
  std::int64_t den = mod_floor(q.get_den(), m);
  std::int64_t inv = mod_inverse(den, m);
  return static_cast<std::int64_t>((static_cast<__int128>(num) * inv) % m);
}

}  // namespace oag
