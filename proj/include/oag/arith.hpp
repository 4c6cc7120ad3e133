#pragma once

// Integer and p-adic helpers shared by every module.

#include <gmpxx.h>

#include <climits>
#include <cstdint>
#include <utility>
#include <vector>

namespace oag {

// Valuation of zero.
inline constexpr int kInfiniteValuation = INT_MAX;

bool is_prime(std::uint64_t n);

// nth_prime(1) == 2, nth_prime(2) == 3, ...
std::uint32_t nth_prime(std::size_t index);

// Prime factorization in increasing prime order; empty for n == 1.
std::vector<std::pair<std::uint64_t, unsigned>> factorize(std::uint64_t n);

int valuation(const mpz_class& z, std::uint64_t p);
int valuation(const mpq_class& q, std::uint64_t p);
int valuation(std::int64_t n, std::uint64_t p);

// n^e, throwing std::overflow_error past int64.
std::int64_t ipow(std::int64_t n, unsigned e);

std::int64_t checked_mul(std::int64_t a, std::int64_t b);
std::int64_t checked_add(std::int64_t a, std::int64_t b);

// Least non-negative representative of a mod m (m >= 1).
std::int64_t mod_floor(std::int64_t a, std::int64_t m);
std::int64_t mod_floor(const mpz_class& a, std::int64_t m);

// Inverse of a mod m, requires gcd(a, m) == 1. Returns value in [0, m).
std::int64_t mod_inverse(std::int64_t a, std::int64_t m);

// Image of q in Z/m for q whose denominator is a unit mod m.
std::int64_t residue(const mpq_class& q, std::int64_t m);

}  // namespace oag
