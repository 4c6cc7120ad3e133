#pragma once

// Order inside one block. Basis symbol b0 is realized as 1 and b_k (k >= 1)
// as the square root of the k-th prime, which makes the basis linearly
// independent over Q; a nonzero coefficient vector therefore has a nonzero
// real value, and adaptive-precision interval evaluation always resolves it.

#include "oag/group.hpp"

#include <gmpxx.h>

#include <compare>

namespace oag {

// Sign of sum_k c_k * rho(b_k).
int realization_sign(const BlockElement& value);

std::strong_ordering compare_blocks(const BlockElement& a, const BlockElement& b);

// Rational enclosure [lo, hi] of the realized value, at least `bits` wide
// precision. Exact for values supported on b0 alone.
struct RealEnclosure {
  mpq_class lo;
  mpq_class hi;
};
RealEnclosure enclose(const BlockElement& value, unsigned long bits = 64);

}  // namespace oag
