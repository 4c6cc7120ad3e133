#include "oag/order.hpp"

#include "oag/arith.hpp"

#include <mpfr.h>

#include <stdexcept>

namespace oag {
namespace {

constexpr unsigned long kStartBits = 64;
constexpr unsigned long kMaxBits = 1UL << 20;

class Mpfr {
 public:
  explicit Mpfr(unsigned long bits) { mpfr_init2(v_, static_cast<mpfr_prec_t>(bits)); }
  ~Mpfr() { mpfr_clear(v_); }
  Mpfr(const Mpfr&) = delete;
  Mpfr& operator=(const Mpfr&) = delete;

  mpfr_ptr get() { return v_; }
  mpfr_srcptr get() const { return v_; }

 private:
  mpfr_t v_;
};

// Directed-rounding enclosure [lo, hi] of sum c_k * rho(b_k).
void enclose_into(const BlockElement& value, unsigned long bits, Mpfr& lo, Mpfr& hi) {
  mpfr_set_zero(lo.get(), 1);
  mpfr_set_zero(hi.get(), 1);
  Mpfr c_lo(bits), c_hi(bits), s_lo(bits), s_hi(bits), t_lo(bits), t_hi(bits);
  for (const auto& [index, c] : value.terms()) {
    mpfr_set_q(c_lo.get(), c.get_mpq_t(), MPFR_RNDD);
    mpfr_set_q(c_hi.get(), c.get_mpq_t(), MPFR_RNDU);
    if (index == 0) {
      mpfr_add(lo.get(), lo.get(), c_lo.get(), MPFR_RNDD);
      mpfr_add(hi.get(), hi.get(), c_hi.get(), MPFR_RNDU);
      continue;
    }
    unsigned long q = nth_prime(index);
    mpfr_sqrt_ui(s_lo.get(), q, MPFR_RNDD);
    mpfr_sqrt_ui(s_hi.get(), q, MPFR_RNDU);
    // c has one sign, so its enclosure does too (or touches zero).
    if (c > 0) {
      mpfr_mul(t_lo.get(), c_lo.get(), s_lo.get(), MPFR_RNDD);
      mpfr_mul(t_hi.get(), c_hi.get(), s_hi.get(), MPFR_RNDU);
    } else {
      mpfr_mul(t_lo.get(), c_lo.get(), s_hi.get(), MPFR_RNDD);
      mpfr_mul(t_hi.get(), c_hi.get(), s_lo.get(), MPFR_RNDU);
    }
    mpfr_add(lo.get(), lo.get(), t_lo.get(), MPFR_RNDD);
    mpfr_add(hi.get(), hi.get(), t_hi.get(), MPFR_RNDU);
  }
}

bool rational_only(const BlockElement& value) {
  return value.terms().empty() || value.terms().rbegin()->first == 0;
}

}  // namespace

int realization_sign(const BlockElement& value) {
  if (value.is_zero()) return 0;
  if (rational_only(value)) return sgn(value.coefficient(0));
  for (unsigned long bits = kStartBits; bits <= kMaxBits; bits *= 2) {
    Mpfr lo(bits), hi(bits);
    enclose_into(value, bits, lo, hi);
    if (mpfr_sgn(lo.get()) > 0) return 1;
    if (mpfr_sgn(hi.get()) < 0) return -1;
  }
  throw std::runtime_error("order certification exceeded precision limit");
}

std::strong_ordering compare_blocks(const BlockElement& a, const BlockElement& b) {
  if (a == b) return std::strong_ordering::equal;
  int s = realization_sign(a - b);
  return s < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
}

RealEnclosure enclose(const BlockElement& value, unsigned long bits) {
  if (rational_only(value)) {
    mpq_class c = value.coefficient(0);
    return {c, c};
  }
  Mpfr lo(bits), hi(bits);
  enclose_into(value, bits, lo, hi);
  RealEnclosure out;
  mpfr_get_q(out.lo.get_mpq_t(), lo.get());
  mpfr_get_q(out.hi.get_mpq_t(), hi.get());
  return out;
}

}  // namespace oag
