#pragma once

#include <mpfr.h>

#include <string>

#include "cantor/rational.hpp"

namespace cantor {

// Working precision for every certified float. 256 bits leaves well over 128
// fractional bits for the O(1)-magnitude values this engine produces.
inline constexpr mpfr_prec_t kWorkingPrecision = 256;

// RAII value wrapper over mpfr_t at the engine working precision. Rounding is
// always explicit at the call site.
class BigFloat {
 public:
  BigFloat() { mpfr_init2(v_, kWorkingPrecision); mpfr_set_zero(v_, 1); }
  explicit BigFloat(double d) : BigFloat() { mpfr_set_d(v_, d, MPFR_RNDN); }
  BigFloat(const BigFloat& o) : BigFloat() { mpfr_set(v_, o.v_, MPFR_RNDN); }
  BigFloat(BigFloat&& o) noexcept : BigFloat() { mpfr_swap(v_, o.v_); }
  BigFloat& operator=(BigFloat o) noexcept {
    mpfr_swap(v_, o.v_);
    return *this;
  }
  ~BigFloat() { mpfr_clear(v_); }

  static BigFloat from_rational(const Rational& q, mpfr_rnd_t rnd);
  // Decimal text, e.g. "1.32133227904"; throws on garbage.
  static BigFloat from_decimal(const std::string& text, mpfr_rnd_t rnd);

  double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
  // The dyadic value held is exact as a rational.
  Rational to_rational() const;

  // Fixed-point decimal with the given digits after the point.
  std::string decimal_fixed(int digits, mpfr_rnd_t rnd) const;
  // Significant-digit rendering ("%g" style).
  std::string decimal_sig(int sig, mpfr_rnd_t rnd) const;

  // Smallest multiple of 10^-digits that is >= *this.
  BigFloat ceil_at_decimal(int digits) const;

  int sign() const { return mpfr_sgn(v_); }
  bool is_nan() const { return mpfr_nan_p(v_) != 0; }

  mpfr_ptr raw() { return v_; }
  mpfr_srcptr raw() const { return v_; }

  friend bool operator<(const BigFloat& a, const BigFloat& b) { return mpfr_cmp(a.v_, b.v_) < 0; }
  friend bool operator<=(const BigFloat& a, const BigFloat& b) { return mpfr_cmp(a.v_, b.v_) <= 0; }
  friend bool operator>(const BigFloat& a, const BigFloat& b) { return mpfr_cmp(a.v_, b.v_) > 0; }
  friend bool operator>=(const BigFloat& a, const BigFloat& b) { return mpfr_cmp(a.v_, b.v_) >= 0; }
  friend bool operator==(const BigFloat& a, const BigFloat& b) { return mpfr_cmp(a.v_, b.v_) == 0; }

 private:
  mpfr_t v_;
};

// Certified interval [lo, hi]: every operation rounds lo down and hi up.
class Enclosure {
 public:
  Enclosure() : lo_(), hi_() {}
  Enclosure(BigFloat lo, BigFloat hi);

  static Enclosure from_rational(const Rational& q);
  static Enclosure from_integer(long v);
  static Enclosure point(const BigFloat& v) { return Enclosure(v, v); }

  const BigFloat& lo() const { return lo_; }
  const BigFloat& hi() const { return hi_; }
  BigFloat mid() const;
  BigFloat width() const;
  double to_double() const { return mid().to_double(); }

  bool strictly_positive() const { return lo_.sign() > 0; }
  bool contains(const Rational& q) const;

  // True only when provable from the enclosure endpoints.
  bool certainly_less(const Enclosure& o) const { return hi_ < o.lo_; }

  friend Enclosure operator+(const Enclosure& a, const Enclosure& b);
  friend Enclosure operator-(const Enclosure& a, const Enclosure& b);
  friend Enclosure operator*(const Enclosure& a, const Enclosure& b);
  friend Enclosure operator/(const Enclosure& a, const Enclosure& b);  // divisor must exclude 0

  Enclosure mul_rational(const Rational& q) const;
  Enclosure div_rational(const Rational& q) const;  // q != 0
  Enclosure add_rational(const Rational& q) const;

  static Enclosure sqrt(const Enclosure& a);  // requires lo >= 0
  static Enclosure log(const Enclosure& a);   // requires lo > 0
  static Enclosure exp(const Enclosure& a);

  std::string str(int sig = 20) const;  // "[lo, hi]" for diagnostics

 private:
  BigFloat lo_, hi_;
};

}  // namespace cantor
