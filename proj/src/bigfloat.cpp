#include "cantor/bigfloat.hpp"

#include <stdexcept>
#include <vector>

namespace cantor {

BigFloat BigFloat::from_rational(const Rational& q, mpfr_rnd_t rnd) {
  BigFloat r;
  mpfr_set_q(r.v_, q.raw().get_mpq_t(), rnd);
  return r;
}

BigFloat BigFloat::from_decimal(const std::string& text, mpfr_rnd_t rnd) {
  BigFloat r;
  if (mpfr_set_str(r.v_, text.c_str(), 10, rnd) != 0)
    throw std::invalid_argument("BigFloat: bad decimal \"" + text + "\"");
  return r;
}

Rational BigFloat::to_rational() const {
  if (is_nan() || mpfr_inf_p(v_)) throw std::invalid_argument("BigFloat: not finite");
  if (mpfr_zero_p(v_)) return Rational(0);
  mpz_class mant;
  const mpfr_exp_t e = mpfr_get_z_2exp(mant.get_mpz_t(), v_);
  mpz_class scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 2, static_cast<unsigned long>(e >= 0 ? e : -e));
  return e >= 0 ? Rational(mant * scale, 1) : Rational(mant, scale);
}

std::string BigFloat::decimal_fixed(int digits, mpfr_rnd_t rnd) const {
  std::vector<char> buf(64 + static_cast<size_t>(digits > 0 ? digits : 0));
  mpfr_snprintf(buf.data(), buf.size(), "%.*R*f", digits, rnd, v_);
  return buf.data();
}

std::string BigFloat::decimal_sig(int sig, mpfr_rnd_t rnd) const {
  std::vector<char> buf(96 + static_cast<size_t>(sig > 0 ? sig : 0));
  mpfr_snprintf(buf.data(), buf.size(), "%.*R*g", sig, rnd, v_);
  return buf.data();
}

BigFloat BigFloat::ceil_at_decimal(int digits) const {
  if (digits < 0) throw std::invalid_argument("ceil_at_decimal: digits must be >= 0");
  mpz_class scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(digits));
  BigFloat t;
  mpfr_mul_z(t.v_, v_, scale.get_mpz_t(), MPFR_RNDU);
  mpfr_ceil(t.v_, t.v_);
  BigFloat r;
  mpfr_div_z(r.v_, t.v_, scale.get_mpz_t(), MPFR_RNDU);
  return r;
}

Enclosure::Enclosure(BigFloat lo, BigFloat hi) : lo_(std::move(lo)), hi_(std::move(hi)) {
  if (lo_.is_nan() || hi_.is_nan() || lo_ > hi_)
    throw std::invalid_argument("Enclosure: bad endpoints");
}

Enclosure Enclosure::from_rational(const Rational& q) {
  return Enclosure(BigFloat::from_rational(q, MPFR_RNDD), BigFloat::from_rational(q, MPFR_RNDU));
}

Enclosure Enclosure::from_integer(long v) {
  BigFloat b;
  mpfr_set_si(b.raw(), v, MPFR_RNDN);  // exact
  return Enclosure(b, b);
}

BigFloat Enclosure::mid() const {
  BigFloat m;
  mpfr_add(m.raw(), lo_.raw(), hi_.raw(), MPFR_RNDN);
  mpfr_div_2ui(m.raw(), m.raw(), 1, MPFR_RNDN);
  return m;
}

BigFloat Enclosure::width() const {
  BigFloat w;
  mpfr_sub(w.raw(), hi_.raw(), lo_.raw(), MPFR_RNDU);
  return w;
}

bool Enclosure::contains(const Rational& q) const {
  return mpfr_cmp_q(lo_.raw(), q.raw().get_mpq_t()) <= 0 &&
         mpfr_cmp_q(hi_.raw(), q.raw().get_mpq_t()) >= 0;
}

Enclosure operator+(const Enclosure& a, const Enclosure& b) {
  BigFloat lo, hi;
  mpfr_add(lo.raw(), a.lo_.raw(), b.lo_.raw(), MPFR_RNDD);
  mpfr_add(hi.raw(), a.hi_.raw(), b.hi_.raw(), MPFR_RNDU);
  return Enclosure(std::move(lo), std::move(hi));
}

Enclosure operator-(const Enclosure& a, const Enclosure& b) {
  BigFloat lo, hi;
  mpfr_sub(lo.raw(), a.lo_.raw(), b.hi_.raw(), MPFR_RNDD);
  mpfr_sub(hi.raw(), a.hi_.raw(), b.lo_.raw(), MPFR_RNDU);
  return Enclosure(std::move(lo), std::move(hi));
}

namespace {

void min4(mpfr_ptr out, mpfr_srcptr a, mpfr_srcptr b, mpfr_srcptr c, mpfr_srcptr d) {
  mpfr_min(out, a, b, MPFR_RNDD);
  mpfr_min(out, out, c, MPFR_RNDD);
  mpfr_min(out, out, d, MPFR_RNDD);
}

void max4(mpfr_ptr out, mpfr_srcptr a, mpfr_srcptr b, mpfr_srcptr c, mpfr_srcptr d) {
  mpfr_max(out, a, b, MPFR_RNDU);
  mpfr_max(out, out, c, MPFR_RNDU);
  mpfr_max(out, out, d, MPFR_RNDU);
}

}  // namespace

Enclosure operator*(const Enclosure& a, const Enclosure& b) {
  BigFloat c1, c2, c3, c4, lo, hi;
  mpfr_mul(c1.raw(), a.lo_.raw(), b.lo_.raw(), MPFR_RNDD);
  mpfr_mul(c2.raw(), a.lo_.raw(), b.hi_.raw(), MPFR_RNDD);
  mpfr_mul(c3.raw(), a.hi_.raw(), b.lo_.raw(), MPFR_RNDD);
  mpfr_mul(c4.raw(), a.hi_.raw(), b.hi_.raw(), MPFR_RNDD);
  min4(lo.raw(), c1.raw(), c2.raw(), c3.raw(), c4.raw());
  mpfr_mul(c1.raw(), a.lo_.raw(), b.lo_.raw(), MPFR_RNDU);
  mpfr_mul(c2.raw(), a.lo_.raw(), b.hi_.raw(), MPFR_RNDU);
  mpfr_mul(c3.raw(), a.hi_.raw(), b.lo_.raw(), MPFR_RNDU);
  mpfr_mul(c4.raw(), a.hi_.raw(), b.hi_.raw(), MPFR_RNDU);
  max4(hi.raw(), c1.raw(), c2.raw(), c3.raw(), c4.raw());
  return Enclosure(std::move(lo), std::move(hi));
}

Enclosure operator/(const Enclosure& a, const Enclosure& b) {
  if (b.lo_.sign() <= 0 && b.hi_.sign() >= 0)
    throw std::invalid_argument("Enclosure: division by interval containing zero");
  BigFloat c1, c2, c3, c4, lo, hi;
  mpfr_div(c1.raw(), a.lo_.raw(), b.lo_.raw(), MPFR_RNDD);
  mpfr_div(c2.raw(), a.lo_.raw(), b.hi_.raw(), MPFR_RNDD);
  mpfr_div(c3.raw(), a.hi_.raw(), b.lo_.raw(), MPFR_RNDD);
  mpfr_div(c4.raw(), a.hi_.raw(), b.hi_.raw(), MPFR_RNDD);
  min4(lo.raw(), c1.raw(), c2.raw(), c3.raw(), c4.raw());
  mpfr_div(c1.raw(), a.lo_.raw(), b.lo_.raw(), MPFR_RNDU);
  mpfr_div(c2.raw(), a.lo_.raw(), b.hi_.raw(), MPFR_RNDU);
  mpfr_div(c3.raw(), a.hi_.raw(), b.lo_.raw(), MPFR_RNDU);
  mpfr_div(c4.raw(), a.hi_.raw(), b.hi_.raw(), MPFR_RNDU);
  max4(hi.raw(), c1.raw(), c2.raw(), c3.raw(), c4.raw());
  return Enclosure(std::move(lo), std::move(hi));
}

Enclosure Enclosure::mul_rational(const Rational& q) const {
  BigFloat lo, hi;
  if (q.sign() >= 0) {
    mpfr_mul_q(lo.raw(), lo_.raw(), q.raw().get_mpq_t(), MPFR_RNDD);
    mpfr_mul_q(hi.raw(), hi_.raw(), q.raw().get_mpq_t(), MPFR_RNDU);
  } else {
    mpfr_mul_q(lo.raw(), hi_.raw(), q.raw().get_mpq_t(), MPFR_RNDD);
    mpfr_mul_q(hi.raw(), lo_.raw(), q.raw().get_mpq_t(), MPFR_RNDU);
  }
  return Enclosure(std::move(lo), std::move(hi));
}

Enclosure Enclosure::div_rational(const Rational& q) const {
  if (q.is_zero()) throw std::invalid_argument("Enclosure: division by zero rational");
  return mul_rational(q.reciprocal());
}

Enclosure Enclosure::add_rational(const Rational& q) const {
  BigFloat lo, hi;
  mpfr_add_q(lo.raw(), lo_.raw(), q.raw().get_mpq_t(), MPFR_RNDD);
  mpfr_add_q(hi.raw(), hi_.raw(), q.raw().get_mpq_t(), MPFR_RNDU);
  return Enclosure(std::move(lo), std::move(hi));
}

Enclosure Enclosure::sqrt(const Enclosure& a) {
  if (a.lo_.sign() < 0) throw std::invalid_argument("Enclosure: sqrt of negative interval");
  BigFloat lo, hi;
  mpfr_sqrt(lo.raw(), a.lo_.raw(), MPFR_RNDD);
  mpfr_sqrt(hi.raw(), a.hi_.raw(), MPFR_RNDU);
  return Enclosure(std::move(lo), std::move(hi));
}

Enclosure Enclosure::log(const Enclosure& a) {
  if (a.lo_.sign() <= 0) throw std::invalid_argument("Enclosure: log requires a positive interval");
  BigFloat lo, hi;
  mpfr_log(lo.raw(), a.lo_.raw(), MPFR_RNDD);
  mpfr_log(hi.raw(), a.hi_.raw(), MPFR_RNDU);
  return Enclosure(std::move(lo), std::move(hi));
}

Enclosure Enclosure::exp(const Enclosure& a) {
  BigFloat lo, hi;
  mpfr_exp(lo.raw(), a.lo_.raw(), MPFR_RNDD);
  mpfr_exp(hi.raw(), a.hi_.raw(), MPFR_RNDU);
  return Enclosure(std::move(lo), std::move(hi));
}

std::string Enclosure::str(int sig) const {
  return "[" + lo_.decimal_sig(sig, MPFR_RNDD) + ", " + hi_.decimal_sig(sig, MPFR_RNDU) + "]";
}

}  // namespace cantor
