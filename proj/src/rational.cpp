#include "cantor/rational.hpp"

#include <mpfr.h>

#include <cctype>
#include <stdexcept>

namespace cantor {

Rational::Rational(long num, long den) {
  if (den == 0) throw std::invalid_argument("Rational: zero denominator");
  q_ = mpq_class(num, den);
  q_.canonicalize();
}

Rational::Rational(const mpz_class& num, const mpz_class& den) {
  if (den == 0) throw std::invalid_argument("Rational: zero denominator");
  q_ = mpq_class(num, den);
  q_.canonicalize();
}

Rational::Rational(mpq_class q) : q_(std::move(q)) {
  if (q_.get_den() == 0) throw std::invalid_argument("Rational: zero denominator");
  q_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
  auto digits_only = [](std::string_view s) {
    if (s.empty()) return false;
    for (char c : s)
      if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
  };
  std::string_view num = text;
  std::string_view den = "1";
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    num = text.substr(0, slash);
    den = text.substr(slash + 1);
  }
  bool neg = false;
  if (!num.empty() && (num.front() == '-' || num.front() == '+')) {
    neg = num.front() == '-';
    num.remove_prefix(1);
  }
  if (!digits_only(num) || !digits_only(den))
    throw std::invalid_argument("Rational: expected \"p\" or \"p/q\", got \"" + std::string(text) + "\"");
  mpz_class n(std::string(num), 10), d(std::string(den), 10);
  if (d == 0) throw std::invalid_argument("Rational: zero denominator in \"" + std::string(text) + "\"");
  if (neg) n = -n;
  return Rational(n, d);
}

Rational Rational::abs() const {
  return sign() < 0 ? Rational(mpq_class(-q_)) : *this;
}

Rational Rational::reciprocal() const {
  if (is_zero()) throw std::invalid_argument("Rational: reciprocal of zero");
  return Rational(mpq_class(1 / q_));
}

Rational operator/(const Rational& a, const Rational& b) {
  if (b.is_zero()) throw std::invalid_argument("Rational: division by zero");
  return Rational(mpq_class(a.q_ / b.q_));
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw std::invalid_argument("Rational: division by zero");
  q_ /= o.q_;
  return *this;
}

std::string Rational::str() const {
  if (is_integer()) return q_.get_num().get_str();
  return q_.get_str();
}

std::string Rational::decimal(int sig) const {
  if (sig < 1) sig = 1;
  mpfr_t t;
  mpfr_init2(t, 128);
  mpfr_set_q(t, q_.get_mpq_t(), MPFR_RNDN);
  char buf[160];
  mpfr_snprintf(buf, sizeof buf, "%.*R*g", sig, MPFR_RNDN, t);
  mpfr_clear(t);
  return buf;
}

mpz_class int_pow(unsigned long base, unsigned long exp) {
  mpz_class r;
  mpz_ui_pow_ui(r.get_mpz_t(), base, exp);
  return r;
}

Rational rational_pow(const Rational& base, long exp) {
  if (exp == 0) return Rational(1);
  if (base.is_zero() && exp < 0) throw std::invalid_argument("rational_pow: 0 to a negative power");
  mpz_class n, d;
  unsigned long e = exp < 0 ? -static_cast<unsigned long>(exp) : exp;
  mpz_pow_ui(n.get_mpz_t(), base.num().get_mpz_t(), e);
  mpz_pow_ui(d.get_mpz_t(), base.den().get_mpz_t(), e);
  return exp < 0 ? Rational(d, n) : Rational(n, d);
}

}  // namespace cantor
