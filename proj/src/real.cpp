#include "qgl21/real.hpp"

#include <cstdlib>
#include <stdexcept>

namespace qgl21 {

namespace {
mpfr_prec_t clamp_prec(unsigned p) {
  return static_cast<mpfr_prec_t>(p < Real::kMinPrec ? Real::kMinPrec : p);
}
mpfr_prec_t max_prec(const mpfr_t a, const mpfr_t b) {
  mpfr_prec_t pa = mpfr_get_prec(a), pb = mpfr_get_prec(b);
  return pa > pb ? pa : pb;
}
}  // namespace

Real Real::from_long(long x, unsigned prec) {
  Real r(clamp_prec(prec));
  mpfr_set_si(r.v_, x, MPFR_RNDN);
  return r;
}

Real Real::from_double(double x, unsigned prec) {
  Real r(clamp_prec(prec));
  mpfr_set_d(r.v_, x, MPFR_RNDN);
  return r;
}

Real Real::from_ratio(long long num, long long den, unsigned prec) {
  if (den == 0) throw std::invalid_argument("Real::from_ratio: zero denominator");
  Real n = from_long(static_cast<long>(num), prec);
  Real d = from_long(static_cast<long>(den), prec);
  return n / d;
}

Real Real::from_decimal(const std::string& s, unsigned prec) {
  Real r(clamp_prec(prec));
  if (mpfr_set_str(r.v_, s.c_str(), 10, MPFR_RNDN) != 0)
    throw std::invalid_argument("bad decimal literal: " + s);
  return r;
}

std::string Real::to_decimal() const {
  if (mpfr_zero_p(v_)) return "0";
  if (!mpfr_number_p(v_)) throw std::domain_error("non-finite value in to_decimal");
  mpfr_exp_t e = 0;
  char* raw = mpfr_get_str(nullptr, &e, 10, 0, v_, MPFR_RNDN);
  if (!raw) throw std::runtime_error("mpfr_get_str failed");
  std::string digits(raw);
  mpfr_free_str(raw);
  std::string sign;
  if (!digits.empty() && digits[0] == '-') {
    sign = "-";
    digits.erase(digits.begin());
  }
  // value = 0.digits * 10^e  ->  d.igits e (e-1)
  std::string out = sign + digits.substr(0, 1);
  if (digits.size() > 1) out += "." + digits.substr(1);
  out += "e" + std::to_string(static_cast<long long>(e - 1));
  return out;
}

Real operator+(const Real& a, const Real& b) {
  Real r(static_cast<unsigned>(max_prec(a.v_, b.v_)));
  mpfr_add(r.v_, a.v_, b.v_, MPFR_RNDN);
  return r;
}

Real operator-(const Real& a, const Real& b) {
  Real r(static_cast<unsigned>(max_prec(a.v_, b.v_)));
  mpfr_sub(r.v_, a.v_, b.v_, MPFR_RNDN);
  return r;
}

Real operator*(const Real& a, const Real& b) {
  Real r(static_cast<unsigned>(max_prec(a.v_, b.v_)));
  mpfr_mul(r.v_, a.v_, b.v_, MPFR_RNDN);
  return r;
}

Real operator/(const Real& a, const Real& b) {
  Real r(static_cast<unsigned>(max_prec(a.v_, b.v_)));
  mpfr_div(r.v_, a.v_, b.v_, MPFR_RNDN);
  return r;
}

Real Real::operator-() const {
  Real r(precision());
  mpfr_neg(r.v_, v_, MPFR_RNDN);
  return r;
}

Real sqrt(const Real& a) {
  Real r(a.precision());
  mpfr_sqrt(r.v_, a.v_, MPFR_RNDN);
  return r;
}

Real abs(const Real& a) {
  Real r(a.precision());
  mpfr_abs(r.v_, a.v_, MPFR_RNDN);
  return r;
}

Real pow_int(const Real& a, long e) {
  Real r(a.precision());
  mpfr_pow_si(r.v_, a.v_, e, MPFR_RNDN);
  return r;
}

Real pow(const Real& base, const Real& exponent) {
  Real r(static_cast<unsigned>(max_prec(base.v_, exponent.v_)));
  mpfr_pow(r.v_, base.v_, exponent.v_, MPFR_RNDN);
  return r;
}

}  // namespace qgl21
