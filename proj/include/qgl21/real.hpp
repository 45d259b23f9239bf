#pragma once

#include <mpfr.h>

#include <string>
#include <utility>

namespace qgl21 {

/// Arbitrary-precision binary float backed by MPFR, with per-value mantissa
/// precision in bits. Binary operations round to nearest at the larger of the
/// two operand precisions, so exact small constants (0, 1, integers) mix with
/// high-precision values without degrading them.
class Real {
 public:
  static constexpr unsigned kMinPrec = MPFR_PREC_MIN > 2 ? MPFR_PREC_MIN : 2;

  Real() { mpfr_init2(v_, 53); mpfr_set_zero(v_, 1); }
  explicit Real(unsigned prec_bits) {
    mpfr_init2(v_, prec_bits < kMinPrec ? kMinPrec : prec_bits);
    mpfr_set_zero(v_, 1);
  }
  Real(const Real& o) { mpfr_init2(v_, mpfr_get_prec(o.v_)); mpfr_set(v_, o.v_, MPFR_RNDN); }
  Real(Real&& o) noexcept { mpfr_init2(v_, 53); mpfr_swap(v_, o.v_); }
  Real& operator=(const Real& o) {
    if (this != &o) {
      mpfr_set_prec(v_, mpfr_get_prec(o.v_));
      mpfr_set(v_, o.v_, MPFR_RNDN);
    }
    return *this;
  }
  Real& operator=(Real&& o) noexcept {
    if (this != &o) mpfr_swap(v_, o.v_);
    return *this;
  }
  ~Real() { mpfr_clear(v_); }

  static Real from_long(long x, unsigned prec);
  static Real from_double(double x, unsigned prec);
  static Real from_ratio(long long num, long long den, unsigned prec);
  /// Parses a decimal literal (as produced by to_decimal) at `prec` bits.
  static Real from_decimal(const std::string& s, unsigned prec);

  unsigned precision() const { return static_cast<unsigned>(mpfr_get_prec(v_)); }
  bool is_zero() const { return mpfr_zero_p(v_) != 0; }
  bool is_negative() const { return mpfr_sgn(v_) < 0; }
  int sign() const { return mpfr_sgn(v_); }
  double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }

  /// Shortest decimal string that re-reads to the identical value at the same
  /// precision (round-to-nearest both ways).
  std::string to_decimal() const;

  friend Real operator+(const Real& a, const Real& b);
  friend Real operator-(const Real& a, const Real& b);
  friend Real operator*(const Real& a, const Real& b);
  friend Real operator/(const Real& a, const Real& b);
  Real operator-() const;

  Real& operator+=(const Real& b) { *this = *this + b; return *this; }
  Real& operator-=(const Real& b) { *this = *this - b; return *this; }
  Real& operator*=(const Real& b) { *this = *this * b; return *this; }
  Real& operator/=(const Real& b) { *this = *this / b; return *this; }

  friend bool operator==(const Real& a, const Real& b) { return mpfr_equal_p(a.v_, b.v_) != 0; }
  friend bool operator!=(const Real& a, const Real& b) { return !(a == b); }
  friend bool operator<(const Real& a, const Real& b) { return mpfr_less_p(a.v_, b.v_) != 0; }
  friend bool operator>(const Real& a, const Real& b) { return mpfr_greater_p(a.v_, b.v_) != 0; }
  friend bool operator<=(const Real& a, const Real& b) { return mpfr_lessequal_p(a.v_, b.v_) != 0; }
  friend bool operator>=(const Real& a, const Real& b) { return mpfr_greaterequal_p(a.v_, b.v_) != 0; }

  friend Real sqrt(const Real& a);
  friend Real abs(const Real& a);
  friend Real pow_int(const Real& a, long e);
  friend Real pow(const Real& base, const Real& exponent);

 private:
  mpfr_t v_;
};

}  // namespace qgl21
