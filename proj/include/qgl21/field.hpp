#pragma once

#include <cmath>
#include <cstdio>
#include <string>

#include "qgl21/rational.hpp"
#include "qgl21/real.hpp"

namespace qgl21 {

/// Numeric field the matrices live over. Two instantiations: `double` for the
/// fast smoke-test mode and `Real` (MPFR) for arbitrary precision. The field
/// object carries the working precision and converts exact data (integers,
/// rationals, decimal strings) into scalars.
template <class S>
struct Field;

template <>
struct Field<double> {
  unsigned precision = 53;

  explicit Field(unsigned bits = 53) : precision(bits) {}

  double zero() const { return 0.0; }
  double one() const { return 1.0; }
  double from_long(long x) const { return static_cast<double>(x); }
  double from_rational(const Rational& r) const {
    return static_cast<double>(r.numerator()) / static_cast<double>(r.denominator());
  }
  double from_decimal(const std::string& s) const {
    std::size_t pos = 0;
    double v = std::stod(s, &pos);
    if (pos != s.size()) throw std::invalid_argument("bad decimal literal: " + s);
    return v;
  }
  static std::string to_decimal(double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
  }
};

template <>
struct Field<Real> {
  unsigned precision = 128;

  explicit Field(unsigned bits = 128) : precision(bits) {}

  Real zero() const { return Real(precision); }
  Real one() const { return Real::from_long(1, precision); }
  Real from_long(long x) const { return Real::from_long(x, precision); }
  Real from_rational(const Rational& r) const {
    return Real::from_ratio(r.numerator(), r.denominator(), precision);
  }
  Real from_decimal(const std::string& s) const { return Real::from_decimal(s, precision); }
  static std::string to_decimal(const Real& x) { return x.to_decimal(); }
};

// Generic scalar helpers; the Real overloads come from real.hpp via ADL.
inline double pow_int(double a, long e) { return std::pow(a, static_cast<double>(e)); }
inline bool scalar_is_zero(double x) { return x == 0.0; }
inline bool scalar_is_zero(const Real& x) { return x.is_zero(); }
inline double scalar_to_double(double x) { return x; }
inline double scalar_to_double(const Real& x) { return x.to_double(); }

using std::abs;
using std::pow;
using std::sqrt;

}  // namespace qgl21
