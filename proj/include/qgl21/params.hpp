#pragma once

#include <stdexcept>
#include <string>

#include "qgl21/field.hpp"

namespace qgl21 {

constexpr unsigned kDefaultPrecisionBits = 128;
constexpr double kDefaultToleranceHighPrec = 1e-25;
constexpr double kDefaultToleranceDouble = 1e-10;

inline double default_tolerance(unsigned precision_bits) {
  return precision_bits > 53 ? kDefaultToleranceHighPrec : kDefaultToleranceDouble;
}

/// Deformation parameters plus the numeric-precision configuration.
/// Valid iff p > 0, q > 0, p*q != 1 (the bracket denominator q - 1/p must not
/// vanish), precision >= 53 bits and tolerance > 0.
template <class S>
struct Params {
  S p;
  S q;
  unsigned precision = kDefaultPrecisionBits;
  double tolerance = kDefaultToleranceHighPrec;

  Field<S> field() const { return Field<S>(precision); }

  void validate() const {
    Field<S> f(precision);
    if (!(p > f.zero())) throw std::invalid_argument("p must be positive");
    if (!(q > f.zero())) throw std::invalid_argument("q must be positive");
    if (p * q == f.one())
      throw std::invalid_argument("p*q = 1 makes the bracket denominator vanish");
    if (precision < 53) throw std::invalid_argument("precision must be at least 53 bits");
    if (!(tolerance > 0)) throw std::invalid_argument("tolerance must be positive");
  }

  static Params make(const std::string& p_dec, const std::string& q_dec,
                     unsigned precision_bits = kDefaultPrecisionBits,
                     double tol = -1.0) {
    Field<S> f(precision_bits);
    Params out{f.from_decimal(p_dec), f.from_decimal(q_dec), precision_bits,
               tol > 0 ? tol : default_tolerance(precision_bits)};
    out.validate();
    return out;
  }

  static Params make(double p_val, double q_val,
                     unsigned precision_bits = kDefaultPrecisionBits,
                     double tol = -1.0) {
    Field<S> f(precision_bits);
    Params out{f.from_decimal(Field<double>::to_decimal(p_val)),
               f.from_decimal(Field<double>::to_decimal(q_val)), precision_bits,
               tol > 0 ? tol : default_tolerance(precision_bits)};
    out.validate();
    return out;
  }
};

}  // namespace qgl21
