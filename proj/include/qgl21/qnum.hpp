#pragma once

#include "qgl21/params.hpp"
#include "qgl21/rational.hpp"

namespace qgl21 {

/// base^x for exact rational x; integer exponents go through pow_int so that
/// p = q collapses (q/p)^x to exactly 1.
template <class S>
S scalar_pow(const S& base, const Rational& x, const Field<S>& f) {
  if (is_integer(x)) return pow_int(base, static_cast<long>(x.numerator()));
  return pow(base, f.from_rational(x));
}

/// Two-parameter quantum number [x] = (q^x - p^{-x}) / (q - p^{-1}).
template <class S>
S bracket(const Rational& x, const Params<S>& params) {
  Field<S> f = params.field();
  S num = scalar_pow(params.q, x, f) - scalar_pow(params.p, -x, f);
  S den = params.q - pow_int(params.p, -1);
  return num / den;
}

/// [x] with an exponent that is already a scalar (used when eigenvalues come
/// from stored matrices rather than exact labels).
template <class S>
S bracket_scalar(const S& x, const Params<S>& params) {
  S num = pow(params.q, x) - pow(params.p, -x);
  S den = params.q - pow_int(params.p, -1);
  return num / den;
}

/// (q/p)^x for exact rational x.
template <class S>
S ratio_pow(const Rational& x, const Params<S>& params) {
  return scalar_pow(params.q / params.p, x, params.field());
}

template <class S>
S ratio_pow_scalar(const S& x, const Params<S>& params) {
  return pow(params.q / params.p, x);
}

/// (p/q)^x, the reciprocal-ratio power that prefixes the odd matrix elements.
template <class S>
S pq_pow(const Rational& x, const Params<S>& params) {
  return ratio_pow(-x, params);
}

/// [n]! = [n][n-1]...[1], with [0]! = 1. Requires integer n >= 0.
template <class S>
S bracket_factorial(const Rational& n, const Params<S>& params) {
  if (!is_nonneg_integer(n))
    throw std::invalid_argument("bracket factorial needs a nonnegative integer");
  S out = params.field().one();
  for (long long k = 1; k <= n.numerator(); ++k) out *= bracket(Rational(k), params);
  return out;
}

}  // namespace qgl21
