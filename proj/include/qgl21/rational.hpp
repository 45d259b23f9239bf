#pragma once

#include <compare>
#include <numeric>
#include <stdexcept>
#include <string>

namespace qgl21 {

/// Exact rational arithmetic for weight labels. Labels stay rationals until
/// they are converted to the numeric field at evaluation time, so integrality
/// and vanishing tests are exact. Kept minimal and self-contained; the label
/// magnitudes here are tiny, with __int128 intermediates guarding the
/// reductions.
class Rational {
 public:
  Rational() = default;
  Rational(long long n) : num_(n) {}  // NOLINT: implicit by design, labels are integers
  Rational(long long n, long long d) : num_(n), den_(d) { normalize(); }

  long long numerator() const { return num_; }
  long long denominator() const { return den_; }

  friend Rational operator+(const Rational& a, const Rational& b) {
    return from128(i128(a.num_) * b.den_ + i128(b.num_) * a.den_, i128(a.den_) * b.den_);
  }
  friend Rational operator-(const Rational& a, const Rational& b) {
    return from128(i128(a.num_) * b.den_ - i128(b.num_) * a.den_, i128(a.den_) * b.den_);
  }
  friend Rational operator*(const Rational& a, const Rational& b) {
    return from128(i128(a.num_) * b.num_, i128(a.den_) * b.den_);
  }
  friend Rational operator/(const Rational& a, const Rational& b) {
    if (b.num_ == 0) throw std::domain_error("rational division by zero");
    return from128(i128(a.num_) * b.den_, i128(a.den_) * b.num_);
  }
  Rational operator-() const {
    Rational r;
    r.num_ = -num_;
    r.den_ = den_;
    return r;
  }
  Rational& operator+=(const Rational& b) { return *this = *this + b; }
  Rational& operator-=(const Rational& b) { return *this = *this - b; }
  Rational& operator*=(const Rational& b) { return *this = *this * b; }
  Rational& operator/=(const Rational& b) { return *this = *this / b; }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    return i128(a.num_) * b.den_ <=> i128(b.num_) * a.den_;
  }

 private:
  using i128 = __int128;

  static Rational from128(i128 n, i128 d) {
    if (d == 0) throw std::domain_error("rational with zero denominator");
    if (d < 0) {
      n = -n;
      d = -d;
    }
    i128 g = gcd128(n < 0 ? -n : n, d);
    if (g > 1) {
      n /= g;
      d /= g;
    }
    constexpr i128 lim = 0x7FFFFFFFFFFFFFFF;
    if (n > lim || n < -lim || d > lim) throw std::overflow_error("rational overflow");
    Rational r;
    r.num_ = static_cast<long long>(n);
    r.den_ = static_cast<long long>(d);
    return r;
  }

  static i128 gcd128(i128 a, i128 b) {
    while (b != 0) {
      i128 t = a % b;
      a = b;
      b = t;
    }
    return a == 0 ? 1 : a;
  }

  void normalize() { *this = from128(num_, den_); }

  long long num_ = 0;
  long long den_ = 1;
};

inline bool is_integer(const Rational& r) { return r.denominator() == 1; }

inline bool is_nonneg_integer(const Rational& r) {
  return r.denominator() == 1 && r.numerator() >= 0;
}

/// "n" or "n/d", optionally signed. Throws std::invalid_argument on junk.
inline Rational parse_rational(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("empty rational literal");
  std::size_t slash = s.find('/');
  auto parse_ll = [&](const std::string& part) -> long long {
    std::size_t pos = 0;
    long long v = std::stoll(part, &pos);
    if (pos != part.size())
      throw std::invalid_argument("bad rational literal: " + s);
    return v;
  };
  if (slash == std::string::npos) return Rational(parse_ll(s));
  long long num = parse_ll(s.substr(0, slash));
  long long den = parse_ll(s.substr(slash + 1));
  if (den == 0) throw std::invalid_argument("zero denominator: " + s);
  return Rational(num, den);
}

inline std::string to_string(const Rational& r) {
  std::string out = std::to_string(r.numerator());
  if (r.denominator() != 1) out += "/" + std::to_string(r.denominator());
  return out;
}

/// Value of a rational that is known to be an integer; throws otherwise.
inline long long as_integer(const Rational& r) {
  if (!is_integer(r)) throw std::invalid_argument("not an integer: " + to_string(r));
  return r.numerator();
}

}  // namespace qgl21
