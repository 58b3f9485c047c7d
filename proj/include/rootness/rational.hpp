#pragma once

// Exact rational numbers over arbitrary-precision integers.
//
// Centrality scores such as closeness and straightness are sums of
// reciprocals; comparing them in floating point can split true ties or
// merge distinct values. Every score comparison in this library goes
// through Rational.

#include <boost/multiprecision/cpp_int.hpp>

#include <cmath>
#include <compare>
#include <cstdint>
#include <limits>
#include <ostream>
#include <stdexcept>
#include <string>

namespace rootness {

using BigInt = boost::multiprecision::cpp_int;

class Rational {
 public:
  Rational() : num_(0), den_(1) {}
  Rational(long long value) : num_(value), den_(1) {}  // NOLINT: implicit by intent
  Rational(BigInt value) : num_(std::move(value)), den_(1) {}  // NOLINT
  Rational(BigInt num, BigInt den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_ == 0) throw std::domain_error("Rational: zero denominator");
    normalize();
  }

  /// Exact value of a finite double (every double is a dyadic rational).
  static Rational from_double(double x) {
    if (!std::isfinite(x)) throw std::domain_error("Rational: non-finite double");
    if (x == 0.0) return {};
    int exp = 0;
    double mant = std::frexp(x, &exp);  // x = mant * 2^exp, |mant| in [0.5, 1)
    constexpr int kBits = std::numeric_limits<double>::digits;
    auto scaled = static_cast<long long>(std::ldexp(mant, kBits));
    exp -= kBits;
    BigInt num = scaled;
    BigInt den = 1;
    if (exp > 0) num <<= exp;
    else den <<= -exp;
    return {std::move(num), std::move(den)};
  }

  const BigInt& numerator() const noexcept { return num_; }
  const BigInt& denominator() const noexcept { return den_; }

  bool is_integer() const noexcept { return den_ == 1; }
  int sign() const noexcept { return num_.sign(); }

  double to_double() const {
    // Converting num and den separately overflows for large operands.
    return boost::multiprecision::cpp_rational(num_, den_).convert_to<double>();
  }

  /// "num/den", or just "num" for integers.
  std::string str() const {
    if (is_integer()) return num_.str();
    return num_.str() + "/" + den_.str();
  }

  /// Fixed-point decimal with `digits` fractional digits, round half to even.
  std::string to_decimal(int digits = 3) const {
    BigInt scale = 1;
    for (int i = 0; i < digits; ++i) scale *= 10;
    BigInt abs_num = num_ < 0 ? BigInt(-num_) : num_;
    BigInt scaled = abs_num * scale;
    BigInt q = scaled / den_;
    BigInt twice_rem = (scaled % den_) * 2;
    if (twice_rem > den_ || (twice_rem == den_ && (q & 1) == 1)) q += 1;
    std::string int_part = BigInt(q / scale).str();
    std::string frac = BigInt(q % scale).str();
    std::string out = (num_ < 0 && q != 0) ? "-" : "";
    out += int_part;
    if (digits > 0) {
      out += '.';
      out.append(static_cast<std::size_t>(digits) - frac.size(), '0');
      out += frac;
    }
    return out;
  }

  Rational operator-() const {
    Rational r = *this;
    r.num_ = -r.num_;
    return r;
  }

  /// Sum over the lcm of the denominators, then reduced by gcd.
  friend Rational operator+(const Rational& a, const Rational& b) {
    if (a.den_ == b.den_) return Rational(a.num_ + b.num_, a.den_);
    BigInt l = boost::multiprecision::lcm(a.den_, b.den_);
    return Rational(a.num_ * (l / a.den_) + b.num_ * (l / b.den_), l);
  }
  friend Rational operator-(const Rational& a, const Rational& b) { return a + (-b); }
  friend Rational operator*(const Rational& a, const Rational& b) {
    return Rational(a.num_ * b.num_, a.den_ * b.den_);
  }
  friend Rational operator/(const Rational& a, const Rational& b) {
    if (b.num_ == 0) throw std::domain_error("Rational: division by zero");
    return Rational(a.num_ * b.den_, a.den_ * b.num_);
  }
  Rational& operator+=(const Rational& o) { return *this = *this + o; }
  Rational& operator-=(const Rational& o) { return *this = *this - o; }
  Rational& operator*=(const Rational& o) { return *this = *this * o; }
  Rational& operator/=(const Rational& o) { return *this = *this / o; }

  // Stored values are canonical, so structural equality is value equality.
  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    BigInt lhs = a.num_ * b.den_;
    BigInt rhs = b.num_ * a.den_;
    if (lhs < rhs) return std::strong_ordering::less;
    if (lhs > rhs) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

 private:
  void normalize() {
    if (den_ < 0) {
      num_ = -num_;
      den_ = -den_;
    }
    if (num_ == 0) {
      den_ = 1;
      return;
    }
    BigInt g = boost::multiprecision::gcd(num_, den_);
    if (g != 1) {
      num_ /= g;
      den_ /= g;
    }
  }

  BigInt num_;
  BigInt den_;
};

inline std::strong_ordering compare(const Rational& a, const Rational& b) { return a <=> b; }

/// Decimal rendering of a report-only floating value, round half to even on
/// the exact binary value of `x`.
inline std::string format_decimal(double x, int digits = 3) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  return Rational::from_double(x).to_decimal(digits);
}

}  // namespace rootness
