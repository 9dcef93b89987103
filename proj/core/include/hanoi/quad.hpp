#pragma once

// Exact arithmetic in Q(sqrt(d)) for a fixed square-free d > 1.

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace hanoi {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// The number a + b*sqrt(d), a and b rational.
///
/// Values with different radicands never mix; doing so throws InvalidInput.
class QuadValue {
 public:
  QuadValue(Rational rational, Rational surd, long radicand);

  static QuadValue integer(const BigInt& v, long radicand) { return {Rational(v), 0, radicand}; }
  /// sqrt(d) itself.
  static QuadValue root(long radicand) { return {0, 1, radicand}; }

  const Rational& rational_part() const { return a_; }
  const Rational& surd_part() const { return b_; }
  long radicand() const { return d_; }

  QuadValue conjugate() const { return {a_, -b_, d_}; }
  /// a^2 - d*b^2
  Rational norm() const { return a_ * a_ - Rational(d_) * b_ * b_; }

  bool is_rational() const { return b_ == 0; }
  bool is_integer() const;
  /// Throws InvalidInput unless is_integer().
  BigInt to_integer() const;

  QuadValue pow(unsigned exponent) const;

  QuadValue& operator+=(const QuadValue& o);
  QuadValue& operator-=(const QuadValue& o);
  QuadValue& operator*=(const QuadValue& o);
  QuadValue& operator/=(const QuadValue& o);

  friend QuadValue operator+(QuadValue l, const QuadValue& r) { return l += r; }
  friend QuadValue operator-(QuadValue l, const QuadValue& r) { return l -= r; }
  friend QuadValue operator*(QuadValue l, const QuadValue& r) { return l *= r; }
  friend QuadValue operator/(QuadValue l, const QuadValue& r) { return l /= r; }
  QuadValue operator-() const { return {-a_, -b_, d_}; }

  friend bool operator==(const QuadValue& l, const QuadValue& r) {
    return l.d_ == r.d_ && l.a_ == r.a_ && l.b_ == r.b_;
  }

  double to_double() const;
  /// "a + b*sqrt(d)" with rationals printed as p/q.
  std::string to_string() const;

 private:
  void check_same_field(const QuadValue& o) const;

  Rational a_;
  Rational b_;
  long d_;
};

}  // namespace hanoi
