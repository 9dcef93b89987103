#include "hanoi/quad.hpp"

#include <cmath>

#include "hanoi/model.hpp"

namespace hanoi {

namespace {

bool square_free(long d) {
  for (long p = 2; p * p <= d; ++p) {
    if (d % (p * p) == 0) return false;
  }
  return true;
}

}  // namespace

QuadValue::QuadValue(Rational rational, Rational surd, long radicand)
    : a_(std::move(rational)), b_(std::move(surd)), d_(radicand) {
  if (d_ < 2 || !square_free(d_)) {
    throw InvalidInput("radicand must be a square-free integer > 1, got " + std::to_string(d_));
  }
}

bool QuadValue::is_integer() const {
  return b_ == 0 && boost::multiprecision::denominator(a_) == 1;
}

BigInt QuadValue::to_integer() const {
  if (!is_integer()) throw InvalidInput("not an integer: " + to_string());
  return boost::multiprecision::numerator(a_);
}

void QuadValue::check_same_field(const QuadValue& o) const {
  if (d_ != o.d_) {
    throw InvalidInput("mixing sqrt(" + std::to_string(d_) + ") and sqrt(" +
                       std::to_string(o.d_) + ") values");
  }
}

QuadValue& QuadValue::operator+=(const QuadValue& o) {
  check_same_field(o);
  a_ += o.a_;
  b_ += o.b_;
  return *this;
}

QuadValue& QuadValue::operator-=(const QuadValue& o) {
  check_same_field(o);
  a_ -= o.a_;
  b_ -= o.b_;
  return *this;
}

QuadValue& QuadValue::operator*=(const QuadValue& o) {
  check_same_field(o);
  Rational a = a_ * o.a_ + Rational(d_) * b_ * o.b_;
  Rational b = a_ * o.b_ + b_ * o.a_;
  a_ = std::move(a);
  b_ = std::move(b);
  return *this;
}

QuadValue& QuadValue::operator/=(const QuadValue& o) {
  check_same_field(o);
  const Rational n = o.norm();
  if (n == 0) throw InvalidInput("division by zero in Q(sqrt(" + std::to_string(d_) + "))");
  *this *= o.conjugate();
  a_ /= n;
  b_ /= n;
  return *this;
}

QuadValue QuadValue::pow(unsigned exponent) const {
  QuadValue result(1, 0, d_);
  QuadValue base = *this;
  while (exponent > 0) {
    if (exponent & 1U) result *= base;
    exponent >>= 1U;
    if (exponent > 0) base *= base;
  }
  return result;
}

double QuadValue::to_double() const {
  return a_.convert_to<double>() + b_.convert_to<double>() * std::sqrt(static_cast<double>(d_));
}

std::string QuadValue::to_string() const {
  return a_.str() + " + " + b_.str() + "*sqrt(" + std::to_string(d_) + ")";
}

}  // namespace hanoi
