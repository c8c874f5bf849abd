#pragma once

#include <gmpxx.h>

#include <iosfwd>
#include <string>
#include <utility>

#include "qrank/error.hpp"

namespace qrank {

using Integer = mpz_class;

/// Exact rational number, always in canonical form: numerator and
/// denominator coprime, denominator strictly positive. Backed by GMP so
/// coefficient growth never overflows.
class Rational {
 public:
  Rational() : q_(0) {}
  Rational(int n) : q_(n) {}
  Rational(long n) : q_(n) {}
  Rational(long long n) : q_(Integer(std::to_string(n))) {}
  Rational(const Integer& n) : q_(n) {}

  Rational(const Integer& num, const Integer& den) : q_(num, den) {
    if (den == 0) throw Error(ErrorKind::invalid_parameter, "rational with zero denominator");
    q_.canonicalize();
  }
  Rational(long num, long den) : Rational(Integer(num), Integer(den)) {}

  Integer numerator() const { return q_.get_num(); }
  Integer denominator() const { return q_.get_den(); }

  bool is_zero() const { return sgn(q_) == 0; }
  bool is_integer() const { return q_.get_den() == 1; }
  int sign() const { return sgn(q_); }

  Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
  Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
  Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
  Rational& operator/=(const Rational& o) {
    if (o.is_zero()) throw Error(ErrorKind::invalid_parameter, "rational division by zero");
    q_ /= o.q_;
    return *this;
  }

  friend Rational operator+(Rational a, const Rational& b) { a += b; return a; }
  friend Rational operator-(Rational a, const Rational& b) { a -= b; return a; }
  friend Rational operator*(Rational a, const Rational& b) { a *= b; return a; }
  friend Rational operator/(Rational a, const Rational& b) { a /= b; return a; }
  friend Rational operator-(const Rational& a) {
    Rational r;
    r.q_ = -a.q_;
    return r;
  }

  friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
  friend bool operator!=(const Rational& a, const Rational& b) { return a.q_ != b.q_; }
  friend bool operator<(const Rational& a, const Rational& b) { return a.q_ < b.q_; }
  friend bool operator<=(const Rational& a, const Rational& b) { return a.q_ <= b.q_; }
  friend bool operator>(const Rational& a, const Rational& b) { return a.q_ > b.q_; }
  friend bool operator>=(const Rational& a, const Rational& b) { return a.q_ >= b.q_; }

  /// "n" when integral, "n/d" otherwise.
  std::string str() const {
    if (is_integer()) return q_.get_num().get_str();
    return q_.get_num().get_str() + "/" + q_.get_den().get_str();
  }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r);

 private:
  mpq_class q_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

}  // namespace qrank
