#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <utility>

namespace apollon {

using Int = mpz_class;

// Exact rational. Always stored reduced with positive denominator, so
// structural equality is value equality.
class Rat {
 public:
  Rat() : q_(0) {}
  Rat(const Int& v) : q_(v) {}
  Rat(long v) : q_(v) {}
  Rat(int v) : q_(static_cast<long>(v)) {}
  Rat(const Int& num, const Int& den);

  Int num() const { return Int(q_.get_num()); }
  Int den() const { return Int(q_.get_den()); }
  int sign() const { return sgn(q_); }

  // "p/q", or just "p" when the denominator is 1
  std::string to_string() const;

  Rat operator-() const { return wrap(mpq_class(-q_)); }

  friend Rat operator+(const Rat& a, const Rat& b) { return wrap(mpq_class(a.q_ + b.q_)); }
  friend Rat operator-(const Rat& a, const Rat& b) { return wrap(mpq_class(a.q_ - b.q_)); }
  friend Rat operator*(const Rat& a, const Rat& b) { return wrap(mpq_class(a.q_ * b.q_)); }
  friend Rat operator/(const Rat& a, const Rat& b);

  Rat& operator+=(const Rat& o) { q_ += o.q_; return *this; }
  Rat& operator-=(const Rat& o) { q_ -= o.q_; return *this; }
  Rat& operator*=(const Rat& o) { q_ *= o.q_; return *this; }

  friend bool operator==(const Rat& a, const Rat& b) { return a.q_ == b.q_; }
  friend bool operator!=(const Rat& a, const Rat& b) { return a.q_ != b.q_; }
  friend bool operator<(const Rat& a, const Rat& b) { return a.q_ < b.q_; }
  friend bool operator<=(const Rat& a, const Rat& b) { return a.q_ <= b.q_; }
  friend bool operator>(const Rat& a, const Rat& b) { return a.q_ > b.q_; }
  friend bool operator>=(const Rat& a, const Rat& b) { return a.q_ >= b.q_; }

 private:
  static Rat wrap(mpq_class q) {
    Rat r;
    r.q_ = std::move(q);
    return r;
  }
  mpq_class q_;
};

// Exact integer square root: the s with s*s = v, or nullopt when v is not a
// perfect square. Negative input is a contract violation.
std::optional<Int> isqrt_exact(const Int& v);

// Nonnegative gcd of three values; gcd3(0,0,0) = 0.
Int gcd3(const Int& a, const Int& b, const Int& c);

// Fixed-notation decimal with the given number of significant digits,
// round half to even. Trailing zeros are trimmed; zero prints as "0".
std::string to_decimal(const Rat& r, int significant_digits = 12);

}  // namespace apollon
