#pragma once

#include <gmpxx.h>

#include <compare>
#include <ostream>
#include <string>
#include <string_view>

namespace focal {

// Exact rational, always in lowest terms with positive denominator.
class Rational {
 public:
  Rational() = default;
  Rational(long v) : q_(v) {}  // NOLINT(google-explicit-constructor)
  Rational(long num, long den);
  explicit Rational(const mpq_class& q);

  // Accepts "n", "-n" and "n/d".
  static Rational parse(std::string_view text);

  Rational& operator+=(const Rational& o);
  Rational& operator-=(const Rational& o);
  Rational& operator*=(const Rational& o);
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational x, const Rational& y) { return x += y; }
  friend Rational operator-(Rational x, const Rational& y) { return x -= y; }
  friend Rational operator*(Rational x, const Rational& y) { return x *= y; }
  friend Rational operator/(Rational x, const Rational& y) { return x /= y; }
  Rational operator-() const;

  friend bool operator==(const Rational& x, const Rational& y) { return x.q_ == y.q_; }
  friend std::strong_ordering operator<=>(const Rational& x, const Rational& y) {
    int c = cmp(x.q_, y.q_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  bool is_zero() const { return sgn(q_) == 0; }
  bool is_integer() const { return q_.get_den() == 1; }
  int sign() const { return sgn(q_); }

  std::string numerator() const { return q_.get_num().get_str(); }
  std::string denominator() const { return q_.get_den().get_str(); }
  // Integral values print as "n", others as "n/d".
  std::string to_string() const;
  // Always "n/d", used by the machine formats.
  std::string to_fraction_string() const;
  // Throws unless the value is an integer that fits a long.
  long to_long() const;

  const mpq_class& raw() const { return q_; }

 private:
  mpq_class q_;
};

Rational pow(const Rational& base, unsigned e);

std::ostream& operator<<(std::ostream& os, const Rational& r);

}  // namespace focal
