#include "focal/rational.hpp"

#include <stdexcept>

namespace focal {

Rational::Rational(long num, long den) {
  if (den == 0) throw std::domain_error("rational with zero denominator");
  q_ = mpq_class(num, den);
  q_.canonicalize();
}

Rational::Rational(const mpq_class& q) : q_(q) { q_.canonicalize(); }

Rational Rational::parse(std::string_view text) {
  std::string s(text);
  auto trim = [](std::string& x) {
    auto b = x.find_first_not_of(" \t");
    auto e = x.find_last_not_of(" \t");
    x = b == std::string::npos ? std::string() : x.substr(b, e - b + 1);
  };
  trim(s);
  if (s.empty()) throw std::invalid_argument("empty rational literal");
  auto slash = s.find('/');
  std::string num = s.substr(0, slash);
  std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
  trim(num);
  trim(den);
  mpz_class n, d;
  if (n.set_str(num, 10) != 0 || d.set_str(den, 10) != 0)
    throw std::invalid_argument("malformed rational literal: " + s);
  if (d == 0) throw std::domain_error("rational with zero denominator: " + s);
  mpq_class q(n, d);
  q.canonicalize();
  return Rational(q);
}

Rational& Rational::operator+=(const Rational& o) {
  q_ += o.q_;
  return *this;
}
Rational& Rational::operator-=(const Rational& o) {
  q_ -= o.q_;
  return *this;
}
Rational& Rational::operator*=(const Rational& o) {
  q_ *= o.q_;
  return *this;
}
Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw std::domain_error("division by zero");
  q_ /= o.q_;
  return *this;
}

Rational Rational::operator-() const { return Rational(mpq_class(-q_)); }

std::string Rational::to_string() const {
  if (is_integer()) return q_.get_num().get_str();
  return q_.get_num().get_str() + "/" + q_.get_den().get_str();
}

std::string Rational::to_fraction_string() const {
  return q_.get_num().get_str() + "/" + q_.get_den().get_str();
}

long Rational::to_long() const {
  if (!is_integer() || !q_.get_num().fits_slong_p())
    throw std::range_error("rational is not a machine integer: " + to_string());
  return q_.get_num().get_si();
}

Rational pow(const Rational& base, unsigned e) {
  Rational r(1);
  for (unsigned i = 0; i < e; ++i) r *= base;
  return r;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

}  // namespace focal
