#include "focal/expression.hpp"

#include <cctype>
#include <stdexcept>

namespace focal {
namespace {

void add_into(FreePoly& acc, const SymbolMonomial& m, const Rational& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = acc.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) acc.erase(it);
  }
}

FreePoly add(const FreePoly& x, const FreePoly& y, const Rational& ys) {
  FreePoly r = x;
  for (const auto& [m, c] : y) add_into(r, m, c * ys);
  return r;
}

FreePoly mul(const FreePoly& x, const FreePoly& y) {
  FreePoly r;
  for (const auto& [mx, cx] : x)
    for (const auto& [my, cy] : y) {
      SymbolMonomial m = mx;
      for (const auto& [s, e] : my) m[s] += e;
      add_into(r, m, cx * cy);
    }
  return r;
}

FreePoly constant(const Rational& c) {
  FreePoly r;
  add_into(r, {}, c);
  return r;
}

class Parser {
 public:
  explicit Parser(std::string_view s) : s_(s) {}

  FreePoly parse() {
    FreePoly r = expr();
    skip();
    if (pos_ != s_.size()) fail("unexpected character");
    return r;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw std::invalid_argument("parse error at offset " + std::to_string(pos_) + " in '" +
                                std::string(s_) + "': " + what);
  }

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool eat(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  FreePoly expr() {
    FreePoly r = term();
    for (;;) {
      if (eat('+'))
        r = add(r, term(), Rational(1));
      else if (eat('-'))
        r = add(r, term(), Rational(-1));
      else
        return r;
    }
  }

  FreePoly term() {
    FreePoly r = unary();
    for (;;) {
      if (eat('*')) {
        r = mul(r, unary());
      } else if (eat('/')) {
        FreePoly d = unary();
        if (d.empty()) fail("division by zero");
        if (d.size() != 1 || !d.begin()->first.empty()) fail("division by a non-constant");
        r = mul(r, constant(Rational(1) / d.begin()->second));
      } else {
        return r;
      }
    }
  }

  FreePoly unary() {
    if (eat('-')) return mul(constant(Rational(-1)), unary());
    if (eat('+')) return unary();
    return power();
  }

  FreePoly power() {
    FreePoly base = atom();
    if (eat('^')) {
      skip();
      std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      if (start == pos_) fail("expected integer exponent");
      unsigned e = static_cast<unsigned>(std::stoul(std::string(s_.substr(start, pos_ - start))));
      FreePoly r = constant(Rational(1));
      for (unsigned i = 0; i < e; ++i) r = mul(r, base);
      return r;
    }
    return base;
  }

  FreePoly atom() {
    skip();
    if (pos_ >= s_.size()) fail("unexpected end of input");
    char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      FreePoly r = expr();
      if (!eat(')')) fail("expected ')'");
      return r;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      return constant(Rational::parse(s_.substr(start, pos_ - start)));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos_;
      while (pos_ < s_.size() &&
             (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_'))
        ++pos_;
      while (pos_ < s_.size() && s_[pos_] == '\'') ++pos_;
      FreePoly r;
      r[SymbolMonomial{{std::string(s_.substr(start, pos_ - start)), 1u}}] = Rational(1);
      return r;
    }
    fail(std::string("unexpected character '") + c + "'");
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace

FreePoly parse_free_poly(std::string_view text) { return Parser(text).parse(); }

}  // namespace focal
