#pragma once

#include <initializer_list>
#include <map>
#include <memory>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "focal/rational.hpp"

namespace focal {

// Ordered list of scalar parameter names shared by every polynomial of one scenario.
class ParamContext {
 public:
  explicit ParamContext(std::vector<std::string> names);

  const std::vector<std::string>& names() const { return names_; }
  std::size_t size() const { return names_.size(); }
  std::optional<std::size_t> index_of(std::string_view name) const;
  bool same_as(const ParamContext& other) const { return names_ == other.names_; }

 private:
  std::vector<std::string> names_;
};

using ContextPtr = std::shared_ptr<const ParamContext>;

ContextPtr make_context(std::initializer_list<std::string> names);
ContextPtr make_context(std::vector<std::string> names);

using Assignment = std::map<std::string, Rational>;

// Sparse polynomial with rational coefficients in the parameters of a context.
// A polynomial without context is a constant and combines with any context.
class ParamPoly {
 public:
  using Exponents = std::vector<unsigned>;
  using Terms = std::map<Exponents, Rational>;

  ParamPoly() = default;
  ParamPoly(const Rational& c);  // NOLINT(google-explicit-constructor)
  ParamPoly(long c);             // NOLINT(google-explicit-constructor)
  ParamPoly(int c) : ParamPoly(static_cast<long>(c)) {}  // NOLINT

  static ParamPoly variable(const ContextPtr& ctx, std::string_view name);
  static ParamPoly constant(const ContextPtr& ctx, const Rational& c);
  static ParamPoly from_terms(const ContextPtr& ctx, Terms terms);
  // Parses a formula; every identifier must be a parameter of ctx.
  static ParamPoly parse(const ContextPtr& ctx, std::string_view text);

  const ContextPtr& context() const { return ctx_; }
  const Terms& terms() const { return terms_; }

  ParamPoly& operator+=(const ParamPoly& o);
  ParamPoly& operator-=(const ParamPoly& o);
  ParamPoly& operator*=(const ParamPoly& o);
  friend ParamPoly operator+(ParamPoly x, const ParamPoly& y) { return x += y; }
  friend ParamPoly operator-(ParamPoly x, const ParamPoly& y) { return x -= y; }
  friend ParamPoly operator*(ParamPoly x, const ParamPoly& y) { return x *= y; }
  ParamPoly operator-() const;
  ParamPoly scaled(const Rational& c) const;

  // Equality of canonical forms (contexts must agree unless one side is constant).
  friend bool operator==(const ParamPoly& x, const ParamPoly& y);

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  std::optional<Rational> constant_value() const;

  Rational eval(const Assignment& assignment) const;
  // Substitutes the listed parameters, leaving the others symbolic.
  ParamPoly substitute(const Assignment& assignment) const;
  // Replaces one parameter by a polynomial in the same context.
  ParamPoly compose(std::string_view name, const ParamPoly& value) const;
  // Coefficient of name^power, as a polynomial in the remaining parameters.
  ParamPoly coefficient(std::string_view name, unsigned power) const;

  unsigned degree_in(std::string_view name) const;
  unsigned total_degree() const;
  std::vector<std::string> variables() const;

  std::string to_string() const;

 private:
  ParamPoly(ContextPtr ctx, Terms terms) : ctx_(std::move(ctx)), terms_(std::move(terms)) {}
  void adopt_context(const ContextPtr& ctx);
  void add_term(const Exponents& e, const Rational& c);
  std::size_t index_or_throw(std::string_view name) const;

  ContextPtr ctx_;
  Terms terms_;
};

ParamPoly pow(const ParamPoly& base, unsigned e);

// f / g when g divides f exactly; throws otherwise.
ParamPoly divide_exact(const ParamPoly& f, const ParamPoly& g);

// Binomial coefficient binom(r, k) as a polynomial in a possibly symbolic r.
ParamPoly binomial(const ParamPoly& r, unsigned k);

std::ostream& operator<<(std::ostream& os, const ParamPoly& p);

}  // namespace focal
