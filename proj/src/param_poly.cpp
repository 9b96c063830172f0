#include "focal/param_poly.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

#include "focal/expression.hpp"

namespace focal {

ParamContext::ParamContext(std::vector<std::string> names) : names_(std::move(names)) {
  std::set<std::string> seen;
  for (const auto& n : names_)
    if (!seen.insert(n).second) throw std::invalid_argument("duplicate parameter name " + n);
}

std::optional<std::size_t> ParamContext::index_of(std::string_view name) const {
  for (std::size_t i = 0; i < names_.size(); ++i)
    if (names_[i] == name) return i;
  return std::nullopt;
}

ContextPtr make_context(std::initializer_list<std::string> names) {
  return std::make_shared<const ParamContext>(std::vector<std::string>(names));
}

ContextPtr make_context(std::vector<std::string> names) {
  return std::make_shared<const ParamContext>(std::move(names));
}

ParamPoly::ParamPoly(const Rational& c) {
  if (!c.is_zero()) terms_.emplace(Exponents{}, c);
}

ParamPoly::ParamPoly(long c) : ParamPoly(Rational(c)) {}

ParamPoly ParamPoly::variable(const ContextPtr& ctx, std::string_view name) {
  if (!ctx) throw std::invalid_argument("variable requires a context");
  auto idx = ctx->index_of(name);
  if (!idx) throw std::invalid_argument("unknown parameter " + std::string(name));
  Exponents e(ctx->size(), 0);
  e[*idx] = 1;
  return ParamPoly(ctx, Terms{{e, Rational(1)}});
}

ParamPoly ParamPoly::constant(const ContextPtr& ctx, const Rational& c) {
  ParamPoly p(c);
  p.adopt_context(ctx);
  return p;
}

ParamPoly ParamPoly::from_terms(const ContextPtr& ctx, Terms terms) {
  std::size_t n = ctx ? ctx->size() : 0;
  ParamPoly p(ctx, {});
  for (auto& [e, c] : terms) {
    if (e.size() != n) throw std::invalid_argument("exponent vector does not match context");
    p.add_term(e, c);
  }
  return p;
}

ParamPoly ParamPoly::parse(const ContextPtr& ctx, std::string_view text) {
  FreePoly fp = parse_free_poly(text);
  ParamPoly r = ParamPoly::constant(ctx, 0);
  std::size_t n = ctx ? ctx->size() : 0;
  for (const auto& [m, c] : fp) {
    Exponents e(n, 0);
    for (const auto& [sym, pw] : m) {
      auto idx = ctx ? ctx->index_of(sym) : std::nullopt;
      if (!idx) throw std::invalid_argument("unknown parameter " + sym + " in '" + std::string(text) + "'");
      e[*idx] += pw;
    }
    r.add_term(e, c);
  }
  return r;
}

void ParamPoly::adopt_context(const ContextPtr& ctx) {
  if (!ctx) return;
  if (ctx_) {
    if (ctx_ != ctx && !ctx_->same_as(*ctx))
      throw std::invalid_argument("mismatched parameter contexts");
    return;
  }
  // Only constants live without a context.
  Terms lifted;
  for (auto& [e, c] : terms_) lifted.emplace(Exponents(ctx->size(), 0), c);
  terms_ = std::move(lifted);
  ctx_ = ctx;
}

void ParamPoly::add_term(const Exponents& e, const Rational& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

ParamPoly& ParamPoly::operator+=(const ParamPoly& o) {
  adopt_context(o.ctx_);
  ParamPoly other = o;
  other.adopt_context(ctx_);
  for (const auto& [e, c] : other.terms_) add_term(e, c);
  return *this;
}

ParamPoly& ParamPoly::operator-=(const ParamPoly& o) { return *this += -o; }

ParamPoly& ParamPoly::operator*=(const ParamPoly& o) {
  adopt_context(o.ctx_);
  ParamPoly other = o;
  other.adopt_context(ctx_);
  Terms old = std::move(terms_);
  terms_.clear();
  for (const auto& [ex, cx] : old)
    for (const auto& [ey, cy] : other.terms_) {
      Exponents e = ex;
      for (std::size_t i = 0; i < e.size(); ++i) e[i] += ey[i];
      add_term(e, cx * cy);
    }
  return *this;
}

ParamPoly ParamPoly::operator-() const { return scaled(Rational(-1)); }

ParamPoly ParamPoly::scaled(const Rational& c) const {
  ParamPoly r(ctx_, {});
  for (const auto& [e, v] : terms_) r.add_term(e, v * c);
  return r;
}

bool operator==(const ParamPoly& x, const ParamPoly& y) { return (x - y).is_zero(); }

bool ParamPoly::is_constant() const {
  for (const auto& [e, c] : terms_)
    if (std::any_of(e.begin(), e.end(), [](unsigned v) { return v != 0; })) return false;
  return true;
}

std::optional<Rational> ParamPoly::constant_value() const {
  if (!is_constant()) return std::nullopt;
  return terms_.empty() ? Rational(0) : terms_.begin()->second;
}

std::size_t ParamPoly::index_or_throw(std::string_view name) const {
  auto idx = ctx_ ? ctx_->index_of(name) : std::nullopt;
  if (!idx) throw std::invalid_argument("unknown parameter " + std::string(name));
  return *idx;
}

Rational ParamPoly::eval(const Assignment& assignment) const {
  ParamPoly p = substitute(assignment);
  auto v = p.constant_value();
  if (!v) throw std::invalid_argument("unassigned parameter in evaluation: " + p.variables().front());
  return *v;
}

ParamPoly ParamPoly::substitute(const Assignment& assignment) const {
  if (!ctx_) return *this;
  std::vector<std::optional<Rational>> val(ctx_->size());
  for (const auto& [name, v] : assignment)
    if (auto idx = ctx_->index_of(name)) val[*idx] = v;
  ParamPoly r(ctx_, {});
  for (const auto& [e, c] : terms_) {
    Exponents ne = e;
    Rational coef = c;
    for (std::size_t i = 0; i < e.size(); ++i)
      if (val[i] && e[i] > 0) {
        coef *= pow(*val[i], e[i]);
        ne[i] = 0;
      }
    r.add_term(ne, coef);
  }
  return r;
}

ParamPoly ParamPoly::compose(std::string_view name, const ParamPoly& value) const {
  std::size_t idx = index_or_throw(name);
  ParamPoly r = ParamPoly::constant(ctx_, 0);
  std::vector<ParamPoly> powers{ParamPoly::constant(ctx_, 1)};
  for (const auto& [e, c] : terms_) {
    while (powers.size() <= e[idx]) powers.push_back(powers.back() * value);
    Exponents rest = e;
    rest[idx] = 0;
    r += ParamPoly(ctx_, Terms{{rest, c}}) * powers[e[idx]];
  }
  return r;
}

ParamPoly ParamPoly::coefficient(std::string_view name, unsigned power) const {
  std::size_t idx = index_or_throw(name);
  ParamPoly r(ctx_, {});
  for (const auto& [e, c] : terms_)
    if (e[idx] == power) {
      Exponents rest = e;
      rest[idx] = 0;
      r.add_term(rest, c);
    }
  return r;
}

unsigned ParamPoly::degree_in(std::string_view name) const {
  auto idx = ctx_ ? ctx_->index_of(name) : std::nullopt;
  if (!idx) return 0;
  unsigned d = 0;
  for (const auto& [e, c] : terms_) d = std::max(d, e[*idx]);
  return d;
}

unsigned ParamPoly::total_degree() const {
  unsigned d = 0;
  for (const auto& [e, c] : terms_) d = std::max(d, std::accumulate(e.begin(), e.end(), 0u));
  return d;
}

std::vector<std::string> ParamPoly::variables() const {
  std::vector<std::string> out;
  if (!ctx_) return out;
  for (std::size_t i = 0; i < ctx_->size(); ++i)
    for (const auto& [e, c] : terms_)
      if (e[i] > 0) {
        out.push_back(ctx_->names()[i]);
        break;
      }
  return out;
}

std::string ParamPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::vector<std::pair<Exponents, Rational>> sorted(terms_.begin(), terms_.end());
  std::stable_sort(sorted.begin(), sorted.end(), [](const auto& x, const auto& y) {
    unsigned dx = std::accumulate(x.first.begin(), x.first.end(), 0u);
    unsigned dy = std::accumulate(y.first.begin(), y.first.end(), 0u);
    if (dx != dy) return dx > dy;
    return x.first > y.first;
  });
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : sorted) {
    Rational mag = c.sign() < 0 ? -c : c;
    if (first)
      os << (c.sign() < 0 ? "-" : "");
    else
      os << (c.sign() < 0 ? " - " : " + ");
    first = false;
    std::string mono;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += ctx_->names()[i];
      if (e[i] > 1) mono += "^" + std::to_string(e[i]);
    }
    if (mono.empty())
      os << mag.to_string();
    else if (mag == Rational(1))
      os << mono;
    else
      os << mag.to_string() << "*" << mono;
  }
  return os.str();
}

ParamPoly pow(const ParamPoly& base, unsigned e) {
  ParamPoly r = ParamPoly::constant(base.context(), 1);
  for (unsigned i = 0; i < e; ++i) r *= base;
  return r;
}

ParamPoly divide_exact(const ParamPoly& f, const ParamPoly& g) {
  if (g.is_zero()) throw std::domain_error("polynomial division by zero");
  ContextPtr ctx = f.context() ? f.context() : g.context();
  ParamPoly rem = f + ParamPoly::constant(ctx, 0);
  ParamPoly div = g + ParamPoly::constant(ctx, 0);
  ParamPoly quot = ParamPoly::constant(ctx, 0);
  const auto& [lg, lc] = *div.terms().rbegin();
  while (!rem.is_zero()) {
    const auto& [lr, rc] = *rem.terms().rbegin();
    ParamPoly::Exponents e(lr.size());
    for (std::size_t i = 0; i < lr.size(); ++i) {
      if (lr[i] < lg[i]) throw std::domain_error("polynomial division is not exact");
      e[i] = lr[i] - lg[i];
    }
    ParamPoly t = ParamPoly::from_terms(ctx, {{e, rc / lc}});
    quot += t;
    rem -= t * div;
  }
  return quot;
}

ParamPoly binomial(const ParamPoly& r, unsigned k) {
  ParamPoly num = ParamPoly::constant(r.context(), 1);
  Rational den(1);
  for (unsigned i = 0; i < k; ++i) {
    num *= r - ParamPoly(static_cast<long>(i));
    den *= Rational(static_cast<long>(i + 1));
  }
  return num.scaled(Rational(1) / den);
}

std::ostream& operator<<(std::ostream& os, const ParamPoly& p) { return os << p.to_string(); }

}  // namespace focal
