#include "focal/oracle.hpp"

#include <algorithm>
#include <cstdlib>
#include <set>
#include <stdexcept>

namespace focal::oracle {

namespace {

ContextPtr roots_context() {
  static const ContextPtr ctx = make_context({"alpha", "beta"});
  return ctx;
}

// Symmetric polynomial in alpha, beta rewritten in c1 = alpha + beta, c2 = alpha beta.
ParamPoly to_elementary(ParamPoly s) {
  ContextPtr rc = roots_context();
  ContextPtr cc = chern_context();
  ParamPoly e1 = ParamPoly::variable(rc, "alpha") + ParamPoly::variable(rc, "beta");
  ParamPoly e2 = ParamPoly::variable(rc, "alpha") * ParamPoly::variable(rc, "beta");
  ParamPoly c1 = ParamPoly::variable(cc, "c1"), c2 = ParamPoly::variable(cc, "c2");
  ParamPoly out = ParamPoly::constant(cc, Rational(0));
  while (!s.is_zero()) {
    auto lead = s.terms().rbegin();
    unsigned i = lead->first[0], j = lead->first[1];
    if (i < j) throw std::logic_error("polynomial in the roots is not symmetric");
    Rational c = lead->second;
    s -= (pow(e1, i - j) * pow(e2, j)).scaled(c);
    out += (pow(c1, i - j) * pow(c2, j)).scaled(c);
  }
  return out;
}

// 0, 1, -1, 2, -2, ...
long grid_point(unsigned k) { return (k % 2 == 1) ? static_cast<long>(k / 2 + 1) : -static_cast<long>(k / 2); }

}  // namespace

ContextPtr chern_context() {
  static const ContextPtr ctx = make_context({"c1", "c2"});
  return ctx;
}

std::vector<ParamPoly> splitting_oracle_sym(unsigned n) {
  ContextPtr rc = roots_context();
  ParamPoly alpha = ParamPoly::variable(rc, "alpha"), beta = ParamPoly::variable(rc, "beta");
  std::vector<ParamPoly> e(n + 2, ParamPoly::constant(rc, Rational(0)));
  e[0] = ParamPoly::constant(rc, Rational(1));
  for (unsigned i = 0; i <= n; ++i) {
    ParamPoly root = alpha.scaled(Rational(static_cast<long>(i))) + beta.scaled(Rational(static_cast<long>(n - i)));
    for (unsigned k = i + 1; k >= 1; --k) e[k] += root * e[k - 1];
  }
  std::vector<ParamPoly> out;
  for (auto& s : e) out.push_back(to_elementary(s));
  return out;
}

Rational coefficient_of(const ParamPoly& ck, unsigned i, unsigned j) {
  auto it = ck.terms().find(ParamPoly::Exponents{i, j});
  return it == ck.terms().end() ? Rational(0) : it->second;
}

ParamPoly interpolate(const std::vector<std::pair<Rational, Rational>>& points, const ContextPtr& ctx,
                      const std::string& var) {
  std::size_t m = points.size();
  std::vector<Rational> dd;
  for (const auto& p : points) dd.push_back(p.second);
  // Newton divided differences in place.
  for (std::size_t level = 1; level < m; ++level)
    for (std::size_t k = m - 1; k >= level; --k)
      dd[k] = (dd[k] - dd[k - 1]) / (points[k].first - points[k - level].first);
  ParamPoly x = ParamPoly::variable(ctx, var);
  ParamPoly out = ParamPoly::constant(ctx, Rational(0));
  for (std::size_t k = m; k-- > 0;) out = out * (x - ParamPoly(points[k].first)) + ParamPoly(dd[k]);
  return out;
}

ParamPoly fit_sym_coefficient(unsigned k, unsigned i, unsigned j, const ContextPtr& ctx, const std::string& var) {
  std::vector<std::pair<Rational, Rational>> pts;
  for (long n = 0; n <= 8; ++n)
    pts.emplace_back(Rational(n), n + 1 >= static_cast<long>(k)
                                      ? coefficient_of(splitting_oracle_sym(n)[k], i, j)
                                      : Rational(0));
  ParamPoly fit = interpolate(pts, ctx, var);
  for (long n = 9; n <= 12; ++n) {
    Rational expect = coefficient_of(splitting_oracle_sym(n)[k], i, j);
    if (!(fit.eval({{var, Rational(n)}}) == expect))
      throw std::logic_error("interpolated coefficient fails the check at n = " + std::to_string(n));
  }
  return fit;
}

std::string IdentityCertificate::summary() const {
  std::string out = canonical_equal ? "equal" : "unequal";
  out += " (canonical form; " + std::to_string(sample_count) + (sample_count == 1 ? " sample point, " : " sample points, ") +
         (sampled_equal ? "all agree)" : "some differ)");
  if (witness) {
    out += "; witness";
    for (const auto& [name, value] : *witness) out += " " + name + "=" + value.to_string();
    out += ": " + lhs_at_witness->to_string() + " vs " + rhs_at_witness->to_string();
  }
  return out;
}

unsigned sample_floor() {
  constexpr unsigned minimum = 2;
  const char* env = std::getenv("FOCAL_SAMPLES");
  if (!env) return minimum;
  char* end = nullptr;
  long v = std::strtol(env, &end, 10);
  if (end == env || *end != '\0' || v < 0) return minimum;
  return std::max(minimum, static_cast<unsigned>(v));
}

IdentityCertificate certify_identity(const ParamPoly& lhs, const ParamPoly& rhs) {
  IdentityCertificate cert;
  cert.lhs = lhs.to_string();
  cert.rhs = rhs.to_string();
  cert.canonical_equal = (lhs - rhs).is_zero();

  std::set<std::string> vars;
  for (const auto& v : lhs.variables()) vars.insert(v);
  for (const auto& v : rhs.variables()) vars.insert(v);
  std::vector<std::string> names(vars.begin(), vars.end());
  std::vector<unsigned> counts;
  unsigned floor = sample_floor();
  for (const auto& v : names) {
    unsigned deg = std::max(lhs.degree_in(v), rhs.degree_in(v));
    cert.degree_bounds[v] = deg;
    counts.push_back(std::max(deg + 1, floor));
  }

  // Walk the grid; stop at the first disagreement.
  std::vector<unsigned> idx(names.size(), 0);
  cert.sampled_equal = true;
  while (true) {
    Assignment at;
    for (std::size_t k = 0; k < names.size(); ++k) at[names[k]] = Rational(grid_point(idx[k]));
    Rational l = lhs.eval(at), r = rhs.eval(at);
    ++cert.sample_count;
    if (!(l == r)) {
      cert.sampled_equal = false;
      cert.witness = at;
      cert.lhs_at_witness = l;
      cert.rhs_at_witness = r;
      break;
    }
    std::size_t k = 0;
    while (k < idx.size() && ++idx[k] == counts[k]) idx[k++] = 0;
    if (k == idx.size()) break;
  }
  if (cert.canonical_equal != cert.sampled_equal)
    throw std::logic_error("canonical form and sampling disagree on " + cert.lhs + " = " + cert.rhs);
  cert.verdict = cert.canonical_equal ? Verdict::equal : Verdict::unequal;
  return cert;
}

IdentityCertificate certify_identity(const GradedClass& lhs, const GradedClass& rhs) {
  if (!(lhs.variety() == rhs.variety())) throw std::invalid_argument("classes on different varieties");
  std::set<Monomial> monos;
  for (const auto& [m, c] : lhs.terms()) monos.insert(m);
  for (const auto& [m, c] : rhs.terms()) monos.insert(m);
  IdentityCertificate total;
  total.lhs = lhs.to_string();
  total.rhs = rhs.to_string();
  total.canonical_equal = total.sampled_equal = true;
  for (const auto& m : monos) {
    auto coef = [&](const GradedClass& x) {
      auto it = x.terms().find(m);
      return it == x.terms().end() ? ParamPoly(0) : it->second;
    };
    IdentityCertificate c = certify_identity(coef(lhs), coef(rhs));
    total.sample_count += c.sample_count;
    for (const auto& [v, d] : c.degree_bounds) total.degree_bounds[v] = std::max(total.degree_bounds[v], d);
    if (!c.equal() && total.canonical_equal) {
      total.canonical_equal = total.sampled_equal = false;
      total.witness = c.witness;
      total.lhs_at_witness = c.lhs_at_witness;
      total.rhs_at_witness = c.rhs_at_witness;
    }
  }
  total.verdict = total.canonical_equal ? Verdict::equal : Verdict::unequal;
  return total;
}

}  // namespace focal::oracle
