#include "focal/chow.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <sstream>
#include <stdexcept>

#include "focal/expression.hpp"

namespace focal {

namespace {

void add_raw(RawClass& acc, const Monomial& m, const ParamPoly& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = acc.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) acc.erase(it);
  }
}

Monomial mono_add(const Monomial& x, const Monomial& y) {
  Monomial r = x;
  for (std::size_t i = 0; i < r.size(); ++i) r[i] += y[i];
  return r;
}

bool divides(const Monomial& d, const Monomial& m) {
  for (std::size_t i = 0; i < m.size(); ++i)
    if (d[i] > m[i]) return false;
  return true;
}

Monomial mono_sub(const Monomial& m, const Monomial& d) {
  Monomial r = m;
  for (std::size_t i = 0; i < r.size(); ++i) r[i] -= d[i];
  return r;
}

std::string mono_string(const std::vector<GeneratorSpec>& gens, const Monomial& m) {
  std::string s;
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (m[i] == 0) continue;
    if (!s.empty()) s += "*";
    s += gens[i].name;
    if (m[i] > 1) s += "^" + std::to_string(m[i]);
  }
  return s.empty() ? "1" : s;
}

RawClass raw_from_text(const ContextPtr& ctx, const std::vector<GeneratorSpec>& gens,
                       std::string_view text) {
  FreePoly fp = parse_free_poly(text);
  RawClass out;
  for (const auto& [sm, c] : fp) {
    Monomial m(gens.size(), 0);
    ParamPoly coef = ParamPoly::constant(ctx, c);
    for (const auto& [sym, e] : sm) {
      auto it = std::find_if(gens.begin(), gens.end(),
                             [&](const GeneratorSpec& g) { return g.name == sym; });
      if (it != gens.end()) {
        m[static_cast<std::size_t>(it - gens.begin())] += e;
      } else if (ctx && ctx->index_of(sym)) {
        coef *= pow(ParamPoly::variable(ctx, sym), e);
      } else {
        throw std::invalid_argument("unknown generator or parameter '" + sym + "' in '" +
                                    std::string(text) + "'");
      }
    }
    add_raw(out, m, coef);
  }
  return out;
}

}  // namespace

struct ParentLink {
  std::shared_ptr<const VarietyImpl> ring;
  std::vector<std::size_t> index_map;
};

struct VarietyImpl : std::enable_shared_from_this<VarietyImpl> {
  std::string name;
  ContextPtr ctx;
  std::vector<GeneratorSpec> gens;
  std::vector<RewriteRule> rewrites;
  std::vector<TruncationBlock> blocks;
  unsigned dim = 0;
  std::map<Monomial, ParamPoly> integration;  // normal top-degree monomials only
  std::map<Monomial, ParamPoly> integration_input;
  RawClass tangent;
  RawClass point;
  std::map<Monomial, RawClass> nf;
  std::vector<ParentLink> parents;
  std::optional<BundleData> bundle;
  std::vector<std::map<std::string, std::string>> factor_names;

  unsigned wdeg(const Monomial& m) const {
    unsigned d = 0;
    for (std::size_t i = 0; i < m.size(); ++i) d += gens[i].degree * m[i];
    return d;
  }

  bool truncated(const Monomial& m) const {
    for (const auto& b : blocks) {
      unsigned d = 0;
      for (auto g : b.generators) d += gens[g].degree * m[g];
      if (d > b.max_degree) return true;
    }
    return false;
  }

  std::string mono(const Monomial& m) const { return mono_string(gens, m); }

  GradedClass make(RawClass terms) const {
    return GradedClass(shared_from_this(), std::move(terms));
  }

  RawClass normalize(const RawClass& raw) const {
    RawClass out;
    for (const auto& [m, c] : raw) {
      if (m.size() != gens.size()) throw std::invalid_argument("monomial arity mismatch in " + name);
      if (wdeg(m) > dim) continue;
      for (const auto& [nm, nc] : nf.at(m)) add_raw(out, nm, c * nc);
    }
    return out;
  }

  void enumerate(std::size_t i, unsigned budget, Monomial& cur, std::vector<Monomial>& out) const {
    if (i == gens.size()) {
      out.push_back(cur);
      return;
    }
    for (unsigned e = 0; e * gens[i].degree <= budget; ++e) {
      cur[i] = e;
      enumerate(i + 1, budget - e * gens[i].degree, cur, out);
    }
    cur[i] = 0;
  }

  RawClass apply_rule(const RewriteRule& r, const Monomial& m,
                      const std::function<const RawClass&(const Monomial&)>& rec) const {
    Monomial rest = mono_sub(m, r.lhs);
    RawClass out;
    for (const auto& [rm, rc] : r.rhs)
      for (const auto& [nm, nc] : rec(mono_add(rm, rest))) add_raw(out, nm, rc * nc);
    return out;
  }

  void build_table() {
    std::vector<Monomial> all;
    Monomial cur(gens.size(), 0);
    enumerate(0, dim, cur, all);
    std::set<Monomial> in_progress;
    std::function<const RawClass&(const Monomial&)> rec = [&](const Monomial& m) -> const RawClass& {
      if (auto it = nf.find(m); it != nf.end()) return it->second;
      if (!in_progress.insert(m).second)
        throw std::invalid_argument("rewriting does not terminate at monomial " + mono(m) +
                                    " in " + name);
      RawClass result;
      if (!truncated(m)) {
        auto rule = std::find_if(rewrites.begin(), rewrites.end(),
                                 [&](const RewriteRule& r) { return divides(r.lhs, m); });
        if (rule == rewrites.end())
          result.emplace(m, ParamPoly::constant(ctx, 1));
        else
          result = apply_rule(*rule, m, rec);
      }
      in_progress.erase(m);
      return nf.emplace(m, std::move(result)).first->second;
    };
    for (const auto& m : all) rec(m);
    // Confluence: every applicable rule must lead to the same normal form.
    for (const auto& m : all) {
      if (truncated(m)) continue;
      bool first = true;
      for (const auto& r : rewrites) {
        if (!divides(r.lhs, m)) continue;
        if (first) {
          first = false;
          continue;
        }
        RawClass alt = apply_rule(r, m, rec);
        if (!(make(alt) == make(nf.at(m))))
          throw std::invalid_argument("integration inconsistent under rewriting: rules disagree at monomial " +
                                      mono(m) + " in " + name);
      }
    }
  }

  void check_integration() {
    for (const auto& [m, raw] : nf) {
      if (wdeg(m) != dim) continue;
      if (raw.size() == 1 && raw.begin()->first == m) {
        auto it = integration_input.find(m);
        if (it == integration_input.end())
          throw std::invalid_argument("missing top-degree integration entry for monomial " + mono(m) +
                                      " in " + name);
        integration[m] = it->second;
      }
    }
    for (const auto& [m, v] : integration_input) {
      if (m.size() != gens.size()) throw std::invalid_argument("integration monomial arity mismatch");
      if (wdeg(m) != dim)
        throw std::invalid_argument("integration entry below top degree for monomial " + mono(m) +
                                    " in " + name);
      ParamPoly got = integrate(nf.at(m));
      if (!(got == v))
        throw std::invalid_argument("integration inconsistent under rewriting at monomial " + mono(m) +
                                    " in " + name);
    }
  }

  ParamPoly integrate(const RawClass& normal) const {
    ParamPoly s = ParamPoly::constant(ctx, 0);
    for (const auto& [m, c] : normal)
      if (wdeg(m) == dim) s += c * integration.at(m);
    return s;
  }
};

// ---- VarietySpec helpers ----

Monomial VarietySpec::monomial(std::string_view text) const {
  RawClass r = raw(text);
  if (r.size() != 1 || !(r.begin()->second == ParamPoly(1)))
    throw std::invalid_argument("not a monomial: " + std::string(text));
  return r.begin()->first;
}

RawClass VarietySpec::raw(std::string_view text) const { return raw_from_text(context, generators, text); }

void VarietySpec::add_rewrite(std::string_view lhs, std::string_view rhs) {
  rewrites.push_back({monomial(lhs), raw(rhs)});
}

void VarietySpec::add_integral(std::string_view mono, std::string_view value) {
  integration[monomial(mono)] = ParamPoly::parse(context, value);
}

// ---- build ----

namespace {

std::shared_ptr<VarietyImpl> build_impl(const VarietySpec& spec) {
  auto impl = std::make_shared<VarietyImpl>();
  impl->name = spec.name;
  impl->ctx = spec.context;
  impl->gens = spec.generators;
  impl->dim = spec.dimension;
  std::set<std::string> names;
  for (const auto& g : impl->gens) {
    if (g.degree < 1) throw std::invalid_argument("generator degree must be positive: " + g.name);
    if (!names.insert(g.name).second) throw std::invalid_argument("duplicate generator " + g.name);
  }
  for (const auto& r : spec.rewrites) {
    if (r.lhs.size() != impl->gens.size()) throw std::invalid_argument("rewrite arity mismatch");
    unsigned d = impl->wdeg(r.lhs);
    if (d == 0) throw std::invalid_argument("rewrite of the unit monomial");
    for (const auto& [m, c] : r.rhs)
      if (impl->wdeg(m) != d)
        throw std::invalid_argument("non-homogeneous rewrite " + impl->mono(r.lhs) + " -> " +
                                    impl->mono(m) + " in " + spec.name);
    impl->rewrites.push_back(r);
  }
  impl->blocks = spec.blocks;
  TruncationBlock all;
  for (std::size_t i = 0; i < impl->gens.size(); ++i) all.generators.push_back(i);
  all.max_degree = impl->dim;
  impl->blocks.push_back(all);
  impl->integration_input = spec.integration;
  impl->build_table();
  impl->check_integration();
  impl->point = impl->normalize(spec.point_class);
  impl->tangent = impl->normalize(spec.tangent_chern);
  if (!(impl->integrate(impl->point) == ParamPoly(1)))
    throw std::invalid_argument("point class does not integrate to 1 in " + spec.name);
  return impl;
}

RawClass raw_product(const RawClass& x, const RawClass& y) {
  RawClass out;
  for (const auto& [mx, cx] : x)
    for (const auto& [my, cy] : y) add_raw(out, mono_add(mx, my), cx * cy);
  return out;
}

RawClass embed(const RawClass& raw, const std::vector<std::size_t>& index_map, std::size_t n) {
  RawClass out;
  for (const auto& [m, c] : raw) {
    Monomial nm(n, 0);
    for (std::size_t i = 0; i < m.size(); ++i) nm[index_map[i]] += m[i];
    add_raw(out, nm, c);
  }
  return out;
}

ContextPtr merge_contexts(const ContextPtr& x, const ContextPtr& y) {
  if (!x) return y;
  if (!y) return x;
  if (x != y && !x->same_as(*y)) throw std::invalid_argument("mismatched parameter contexts");
  return x;
}

}  // namespace

Variety build_variety(const VarietySpec& spec) { return Variety(build_impl(spec)); }

Variety product_variety(const Variety& v, const Variety& w) {
  const VarietyImpl& a = *v.impl();
  const VarietyImpl& b = *w.impl();
  VarietySpec spec;
  spec.name = a.name + " x " + b.name;
  spec.context = merge_contexts(a.ctx, b.ctx);
  spec.dimension = a.dim + b.dim;
  spec.generators = a.gens;
  std::set<std::string> used;
  for (const auto& g : a.gens) used.insert(g.name);
  std::map<std::string, std::string> names_a, names_b;
  for (const auto& g : a.gens) names_a[g.name] = g.name;
  for (const auto& g : b.gens) {
    std::string n = g.name;
    while (used.count(n)) n += "'";
    used.insert(n);
    names_b[g.name] = n;
    spec.generators.push_back({n, g.degree});
  }
  std::size_t n = spec.generators.size();
  std::vector<std::size_t> map_a(a.gens.size()), map_b(b.gens.size());
  for (std::size_t i = 0; i < map_a.size(); ++i) map_a[i] = i;
  for (std::size_t i = 0; i < map_b.size(); ++i) map_b[i] = a.gens.size() + i;
  auto lift_mono = [&](const Monomial& m, const std::vector<std::size_t>& mp) {
    Monomial r(n, 0);
    for (std::size_t i = 0; i < m.size(); ++i) r[mp[i]] += m[i];
    return r;
  };
  for (const auto& r : a.rewrites) spec.rewrites.push_back({lift_mono(r.lhs, map_a), embed(r.rhs, map_a, n)});
  for (const auto& r : b.rewrites) spec.rewrites.push_back({lift_mono(r.lhs, map_b), embed(r.rhs, map_b, n)});
  for (const auto& blk : a.blocks) {
    TruncationBlock t{{}, blk.max_degree};
    for (auto g : blk.generators) t.generators.push_back(map_a[g]);
    spec.blocks.push_back(t);
  }
  for (const auto& blk : b.blocks) {
    TruncationBlock t{{}, blk.max_degree};
    for (auto g : blk.generators) t.generators.push_back(map_b[g]);
    spec.blocks.push_back(t);
  }
  for (const auto& [ma, va] : a.integration)
    for (const auto& [mb, vb] : b.integration)
      spec.integration[mono_add(lift_mono(ma, map_a), lift_mono(mb, map_b))] = va * vb;
  spec.point_class = raw_product(embed(a.point, map_a, n), embed(b.point, map_b, n));
  auto impl = build_impl(spec);
  impl->parents.push_back({v.impl(), map_a});
  impl->parents.push_back({w.impl(), map_b});
  impl->factor_names = {names_a, names_b};
  impl->tangent = impl->normalize(raw_product(embed(a.tangent, map_a, n), embed(b.tangent, map_b, n)));
  return Variety(impl);
}

Variety projective_bundle(const Variety& base, const std::vector<GradedClass>& chern,
                          std::string_view gen_name) {
  if (chern.size() < 3) throw std::invalid_argument("projective bundle needs a concrete rank of at least 2");
  unsigned r = static_cast<unsigned>(chern.size() - 1);
  for (const auto& c : chern)
    if (!(c.variety() == base)) throw std::invalid_argument("bundle Chern classes must live on the base");
  const VarietyImpl& b = *base.impl();
  VarietySpec spec;
  spec.name = "P(" + std::string(gen_name) + ") over " + b.name;
  spec.context = b.ctx;
  spec.dimension = b.dim + r - 1;
  spec.generators = b.gens;
  for (const auto& g : b.gens)
    if (g.name == gen_name) throw std::invalid_argument("bundle generator name already used: " + g.name);
  spec.generators.push_back({std::string(gen_name), 1});
  std::size_t n = spec.generators.size();
  std::size_t z = n - 1;
  std::vector<std::size_t> mp(b.gens.size());
  for (std::size_t i = 0; i < mp.size(); ++i) mp[i] = i;
  for (const auto& rule : b.rewrites) {
    Monomial lhs(n, 0);
    std::copy(rule.lhs.begin(), rule.lhs.end(), lhs.begin());
    spec.rewrites.push_back({lhs, embed(rule.rhs, mp, n)});
  }
  // zeta^r = c1 zeta^{r-1} - c2 zeta^{r-2} + ...
  Monomial lhs(n, 0);
  lhs[z] = r;
  RawClass rhs;
  for (unsigned i = 1; i <= r; ++i) {
    RawClass ci = embed(chern[i].terms(), mp, n);
    for (const auto& [m0, c] : ci) {
      Monomial m = m0;
      m[z] += r - i;
      add_raw(rhs, m, (i % 2 == 1) ? c : -c);
    }
  }
  spec.rewrites.push_back({lhs, rhs});
  for (const auto& blk : b.blocks) spec.blocks.push_back(blk);
  for (const auto& [m, v] : b.integration) {
    Monomial nm(n, 0);
    std::copy(m.begin(), m.end(), nm.begin());
    nm[z] = r - 1;
    spec.integration[nm] = v;
  }
  {
    RawClass pt = embed(b.point, mp, n);
    for (const auto& [m0, c] : pt) {
      Monomial m = m0;
      m[z] = r - 1;
      add_raw(spec.point_class, m, c);
    }
  }
  auto impl = build_impl(spec);
  impl->parents.push_back({base.impl(), mp});
  BundleData data;
  data.base = base;
  data.rank = r;
  data.chern = chern;
  data.zeta = z;
  impl->bundle = data;
  Variety bundle(impl);
  // c(T) = pi^* c(T_base) * c(pi^* E^dual tensor O(zeta)).
  std::vector<GradedClass> dual;
  for (unsigned i = 0; i <= r; ++i) {
    GradedClass ci = bundle.pullback(chern[i]);
    dual.push_back(i % 2 == 1 ? -ci : ci);
  }
  auto rel = twist_chern(dual, ParamPoly(static_cast<long>(r)), bundle.gen(gen_name), impl->dim);
  GradedClass t = bundle.pullback(base.tangent_chern()) * total(rel);
  impl->tangent = t.terms();
  return bundle;
}

GradedClass segre_pushforward_of_power(const Variety& bundle, unsigned k) {
  const BundleData* bd = bundle.bundle();
  if (!bd) throw std::invalid_argument("pushforward requires a projective bundle");
  unsigned r = bd->rank;
  if (k + 1 < r) return bd->base.zero();
  unsigned idx = k + 1 - r;
  // s = 1 / c(E^dual)
  GradedClass cd = bd->base.zero();
  for (unsigned i = 0; i <= r; ++i) cd += (i % 2 == 1) ? -bd->chern[i] : bd->chern[i];
  return series_inverse(cd).component(idx);
}

GradedClass pushforward(const Variety& bundle, const GradedClass& c) {
  const BundleData* bd = bundle.bundle();
  if (!bd) throw std::invalid_argument("pushforward requires a projective bundle");
  if (!(c.variety() == bundle)) throw std::invalid_argument("class does not live on the bundle");
  const VarietyImpl& b = *bd->base.impl();
  GradedClass out = bd->base.zero();
  std::map<unsigned, RawClass> by_power;
  for (const auto& [m, coef] : c.terms()) {
    Monomial base_m(m.begin(), m.begin() + static_cast<long>(b.gens.size()));
    add_raw(by_power[m[bd->zeta]], base_m, coef);
  }
  for (const auto& [k, raw] : by_power)
    out += segre_pushforward_of_power(bundle, k) * bd->base.normal_form(raw);
  return out;
}

// ---- Variety ----

const std::string& Variety::name() const { return impl_->name; }
unsigned Variety::dimension() const { return impl_->dim; }
const ContextPtr& Variety::context() const { return impl_->ctx; }
const std::vector<GeneratorSpec>& Variety::generators() const { return impl_->gens; }
const std::vector<RewriteRule>& Variety::rewrites() const { return impl_->rewrites; }
const std::vector<TruncationBlock>& Variety::blocks() const { return impl_->blocks; }
const std::map<Monomial, ParamPoly>& Variety::integration_table() const { return impl_->integration; }

std::optional<std::size_t> Variety::generator_index(std::string_view name) const {
  for (std::size_t i = 0; i < impl_->gens.size(); ++i)
    if (impl_->gens[i].name == name) return i;
  return std::nullopt;
}

GradedClass Variety::zero() const { return impl_->make({}); }

GradedClass Variety::one() const { return constant(ParamPoly::constant(impl_->ctx, 1)); }

GradedClass Variety::constant(const ParamPoly& c) const {
  RawClass r;
  add_raw(r, Monomial(impl_->gens.size(), 0), c + ParamPoly::constant(impl_->ctx, 0));
  return impl_->make(r);
}

GradedClass Variety::gen(std::string_view name) const {
  auto idx = generator_index(name);
  if (!idx) throw std::invalid_argument("unknown generator " + std::string(name) + " in " + impl_->name);
  Monomial m(impl_->gens.size(), 0);
  m[*idx] = 1;
  return normal_form({{m, ParamPoly::constant(impl_->ctx, 1)}});
}

GradedClass Variety::param(std::string_view name) const {
  return constant(ParamPoly::variable(impl_->ctx, name));
}

GradedClass Variety::normal_form(const RawClass& raw) const { return impl_->make(impl_->normalize(raw)); }

GradedClass Variety::parse(std::string_view text) const {
  return normal_form(raw_from_text(impl_->ctx, impl_->gens, text));
}

GradedClass Variety::point_class() const { return impl_->make(impl_->point); }
GradedClass Variety::tangent_chern() const { return impl_->make(impl_->tangent); }

ParamPoly Variety::integrate(const GradedClass& c) const {
  if (!(c.variety() == *this)) throw std::invalid_argument("integrating a class of another variety");
  return impl_->integrate(c.terms());
}

bool Variety::derives_from(const Variety& other) const {
  if (impl_ == other.impl_) return true;
  for (const auto& p : impl_->parents)
    if (Variety(p.ring).derives_from(other)) return true;
  return false;
}

GradedClass Variety::pullback(const GradedClass& c) const {
  if (c.ring_ == impl_) return c;
  for (const auto& p : impl_->parents) {
    Variety parent(p.ring);
    if (!parent.derives_from(c.variety())) continue;
    GradedClass cp = parent.pullback(c);
    return normal_form(embed(cp.terms(), p.index_map, impl_->gens.size()));
  }
  throw std::invalid_argument("cannot pull back a class from " + c.variety().name() + " to " + impl_->name);
}

const BundleData* Variety::bundle() const { return impl_->bundle ? &*impl_->bundle : nullptr; }

std::map<std::string, std::string> Variety::factor_renaming(std::size_t factor) const {
  if (factor >= impl_->factor_names.size()) throw std::invalid_argument("not a factor of this product");
  return impl_->factor_names[factor];
}

// ---- GradedClass ----

void GradedClass::require_same_ring(const GradedClass& o) const {
  if (!ring_ || !o.ring_) throw std::invalid_argument("class without a variety");
  if (ring_ != o.ring_) throw std::invalid_argument("mixed-variety operands");
}

GradedClass& GradedClass::operator+=(const GradedClass& o) {
  require_same_ring(o);
  for (const auto& [m, c] : o.terms_) add_raw(terms_, m, c);
  return *this;
}

GradedClass& GradedClass::operator-=(const GradedClass& o) {
  require_same_ring(o);
  for (const auto& [m, c] : o.terms_) add_raw(terms_, m, -c);
  return *this;
}

GradedClass& GradedClass::operator*=(const GradedClass& o) {
  require_same_ring(o);
  RawClass out;
  const VarietyImpl& r = *ring_;
  for (const auto& [mx, cx] : terms_)
    for (const auto& [my, cy] : o.terms_) {
      Monomial m = mono_add(mx, my);
      if (r.wdeg(m) > r.dim) continue;
      const RawClass& nfm = r.nf.at(m);
      if (nfm.empty()) continue;
      ParamPoly cc = cx * cy;
      for (const auto& [nm, nc] : nfm) add_raw(out, nm, cc * nc);
    }
  terms_ = std::move(out);
  return *this;
}

GradedClass GradedClass::operator-() const { return scaled(ParamPoly(-1)); }

GradedClass GradedClass::scaled(const ParamPoly& c) const {
  RawClass out;
  for (const auto& [m, v] : terms_) add_raw(out, m, v * c);
  return GradedClass(ring_, out);
}

bool operator==(const GradedClass& x, const GradedClass& y) {
  x.require_same_ring(y);
  return (x - y).is_zero();
}

GradedClass GradedClass::component(unsigned degree) const {
  RawClass out;
  for (const auto& [m, c] : terms_)
    if (ring_->wdeg(m) == degree) out.emplace(m, c);
  return GradedClass(ring_, out);
}

GradedClass GradedClass::truncated(unsigned degree) const {
  RawClass out;
  for (const auto& [m, c] : terms_)
    if (ring_->wdeg(m) <= degree) out.emplace(m, c);
  return GradedClass(ring_, out);
}

ParamPoly GradedClass::degree_zero() const {
  auto it = terms_.find(Monomial(ring_->gens.size(), 0));
  return it == terms_.end() ? ParamPoly::constant(ring_->ctx, 0) : it->second;
}

int GradedClass::top_degree() const {
  int d = -1;
  for (const auto& [m, c] : terms_) d = std::max(d, static_cast<int>(ring_->wdeg(m)));
  return d;
}

GradedClass GradedClass::substitute(const Assignment& assignment) const {
  RawClass out;
  for (const auto& [m, c] : terms_) add_raw(out, m, c.substitute(assignment));
  return GradedClass(ring_, out);
}

std::string GradedClass::to_string() const {
  if (terms_.empty()) return "0";
  std::vector<std::pair<Monomial, ParamPoly>> sorted(terms_.begin(), terms_.end());
  std::stable_sort(sorted.begin(), sorted.end(), [&](const auto& x, const auto& y) {
    unsigned dx = ring_->wdeg(x.first), dy = ring_->wdeg(y.first);
    if (dx != dy) return dx > dy;
    return x.first > y.first;
  });
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : sorted) {
    bool is_unit = m == Monomial(m.size(), 0);
    std::string mono = ring_->mono(m);
    ParamPoly coef = c;
    bool negative = false;
    if (coef.terms().size() == 1 && coef.terms().begin()->second.sign() < 0) {
      negative = true;
      coef = -coef;
    }
    os << (first ? (negative ? "-" : "") : (negative ? " - " : " + "));
    first = false;
    std::string cs = coef.to_string();
    bool compound = coef.terms().size() > 1;
    if (is_unit)
      os << (compound ? "(" + cs + ")" : cs);
    else if (cs == "1")
      os << mono;
    else
      os << (compound ? "(" + cs + ")" : cs) << "*" << mono;
  }
  return os.str();
}

GradedClass pow(const GradedClass& x, unsigned e) {
  GradedClass r = x.variety().one();
  for (unsigned i = 0; i < e; ++i) r *= x;
  return r;
}

std::ostream& operator<<(std::ostream& os, const GradedClass& c) { return os << c.to_string(); }

// ---- series helpers ----

std::vector<GradedClass> components(const GradedClass& t, unsigned n) {
  std::vector<GradedClass> out;
  for (unsigned k = 0; k <= n; ++k) out.push_back(t.component(k));
  return out;
}

GradedClass total(const std::vector<GradedClass>& comps) {
  if (comps.empty()) throw std::invalid_argument("empty component list");
  GradedClass s = comps.front().variety().zero();
  for (const auto& c : comps) s += c;
  return s;
}

GradedClass series_inverse(const GradedClass& c) {
  Variety v = c.variety();
  if (!(c.degree_zero() == ParamPoly(1))) throw std::invalid_argument("series inverse needs unit constant term");
  unsigned n = v.dimension();
  auto comp = components(c, n);
  std::vector<GradedClass> r{v.one()};
  for (unsigned k = 1; k <= n; ++k) {
    GradedClass s = v.zero();
    for (unsigned i = 1; i <= k; ++i) s -= comp[i] * r[k - i];
    r.push_back(s.component(k));
  }
  return total(r);
}

std::vector<GradedClass> twist_chern(const std::vector<GradedClass>& chern, const ParamPoly& rank,
                                     const GradedClass& t, unsigned up_to) {
  Variety v = t.variety();
  std::vector<GradedClass> tp{v.one()};
  for (unsigned k = 1; k <= up_to; ++k) tp.push_back(tp.back() * t);
  std::vector<GradedClass> out;
  for (unsigned k = 0; k <= up_to; ++k) {
    GradedClass s = v.zero();
    for (unsigned i = 0; i <= k && i < chern.size(); ++i)
      s += (chern[i] * tp[k - i]).scaled(binomial(rank - ParamPoly(static_cast<long>(i)), k - i));
    out.push_back(s);
  }
  return out;
}

}  // namespace focal
