#include "focal/spaces.hpp"

#include <functional>
#include <stdexcept>

namespace focal::spaces {

namespace {

// Builds the ring once to compute the tangent class, then rebuilds it with that class.
Variety build_with_tangent(VarietySpec spec, const std::function<GradedClass(const Variety&)>& tangent) {
  spec.tangent_chern = {{Monomial(spec.generators.size(), 0), ParamPoly(1)}};
  Variety draft = build_variety(spec);
  spec.tangent_chern = tangent(draft).terms();
  return build_variety(spec);
}

void require(bool ok, const std::string& what) {
  if (!ok) throw std::logic_error("catalog consistency check failed: " + what);
}

ParamPoly param(const Variety& v, const char* name) { return ParamPoly::variable(v.context(), name); }

}  // namespace

const Sheaf& CatalogEntry::sheaf(const std::string& name) const {
  auto it = sheaves.find(name);
  if (it == sheaves.end()) throw std::invalid_argument("no sheaf named " + name);
  return it->second;
}

const GradedClass& CatalogEntry::cls(const std::string& name) const {
  auto it = classes.find(name);
  if (it == classes.end()) throw std::invalid_argument("no class named " + name);
  return it->second;
}

ContextPtr congruence_context() { return make_context({"a", "b", "g", "k2", "chi", "T"}); }
ContextPtr degree_context() { return make_context({"d"}); }
ContextPtr curve_context() { return make_context({"d", "p"}); }

CatalogEntry projective_space(unsigned n, const ContextPtr& ctx, const std::string& gen) {
  VarietySpec s;
  s.name = n == 0 ? "point" : "P" + std::to_string(n);
  s.context = ctx;
  s.dimension = n;
  if (n == 0) {
    s.integration[Monomial{}] = ParamPoly(1);
    s.point_class = {{Monomial{}, ParamPoly(1)}};
    CatalogEntry e{build_with_tangent(s, [](const Variety& v) { return v.one(); }), {}, {}};
    return e;
  }
  s.generators = {{gen, 1}};
  s.integration[Monomial{n}] = ParamPoly(1);
  s.point_class = {{Monomial{n}, ParamPoly(1)}};
  Variety v = build_with_tangent(s, [&](const Variety& d) { return pow(d.one() + d.gen(gen), n + 1); });
  CatalogEntry e{v, {}, {}};
  e.classes.emplace(gen, v.gen(gen));
  e.sheaves.emplace("T", Sheaf::tangent(v));
  e.sheaves.emplace("O(1)", Sheaf::line(v.gen(gen)));
  return e;
}

CatalogEntry grassmannian_g13(const ContextPtr& ctx) {
  VarietySpec s;
  s.name = "G(1,3)";
  s.context = ctx;
  s.generators = {{"q1", 1}, {"q2", 2}};
  s.dimension = 4;
  s.add_rewrite("q1^3", "2*q1*q2");
  s.add_rewrite("q1^2*q2", "q2^2");
  s.add_integral("q2^2", "1");
  s.point_class = s.raw("q2^2");
  auto bundles = [](const Variety& v) {
    Sheaf q(ParamPoly(2), v.parse("1 + q1 + q2"));
    Sheaf s_dual = difference(Sheaf::trivial(v, 4), q);
    Sheaf s(ParamPoly(2), dual(s_dual).total_chern());
    return std::make_pair(q, s);
  };
  Variety v = build_with_tangent(s, [&](const Variety& d) {
    auto [q, sb] = bundles(d);
    return tensor(sb, q).total_chern();
  });
  auto [q, sb] = bundles(v);
  require(sb.total_chern() == v.parse("1 + q1 + q1^2 - q2"), "c(S) on G(1,3)");
  CatalogEntry e{v, {}, {}};
  e.sheaves.emplace("Q", q);
  e.sheaves.emplace("S", sb);
  e.sheaves.emplace("T", Sheaf::tangent(v));
  e.classes.emplace("q1", v.gen("q1"));
  e.classes.emplace("q2", v.gen("q2"));
  e.classes.emplace("alpha", v.parse("q1^2 - q2"));
  e.classes.emplace("beta", v.gen("q2"));
  return e;
}

CatalogEntry formal_congruence_surface(const ContextPtr& ctx) {
  VarietySpec s;
  s.name = "X";
  s.context = ctx;
  s.generators = {{"H", 1}, {"K", 1}, {"pt", 2}};
  s.dimension = 2;
  s.add_rewrite("H^2", "(a+b)*pt");
  s.add_rewrite("H*K", "(2*g-2-a-b)*pt");
  s.add_rewrite("K^2", "k2*pt");
  s.add_integral("pt", "1");
  s.point_class = s.raw("pt");
  s.tangent_chern = s.raw("1 - K + (12*chi - k2)*pt");
  Variety v = build_variety(s);
  CatalogEntry e{v, {}, {}};
  e.sheaves.emplace("Q", Sheaf(ParamPoly(2), v.parse("1 + H + b*pt")));
  e.sheaves.emplace("S", Sheaf(ParamPoly(2), v.parse("1 + H + a*pt")));
  e.sheaves.emplace("T", Sheaf::tangent(v));
  e.sheaves.emplace("Omega", dual(Sheaf::tangent(v)));
  for (const char* n : {"H", "K", "pt"}) e.classes.emplace(n, v.gen(n));
  return e;
}

Sheaf sheaf_tj_pullback(const Variety& host) {
  GradedClass h = host.gen("h"), hs = host.gen("hs");
  GradedClass one = host.one();
  GradedClass c = pow(one + h, 4) * pow(one + hs, 4) * series_inverse(one + h + hs);
  return Sheaf(ParamPoly(5), c);
}

IncidenceTower tower_ix_ax(const CatalogEntry& x) {
  const Variety& xv = x.variety;
  Variety ix = projective_bundle(xv, x.sheaf("Q").chern_classes(2), "h");
  Sheaf s_ix = x.sheaf("S").pullback(ix);
  Variety ax = projective_bundle(ix, s_ix.chern_classes(2), "hs");
  require(ix.tangent_chern().component(1) == ix.parse("2*h - K - H"), "c1 of the incidence variety");
  Sheaf tax = Sheaf::tangent(ax);
  require(tax.c(1) == ax.parse("2*h + 2*hs - 2*H - K"), "c1 of A_X");
  require(tax.c(2) == ax.parse("h^2 + 4*h*hs + hs^2 - 3*h*H - 3*hs*H - 2*h*K - 2*hs*K + 2*H^2 + 2*H*K"
                               " + (12*chi - k2)*pt"),
          "c2 of A_X");
  IncidenceTower t{{ix, {}, {}}, {ax, {}, {}}};
  t.ix.sheaves.emplace("T", Sheaf::tangent(ix));
  t.ix.sheaves.emplace("Q", x.sheaf("Q").pullback(ix));
  t.ix.sheaves.emplace("S", s_ix);
  t.ix.classes.emplace("h", ix.gen("h"));
  t.ax.sheaves.emplace("T", tax);
  t.ax.sheaves.emplace("TJ", sheaf_tj_pullback(ax));
  t.ax.classes.emplace("h", ax.gen("h"));
  t.ax.classes.emplace("hs", ax.gen("hs"));
  t.ax.classes.emplace("c1T", tax.c(1));
  t.ax.classes.emplace("c2T", tax.c(2));
  // Ramification divisors of the two projections.
  t.ax.classes.emplace("A", ax.parse("2*h + H + K"));
  t.ax.classes.emplace("B", ax.parse("2*hs + H + K"));
  return t;
}

JetTower jet_tower(const CatalogEntry& x) {
  const Variety& xv = x.variety;
  Variety d1 = projective_bundle(xv, x.sheaf("Omega").chern_classes(2), "l1");
  Sheaf omega_rel = dual(relative_tangent_of_bundle(d1));
  Sheaf g = direct_sum(Sheaf::line(d1.gen("l1")), omega_rel);
  Variety d2 = projective_bundle(d1, g.chern_classes(2), "l2");
  CatalogEntry p3 = projective_space(3, xv.context(), "h");
  Variety prod = product_variety(p3.variety, d2);

  JetTower t{{d1, {}, {}}, {d2, {}, {}}, {prod, {}, {}}};
  t.d1.sheaves.emplace("G", g);
  t.d1.classes.emplace("l1", d1.gen("l1"));
  t.d2.classes.emplace("l2", d2.gen("l2"));
  // S|X (h), then tensored with L1 and L2, on P^3 x D^2X.
  Sheaf s = x.sheaf("S").pullback(prod);
  Sheaf s_h = twist_by_line(s, prod.gen("h"));
  Sheaf s_h1 = twist_by_line(s_h, prod.gen("l1"));
  Sheaf s_h12 = twist_by_line(s_h1, prod.gen("l2"));
  require(s_h.c(2) == prod.parse("h^2 + h*H + a*pt"), "[I_X]");
  require(s_h1.c(2) == prod.parse("l1^2 + 2*l1*h + l1*H + h^2 + h*H + a*pt"), "[X']");
  require(s_h12.c(2) == prod.parse("l2^2 + 2*l1*l2 + 2*l2*h + l2*H + l1^2 + 2*l1*h + l1*H + h^2 + h*H + a*pt"),
          "[X'']");
  t.p3d2.classes.emplace("IX", s_h.c(2));
  t.p3d2.classes.emplace("Xp", s_h1.c(2));
  t.p3d2.classes.emplace("Xpp", s_h12.c(2));
  t.p3d2.classes.emplace("h", prod.gen("h"));
  t.p3d2.classes.emplace("H", prod.gen("H"));
  return t;
}

CatalogEntry hypersurface_sigma(const ContextPtr& ctx) {
  VarietySpec s;
  s.name = "Sigma";
  s.context = ctx;
  s.generators = {{"h", 1}, {"pt", 2}};
  s.dimension = 2;
  s.add_rewrite("h^2", "d*pt");
  s.add_integral("pt", "1");
  s.point_class = s.raw("pt");
  Variety v = build_with_tangent(s, [](const Variety& w) {
    GradedClass h = w.gen("h");
    return pow(w.one() + h, 4) * series_inverse(w.one() + h.scaled(param(w, "d")));
  });
  CatalogEntry e{v, {}, {}};
  Sheaf t = Sheaf::tangent(v);
  Sheaf omega = dual(t);
  e.sheaves.emplace("T", t);
  e.sheaves.emplace("Omega", omega);
  e.sheaves.emplace("Omega(1)", twist_by_line(omega, v.gen("h")));
  e.sheaves.emplace("Omega(2)", twist_by_line(omega, v.parse("2*h")));
  e.sheaves.emplace("O(1)", Sheaf::line(v.gen("h")));
  e.classes.emplace("h", v.gen("h"));
  e.classes.emplace("pt", v.gen("pt"));
  return e;
}

CatalogEntry tangent_space_y(const CatalogEntry& sigma) {
  const Variety& sv = sigma.variety;
  Variety y = projective_bundle(sv, sigma.sheaf("Omega(2)").chern_classes(2), "l");
  ParamPoly d = param(y, "d");
  GradedClass l = y.gen("l"), h = y.gen("h");
  // Principal parts: 0 -> Omega(1) -> P^1(O(1)) -> O(1) -> 0.
  Sheaf p1 = direct_sum(sigma.sheaf("Omega(1)"), sigma.sheaf("O(1)")).pullback(y);
  Sheaf omega_rel = dual(relative_tangent_of_bundle(y));
  Sheaf kernel = twist_by_line(omega_rel, l - h);
  Sheaf q = difference(p1, kernel);
  require(q.c(1) == l, "c1(Q) = l on Y");
  CatalogEntry e{y, {}, {}};
  e.sheaves.emplace("Q", q);
  e.sheaves.emplace("T", Sheaf::tangent(y));
  e.classes.emplace("l", l);
  e.classes.emplace("h", h);

  // Parabolic curve: Hessian of a degree d form in four variables.
  e.classes.emplace("Yprime", h.scaled(ParamPoly(4) * (d - ParamPoly(2))));
  // Zero locus of a section of O_Y(2) tensor O_Sigma(d-4).
  e.classes.emplace("Y2", l.scaled(ParamPoly(2)) + h.scaled(d - ParamPoly(4)));
  // Y1 = m l + n h. On a fibre, m counts lines through the node of the tangent section
  // that touch it elsewhere: Riemann-Hurwitz for the projection from the node.
  ParamPoly genus = (d - ParamPoly(1)) * (d - ParamPoly(2)) * ParamPoly(Rational(1, 2)) - ParamPoly(1);
  ParamPoly m = genus.scaled(Rational(2)) - ParamPoly(2) + (d - ParamPoly(2)).scaled(Rational(2));
  // n from twice the bitangent count of a smooth plane section, given by the Plucker relation
  // d = d*(d*-1) - 2 tau - 3 i with d* = d(d-1) and i = 3d(d-2).
  ParamPoly dual_degree = d * (d - ParamPoly(1));
  ParamPoly flexes = ParamPoly(3) * d * (d - ParamPoly(2));
  ParamPoly bitangents = (dual_degree * (dual_degree - ParamPoly(1)) - d - ParamPoly(3) * flexes)
                             .scaled(Rational(1, 2));
  GradedClass c2q = q.c(2);
  ParamPoly l_c2 = y.integrate(l * c2q), h_c2 = y.integrate(h * c2q);
  ParamPoly n = divide_exact(bitangents.scaled(Rational(2)) - m * l_c2, h_c2);
  e.classes.emplace("Y1", l.scaled(m) + h.scaled(n));
  return e;
}

CatalogEntry bitangent_space_t(const ContextPtr& ctx) {
  CatalogEntry g = grassmannian_g13(ctx);
  Sheaf sym2 = sym_power_concrete(dual(g.sheaf("Q")), 2);
  Variety t = projective_bundle(g.variety, sym2.chern_classes(3), "t");
  ParamPoly d = ParamPoly::variable(ctx, "d");
  Sheaf q = g.sheaf("Q").pullback(t);
  Sheaf top = sym_power_rank2_symbolic(q, d);
  Sheaf low = twist_by_line(sym_power_rank2_symbolic(q, d - ParamPoly(4)), t.parse("-2*t"));
  Sheaf r = difference(top, low);
  CatalogEntry e{t, {}, {}};
  e.sheaves.emplace("Q", q);
  e.sheaves.emplace("Sym2Qdual", sym2);
  e.sheaves.emplace("R", r);
  e.sheaves.emplace("T", Sheaf::tangent(t));
  e.sheaves.emplace("TG", g.sheaf("T").pullback(t));
  e.classes.emplace("t", t.gen("t"));
  e.classes.emplace("q1", t.gen("q1"));
  e.classes.emplace("alpha", t.pullback(g.cls("alpha")));
  e.classes.emplace("beta", t.pullback(g.cls("beta")));
  e.classes.emplace("X1", r.c(4));
  return e;
}

CatalogEntry sym_square_curve(const ContextPtr& ctx, bool printed_table) {
  VarietySpec s;
  s.name = printed_table ? "C2 (printed table)" : "C2";
  s.context = ctx;
  s.generators = {{"P", 1}, {"Delta", 1}, {"pt", 2}};
  s.dimension = 2;
  s.add_rewrite("P^2", "pt");
  s.add_rewrite("P*Delta", printed_table ? "pt" : "2*pt");
  s.add_rewrite("Delta^2", "(4-4*p)*pt");
  s.add_integral("pt", "1");
  s.point_class = s.raw("pt");
  const char* canonical = printed_table ? "(2-2*p)*P + 1/2*Delta" : "(2*p-2)*P - 1/2*Delta";
  // Euler number of C x C / (Z/2): (e(C)^2 + e(C)) / 2 with e(C) = 2 - 2p.
  Variety v = build_with_tangent(s, [&](const Variety& w) {
    ParamPoly ec = ParamPoly(2) - param(w, "p").scaled(Rational(2));
    ParamPoly euler = (ec * ec + ec).scaled(Rational(1, 2));
    return w.one() - w.parse(canonical) + w.gen("pt").scaled(euler);
  });
  CatalogEntry e{v, {}, {}};
  e.sheaves.emplace("Q", Sheaf(ParamPoly(2), v.parse("1 + d*P - 1/2*Delta + 1/2*d*(d-1)*pt")));
  e.sheaves.emplace("T", Sheaf::tangent(v));
  e.classes.emplace("K", v.parse(canonical));
  for (const char* n : {"P", "Delta", "pt"}) e.classes.emplace(n, v.gen(n));
  return e;
}

}  // namespace focal::spaces
