#include "doctest.h"
#include "focal/spaces.hpp"

using namespace focal;
using namespace focal::spaces;

namespace {

ParamPoly P(const ContextPtr& ctx, const char* s) { return ParamPoly::parse(ctx, s); }

// c(T_tower) = c(pullback of T_base) c(T_rel).
void check_tower_tangent(const Variety& bundle) {
  const BundleData* b = bundle.bundle();
  REQUIRE(b != nullptr);
  GradedClass base_t = bundle.pullback(b->base.tangent_chern());
  CHECK(base_t * relative_tangent_of_bundle(bundle).total_chern() == bundle.tangent_chern());
}

}  // namespace

TEST_CASE("projective spaces") {
  auto p3 = projective_space(3);
  CHECK(p3.variety.integrate(p3.variety.parse("h^3")) == ParamPoly(1));
  CHECK(p3.sheaf("T").c(1) == p3.variety.parse("4*h"));
  for (unsigned n = 1; n <= 6; ++n) {
    auto pn = projective_space(n);
    CHECK(pn.variety.integrate(pn.sheaf("T").c(n)) == ParamPoly(long(n) + 1));
  }
  auto pt = projective_space(0);
  CHECK(pt.variety.dimension() == 0);
  CHECK(pt.variety.integrate(pt.variety.one()) == ParamPoly(1));
}

TEST_CASE("Grassmannian of lines") {
  auto g = grassmannian_g13();
  const Variety& v = g.variety;
  CHECK(v.integrate(v.parse("q2^2")) == ParamPoly(1));
  CHECK(v.integrate(g.sheaf("T").c(4)) == ParamPoly(6));
  CHECK(g.sheaf("T").c(1) == v.parse("4*q1"));
  CHECK(v.integrate(g.cls("alpha") * g.cls("alpha")) == ParamPoly(1));
  CHECK(v.integrate(g.cls("alpha") * g.cls("beta")) == ParamPoly(0));
}

TEST_CASE("formal congruence surface") {
  auto ctx = congruence_context();
  auto x = formal_congruence_surface(ctx);
  const Variety& v = x.variety;
  CHECK(v.integrate(v.parse("H^2")) == P(ctx, "a+b"));
  CHECK(v.integrate(x.sheaf("T").c(2)) == P(ctx, "12*chi - k2"));
  CHECK(v.integrate(v.parse("H*K")) == P(ctx, "2*g - 2 - a - b"));
  CHECK(x.sheaf("Omega").c(1) == v.gen("K"));
  // Bidegree as the squares of the two rulings.
  const Sheaf& q = x.sheaf("Q");
  CHECK(v.integrate(q.c(1) * q.c(1) - q.c(2)) == P(ctx, "a"));
  CHECK(v.integrate(q.c(2)) == P(ctx, "b"));
}

TEST_CASE("incidence tower") {
  auto ctx = congruence_context();
  auto x = formal_congruence_surface(ctx);
  auto t = tower_ix_ax(x);
  const Variety& ax = t.ax.variety;
  CHECK(t.ix.sheaf("T").c(1) == t.ix.variety.parse("2*h - K - H"));
  CHECK(t.ax.sheaf("T").c(1) == ax.parse("2*h + 2*hs - 2*H - K"));
  CHECK(ax.integrate(ax.parse("h*hs*pt")) == ParamPoly(1));
  check_tower_tangent(t.ix.variety);
  check_tower_tangent(ax);
  Sheaf tj = t.ax.sheaf("TJ");
  CHECK(tj.c(1) == ax.parse("3*h + 3*hs"));
  CHECK(tj.c(2) == ax.parse("3*h^2 + 10*h*hs + 3*hs^2"));
  CHECK_FALSE(tj.c(3).is_zero());
}

TEST_CASE("jet tower") {
  auto ctx = congruence_context();
  auto x = formal_congruence_surface(ctx);
  auto j = jet_tower(x);
  const Variety& d1 = j.d1.variety;
  check_tower_tangent(d1);
  check_tower_tangent(j.d2.variety);
  CHECK(j.d1.sheaf("G").total_chern() == d1.parse("(1 + l1)*(1 + K - 2*l1)"));
  CHECK(d1.parse("l1^2") == d1.parse("K*l1 - (12*chi - k2)*pt"));
  const Variety& p = j.p3d2.variety;
  CHECK(j.p3d2.cls("IX") == p.parse("h^2 + h*H + a*pt"));
  CHECK(p.dimension() == 7);
}

TEST_CASE("surface of degree d and its tangent planes") {
  auto ctx = degree_context();
  auto sigma = hypersurface_sigma(ctx);
  const Variety& s = sigma.variety;
  CHECK(sigma.sheaf("T").c(1) == s.parse("(4-d)*h"));
  CHECK(s.integrate(sigma.sheaf("T").c(2)) == P(ctx, "d*(d^2-4*d+6)"));
  CHECK(s.integrate(sigma.sheaf("T").c(2)).eval({{"d", 4}}) == Rational(24));
  CHECK(s.integrate(s.parse("h^2")) == P(ctx, "d"));
  CHECK(sigma.sheaf("Omega(2)").c(1) == s.parse("d*h"));
  CHECK(s.integrate(sigma.sheaf("Omega(2)").c(2)) == P(ctx, "d*(d^2-2*d+2)"));

  auto y = tangent_space_y(sigma);
  const Variety& v = y.variety;
  check_tower_tangent(v);
  CHECK(v.integrate(v.parse("l^2*h")) == P(ctx, "d^2"));
  CHECK(v.integrate(v.parse("l*h^2")) == P(ctx, "d"));
  CHECK(v.integrate(v.parse("l^3")) == P(ctx, "2*d^2 - 2*d"));
  CHECK(v.parse("l^2") == v.parse("d*h*l - d*(d^2-2*d+2)*pt"));
  CHECK(y.sheaf("Q").c(1) == v.gen("l"));
  CHECK(y.cls("Yprime") == v.parse("4*(d-2)*h"));
  CHECK(y.cls("Y1") == v.parse("(d+2)*(d-3)*l - 4*(d-3)*h"));
  CHECK(y.cls("Y2") == v.parse("2*l + (d-4)*h"));
}

TEST_CASE("bitangent space") {
  auto ctx = degree_context();
  auto t = bitangent_space_t(ctx);
  const Variety& v = t.variety;
  CHECK(v.dimension() == 6);
  CHECK(t.sheaf("R").rank() == ParamPoly(4));
  CHECK(v.pullback(t.sheaf("Sym2Qdual").total_chern()) == v.parse("1 - 3*q1 + 2*q1^2 + 4*q2 - 4*q1*q2"));
  check_tower_tangent(v);
  ParamPoly order = v.integrate(t.cls("X1") * t.cls("alpha"));
  ParamPoly cls = v.integrate(t.cls("X1") * t.cls("beta"));
  CHECK(order == P(ctx, "1/2*d*(d-1)*(d-2)*(d-3)"));
  CHECK(cls == P(ctx, "1/2*d*(d-2)*(d-3)*(d+3)"));
  CHECK(order.eval({{"d", 4}}) == Rational(12));
  CHECK(cls.eval({{"d", 4}}) == Rational(28));
}

TEST_CASE("second symmetric product of a curve") {
  auto ctx = curve_context();
  auto c = sym_square_curve(ctx);
  const Variety& v = c.variety;
  const Sheaf& q = c.sheaf("Q");
  CHECK(v.integrate(q.c(1) * q.c(1) - q.c(2)) == P(ctx, "1/2*(d-1)*(d-2) - p"));
  CHECK(v.integrate(q.c(2)) == P(ctx, "1/2*d*(d-1)"));
  CHECK(v.integrate(c.cls("K") * c.cls("K")) == P(ctx, "4*p^2 - 13*p + 9"));
  CHECK(v.integrate((c.cls("K") + q.c(1)) * q.c(1)) == P(ctx, "(d-2)*(d-3+2*p) - 2"));
  CHECK(c.sheaf("T").c(1) == -c.cls("K"));

  auto printed = sym_square_curve(ctx, true);
  const Variety& w = printed.variety;
  const Sheaf& qp = printed.sheaf("Q");
  CHECK(w.integrate(qp.c(1) * qp.c(1) - qp.c(2)) != P(ctx, "1/2*(d-1)*(d-2) - p"));
}

TEST_CASE("point class integrates to one in every entry") {
  auto cctx = congruence_context();
  auto x = formal_congruence_surface(cctx);
  auto tower = tower_ix_ax(x);
  auto jets = jet_tower(x);
  auto dctx = degree_context();
  auto sigma = hypersurface_sigma(dctx);
  std::vector<Variety> all = {projective_space(3).variety,
                              grassmannian_g13().variety,
                              x.variety,
                              tower.ix.variety,
                              tower.ax.variety,
                              jets.d1.variety,
                              jets.d2.variety,
                              jets.p3d2.variety,
                              sigma.variety,
                              tangent_space_y(sigma).variety,
                              bitangent_space_t(dctx).variety,
                              sym_square_curve(curve_context()).variety};
  for (const auto& v : all) CHECK(v.integrate(v.point_class()) == ParamPoly(1));
}

TEST_CASE("unknown catalog names are rejected") {
  auto g = grassmannian_g13();
  CHECK_THROWS_AS(g.sheaf("nope"), std::invalid_argument);
  CHECK_THROWS_AS(g.cls("nope"), std::invalid_argument);
}
