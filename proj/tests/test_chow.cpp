#include "doctest.h"
#include "focal/chow.hpp"
#include "generators.hpp"

using namespace focal;

namespace {

Variety p3() {
  VarietySpec s;
  s.name = "P3";
  s.generators = {{"h", 1}};
  s.dimension = 3;
  s.add_rewrite("h^4", "0");
  s.add_integral("h^3", "1");
  s.tangent_chern = s.raw("1 + 4*h + 6*h^2 + 4*h^3");
  s.point_class = s.raw("h^3");
  return build_variety(s);
}

Variety g13() {
  VarietySpec s;
  s.name = "G(1,3)";
  s.generators = {{"q1", 1}, {"q2", 2}};
  s.dimension = 4;
  s.add_rewrite("q1^3", "2*q1*q2");
  s.add_rewrite("q1^2*q2", "q2^2");
  s.add_integral("q2^2", "1");
  s.point_class = s.raw("q2^2");
  s.tangent_chern = s.raw("1");
  return build_variety(s);
}

Variety surface(const ContextPtr& ctx) {
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
  s.tangent_chern = s.raw("1 - K + (12*chi-k2)*pt");
  return build_variety(s);
}

ContextPtr surface_ctx() { return make_context({"a", "b", "g", "k2", "chi"}); }

}  // namespace

TEST_CASE("projective space presentation") {
  Variety v = p3();
  CHECK(v.integrate(v.parse("h^3")) == ParamPoly(1));
  CHECK(v.parse("h^4").is_zero());
  CHECK(v.parse("h^5 + h^2").to_string() == "h^2");
  CHECK(v.integrate(v.parse("h^2 + h")) == ParamPoly(0));
}

TEST_CASE("G(1,3) Schubert relations") {
  Variety g = g13();
  CHECK(g.parse("q1^3") == g.parse("2*q1*q2"));
  CHECK(g.integrate(g.parse("q1^4")) == ParamPoly(2));
  CHECK(g.integrate(g.parse("q1^2*q2")) == ParamPoly(1));
  CHECK(g.integrate(g.parse("q2^2")) == ParamPoly(1));
}

TEST_CASE("formal congruence surface") {
  auto ctx = surface_ctx();
  Variety x = surface(ctx);
  CHECK(x.integrate(x.parse("H^2")) == ParamPoly::parse(ctx, "a+b"));
  CHECK(x.parse("H*K") == x.parse("(2*g-2-a-b)*pt"));
  CHECK(x.integrate(x.parse("K^2")) == ParamPoly::parse(ctx, "k2"));
  CHECK(x.parse("H^3 + K*pt").is_zero());
}

TEST_CASE("build errors") {
  SUBCASE("non-homogeneous rewrite") {
    VarietySpec s;
    s.name = "bad";
    s.generators = {{"x", 1}, {"y", 1}};
    s.dimension = 2;
    s.add_rewrite("x^2", "y");
    s.add_integral("y^2", "1");
    s.add_integral("x*y", "1");
    CHECK_THROWS_WITH_AS(build_variety(s), doctest::Contains("non-homogeneous"), std::invalid_argument);
  }
  SUBCASE("missing integration entry") {
    VarietySpec s;
    s.name = "bad";
    s.generators = {{"x", 1}, {"y", 1}};
    s.dimension = 2;
    s.add_integral("x^2", "1");
    s.point_class = s.raw("x^2");
    CHECK_THROWS_WITH_AS(build_variety(s), doctest::Contains("missing top-degree"), std::invalid_argument);
  }
  SUBCASE("inconsistent integration") {
    VarietySpec s;
    s.name = "bad";
    s.generators = {{"x", 1}};
    s.dimension = 2;
    s.add_rewrite("x^2", "0");
    s.add_integral("x^2", "1");
    CHECK_THROWS_WITH_AS(build_variety(s), doctest::Contains("inconsistent"), std::invalid_argument);
  }
  SUBCASE("non-confluent rewrites") {
    VarietySpec s;
    s.name = "bad";
    s.generators = {{"x", 1}, {"y", 1}};
    s.dimension = 3;
    s.add_rewrite("x^2", "y^2");
    s.add_rewrite("x*y", "0");
    s.add_integral("y^3", "1");
    s.point_class = s.raw("y^3");
    CHECK_THROWS_AS(build_variety(s), std::invalid_argument);
  }
  SUBCASE("unknown generator") { CHECK_THROWS(p3().parse("z^2")); }
}

TEST_CASE("mixed variety operands are rejected") {
  Variety a = p3(), b = g13();
  CHECK_THROWS_AS(a.gen("h") * b.gen("q1"), std::invalid_argument);
  CHECK_THROWS_AS(a.integrate(b.gen("q2")), std::invalid_argument);
}

TEST_CASE("products") {
  Variety a = p3();
  VarietySpec s;
  s.name = "P3*";
  s.generators = {{"hs", 1}};
  s.dimension = 3;
  s.add_integral("hs^3", "1");
  s.point_class = s.raw("hs^3");
  s.tangent_chern = s.raw("1 + 4*hs + 6*hs^2 + 4*hs^3");
  Variety b = build_variety(s);
  Variety ab = product_variety(a, b);
  CHECK(ab.dimension() == 6);
  CHECK(ab.integrate(ab.parse("h^3*hs^3")) == ParamPoly(1));
  CHECK(ab.parse("h^4*hs").is_zero());
  CHECK(ab.integrate(ab.tangent_chern().component(6)) == ParamPoly(16));

  // Colliding names are renamed, and pullback goes by the recorded maps.
  Variety aa = product_variety(a, a);
  CHECK(aa.generator_index("h'").has_value());
  CHECK(aa.factor_renaming(1).at("h") == "h'");
  CHECK(aa.integrate(aa.parse("h^3*h'^3")) == ParamPoly(1));
  CHECK(aa.pullback(a.gen("h")) == aa.gen("h"));

  // X times a point is X.
  VarietySpec pt;
  pt.name = "point";
  pt.dimension = 0;
  pt.integration[Monomial{}] = ParamPoly(1);
  pt.point_class = {{Monomial{}, ParamPoly(1)}};
  pt.tangent_chern = {{Monomial{}, ParamPoly(1)}};
  Variety point = build_variety(pt);
  auto ctx = surface_ctx();
  Variety x = surface(ctx);
  Variety xp = product_variety(x, point);
  CHECK(xp.dimension() == 2);
  CHECK(xp.integrate(xp.parse("K^2")) == ParamPoly::parse(ctx, "k2"));
}

TEST_CASE("projective bundle over the surface") {
  auto ctx = surface_ctx();
  Variety x = surface(ctx);
  // Literal Grothendieck relation for c1 = H, c2 = a*pt.
  Variety ix = projective_bundle(x, {x.one(), x.gen("H"), x.parse("a*pt")}, "h");
  CHECK(ix.dimension() == 3);
  CHECK(ix.parse("h^2") == ix.parse("H*h - a*pt"));
  CHECK(ix.integrate(ix.parse("h*pt")) == ParamPoly(1));
  CHECK(ix.integrate(ix.parse("h^3")) == ParamPoly::parse(ctx, "b"));
  CHECK(ix.integrate(ix.point_class()) == ParamPoly(1));
  // Relative tangent 2h - H.
  CHECK(ix.tangent_chern().component(1) == ix.parse("2*h - H - K"));

  CHECK(pushforward(ix, ix.one()).is_zero());
  CHECK(pushforward(ix, ix.gen("h")) == x.one());
  CHECK(pushforward(ix, ix.parse("h^2")) == x.gen("H"));
  CHECK(segre_pushforward_of_power(ix, 3) == x.parse("H^2 - a*pt"));
}

TEST_CASE("rank three bundle over G(1,3)") {
  Variety g = g13();
  // Sym^2 Q^dual: c = 1 - 3q1 + (2q1^2 + 4q2) - 4q1q2.
  Variety t = projective_bundle(g, {g.one(), g.parse("-3*q1"), g.parse("2*q1^2+4*q2"), g.parse("-4*q1*q2")}, "t");
  CHECK(t.dimension() == 6);
  CHECK(t.parse("t^3") == t.parse("-3*q1*t^2 - (2*q1^2+4*q2)*t - 4*q1*q2"));
  CHECK(t.integrate(t.parse("t^2*q2^2")) == ParamPoly(1));
  CHECK(t.integrate(t.point_class()) == ParamPoly(1));
}

TEST_CASE("property: normal form, products and integration") {
  auto ctx = surface_ctx();
  Variety x = surface(ctx);
  Variety ix = projective_bundle(x, {x.one(), x.gen("H"), x.parse("b*pt")}, "h");
  Variety ax = projective_bundle(ix, {ix.one(), ix.gen("H"), ix.parse("a*pt")}, "hs");
  std::vector<Variety> rings{p3(), g13(), x, ix, ax};
  for (const auto& v : rings) {
    for (int i = 0; i < 25; ++i) {
      GradedClass p = testgen::random_class(v), q = testgen::random_class(v), r = testgen::random_class(v);
      CHECK(v.normal_form(p.terms()) == p);
      CHECK(p * q == q * p);
      CHECK((p * q) * r == p * (q * r));
      CHECK(p * (q + r) == p * q + p * r);
      CHECK(p * v.one() == p);
      CHECK(v.integrate(p * q) == v.integrate(q * p));
      CHECK(v.integrate(p + q) == v.integrate(p) + v.integrate(q));
      CHECK(v.integrate(p.truncated(v.dimension() - 1)) == ParamPoly(0));
    }
  }
}

TEST_CASE("property: Grothendieck relation and tower pushforward") {
  auto ctx = surface_ctx();
  Variety x = surface(ctx);
  Variety ix = projective_bundle(x, {x.one(), x.gen("H"), x.parse("b*pt")}, "h");
  Variety ax = projective_bundle(ix, {ix.one(), ix.gen("H"), ix.parse("a*pt")}, "hs");
  for (const Variety& b : {ix, ax}) {
    const BundleData* bd = b.bundle();
    GradedClass z = b.generators().size() == ix.generators().size() ? b.gen("h") : b.gen("hs");
    GradedClass rel = pow(z, bd->rank);
    for (unsigned i = 1; i <= bd->rank; ++i) {
      GradedClass term = b.pullback(bd->chern[i]) * pow(z, bd->rank - i);
      rel += (i % 2 == 1) ? -term : term;
    }
    CHECK(rel.is_zero());
    CHECK(b.integrate(pow(z, bd->rank - 1) * b.pullback(bd->base.point_class())) == ParamPoly(1));
    // Segre rule agrees with reducing powers inside the ring.
    for (unsigned k = 0; k <= b.dimension(); ++k)
      CHECK(pushforward(b, pow(z, k)) == segre_pushforward_of_power(b, k));
  }
  for (int i = 0; i < 30; ++i) {
    GradedClass c = testgen::random_class(ax, 6);
    CHECK(ax.integrate(c) == x.integrate(pushforward(ix, pushforward(ax, c))));
  }
}
