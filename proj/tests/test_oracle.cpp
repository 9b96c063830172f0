#include <cstdlib>

#include "doctest.h"
#include "focal/oracle.hpp"
#include "focal/sheaf.hpp"
#include "focal/spaces.hpp"
#include "generators.hpp"

using namespace focal;
using namespace focal::oracle;

namespace {

ParamPoly C(const char* s) { return ParamPoly::parse(chern_context(), s); }

// c_k of Sym^n(E) written in c1 = u, c2 = w on the generic test ring.
GradedClass on_generic(const testgen::Generic& g, const ParamPoly& ck) {
  GradedClass out = g.v.zero();
  for (const auto& [e, c] : ck.terms())
    out += (pow(g.v.gen("u"), e[0]) * pow(g.v.gen("w"), e[1])).scaled(ParamPoly(c));
  return out;
}

}  // namespace

TEST_CASE("splitting oracle small cases") {
  auto s2 = splitting_oracle_sym(2);
  CHECK(s2[1] == C("3*c1"));
  CHECK(s2[2] == C("2*c1^2 + 4*c2"));
  CHECK(s2[3] == C("4*c1*c2"));
  auto s0 = splitting_oracle_sym(0);
  REQUIRE(s0.size() == 2);
  CHECK(s0[0] == ParamPoly(1));
  CHECK(s0[1].is_zero());
  // Roots 4, 3, 2, 1, 0 at alpha = 1, beta = 0.
  CHECK(splitting_oracle_sym(4)[4].eval({{"c1", 1}, {"c2", 0}}) == Rational(24));
  CHECK(splitting_oracle_sym(3)[4] == C("18*c1^2*c2 + 9*c2^2"));
}

TEST_CASE("property: oracle agrees with the concrete symmetric powers") {
  auto g = testgen::generic_rank2();
  for (unsigned n = 0; n <= 10; ++n) {
    auto oc = splitting_oracle_sym(n);
    Sheaf conc = sym_power_concrete(g.e, n);
    for (unsigned k = 1; k < oc.size() && k <= 8; ++k) CHECK(on_generic(g, oc[k]) == conc.c(k));
  }
}

TEST_CASE("interpolation") {
  auto ctx = make_context({"d"});
  std::vector<std::pair<Rational, Rational>> pts;
  for (long x = 0; x < 5; ++x) pts.emplace_back(Rational(x), Rational(x * x * x - 2 * x + 7));
  CHECK(interpolate(pts, ctx, "d") == ParamPoly::parse(ctx, "d^3 - 2*d + 7"));
}

TEST_CASE("fitted coefficients equal the shipped closed forms") {
  auto ctx = make_context({"d"});
  ParamPoly d = ParamPoly::variable(ctx, "d");
  const unsigned table[][3] = {{1, 1, 0}, {2, 2, 0}, {2, 0, 1}, {3, 3, 0}, {3, 1, 1},
                               {4, 4, 0}, {4, 2, 1}, {4, 0, 2}};
  for (const auto& row : table) {
    CAPTURE(row[0]);
    CAPTURE(row[1]);
    CHECK(fit_sym_coefficient(row[0], row[1], row[2], ctx, "d") == sym_power_closed_form(row[0], row[1], row[2], d));
  }
}

TEST_CASE("certify_identity") {
  auto ctx = make_context({"x", "y"});
  ParamPoly x = ParamPoly::variable(ctx, "x");
  auto c = certify_identity(x - x, ParamPoly(0));
  CHECK(c.equal());
  CHECK(c.sample_count >= 1);

  auto u = certify_identity(pow(x, 2), x);
  CHECK_FALSE(u.equal());
  REQUIRE(u.witness.has_value());
  CHECK(pow(x, 2).eval(*u.witness) == *u.lhs_at_witness);
  CHECK_FALSE(*u.lhs_at_witness == *u.rhs_at_witness);

  ParamPoly y = ParamPoly::variable(ctx, "y");
  auto e = certify_identity(pow(x + y, 3), pow(x, 3) + pow(y, 3) + (x * y * (x + y)).scaled(Rational(3)));
  CHECK(e.equal());
  CHECK(e.degree_bounds["x"] == 3);
  CHECK(e.sample_count == 16);
}

TEST_CASE("FOCAL_SAMPLES raises the sampling floor") {
  auto ctx = make_context({"x"});
  ParamPoly x = ParamPoly::variable(ctx, "x");
  setenv("FOCAL_SAMPLES", "9", 1);
  CHECK(certify_identity(x, x).sample_count == 9);
  setenv("FOCAL_SAMPLES", "0", 1);
  CHECK(certify_identity(pow(x, 4), pow(x, 4)).sample_count == 5);
  unsetenv("FOCAL_SAMPLES");
}

TEST_CASE("linkage identity on A_X") {
  auto ctx = spaces::congruence_context();
  auto x = spaces::formal_congruence_surface(ctx);
  auto t = spaces::tower_ix_ax(x);
  const Variety& ax = t.ax.variety;
  VirtualSheaf v{t.ax.sheaf("TJ"), t.ax.sheaf("T")};
  GradedClass r = porteous(v, 4, 5, 3);
  GradedClass f = ax.parse("2*h*hs + h*H + hs*H + h*K + hs*K - H^2 + (12*chi - k2)*pt");
  CHECK(certify_identity(t.ax.cls("A") * t.ax.cls("B") - r, f).equal());
  CHECK_FALSE(certify_identity(t.ax.cls("A") * t.ax.cls("B"), f).equal());
}
