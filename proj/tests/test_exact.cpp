#include "doctest.h"
#include "focal/expression.hpp"
#include "focal/param_poly.hpp"
#include "focal/rational.hpp"
#include "generators.hpp"

using namespace focal;

TEST_CASE("rational arithmetic is exact and reduced") {
  CHECK(Rational(1, 2) + Rational(1, 3) == Rational(5, 6));
  Rational r = Rational(143040, 5760) * Rational(1);
  CHECK(r.to_string() == "149/6");
  CHECK(Rational(-4, -6).to_string() == "2/3");
  CHECK(Rational(3, -6).to_string() == "-1/2");
  CHECK_THROWS_AS(Rational(1) / Rational(0), std::domain_error);
  CHECK_THROWS(Rational(1, 0));
}

TEST_CASE("rational parsing and formatting") {
  CHECK(Rational::parse("12/8") == Rational(3, 2));
  CHECK(Rational::parse("-7") == Rational(-7));
  CHECK(Rational(5).to_fraction_string() == "5/1");
  CHECK(Rational(-3, 4).to_fraction_string() == "-3/4");
  CHECK_THROWS(Rational::parse("x/2"));
  CHECK_THROWS(Rational::parse("1/0"));
}

TEST_CASE("polynomial expansions") {
  auto ctx = make_context({"a", "b", "g", "d", "p"});
  auto P = [&](const char* s) { return ParamPoly::parse(ctx, s); };
  CHECK(P("(d-1)*(d-2)/2 - p") == P("1/2*d^2 - 3/2*d + 1 - p"));
  CHECK(P("((2*a+2*g-3)*(2*a+2*g-4))/2") == P("2*a^2+4*a*g+2*g^2-7*a-7*g+6"));
  CHECK((P("a+b") * ParamPoly(0)).is_zero());
  CHECK(P("d*(d-3)*(2*d^3+2*d^2-35*d+26)") == P("2*d^5-4*d^4-41*d^3+131*d^2-78*d"));
  CHECK((P("d^2-3*d+2") - P("(d-1)*(d-2)")).is_zero());
  CHECK_FALSE((P("2*a+2*g-2") - P("2*a+2*g-3")).is_zero());
}

TEST_CASE("polynomial evaluation") {
  auto ctx = make_context({"d", "p"});
  auto f = ParamPoly::parse(ctx, "(1/2)*(d-1)*(d-2) - p");
  CHECK(f.eval({{"d", 4}, {"p", 1}}) == Rational(2));
  auto g = ParamPoly::parse(ctx, "(1/2)*(d-2)*(d-3+2*p)");
  CHECK(g.eval({{"d", 4}, {"p", 1}}) == Rational(3));
  CHECK(ParamPoly(7).eval({}) == Rational(7));
  CHECK_THROWS(f.eval({{"d", 4}}));
  CHECK(f.substitute({{"d", 4}}) == ParamPoly::parse(ctx, "3 - p"));
}

TEST_CASE("mismatched contexts are rejected") {
  auto c1 = make_context({"a", "b"});
  auto c2 = make_context({"d"});
  auto x = ParamPoly::variable(c1, "a");
  auto y = ParamPoly::variable(c2, "d");
  CHECK_THROWS_AS(x + y, std::invalid_argument);
  CHECK(x + ParamPoly(3) == ParamPoly::parse(c1, "a+3"));
  // Structurally equal contexts are compatible.
  auto c3 = make_context({"a", "b"});
  CHECK(x == ParamPoly::variable(c3, "a"));
}

TEST_CASE("printing round-trips through the parser") {
  auto ctx = make_context({"a", "b", "g", "k2", "chi"});
  for (int i = 0; i < 200; ++i) {
    ParamPoly f = testgen::random_poly(ctx, 6, 3);
    CHECK(ParamPoly::parse(ctx, f.to_string()) == f);
  }
  CHECK(ParamPoly::parse(ctx, "0").to_string() == "0");
  CHECK(ParamPoly::parse(ctx, "-a + 1/2").to_string() == "-a + 1/2");
}

TEST_CASE("composition, coefficients and exact division") {
  auto ctx = make_context({"d", "T"});
  auto f = ParamPoly::parse(ctx, "d^2 + T*d + 3*T^2");
  CHECK(f.compose("d", ParamPoly::parse(ctx, "d-4")) == ParamPoly::parse(ctx, "(d-4)^2 + T*(d-4) + 3*T^2"));
  CHECK(f.coefficient("T", 1) == ParamPoly::parse(ctx, "d"));
  CHECK(f.coefficient("T", 0) == ParamPoly::parse(ctx, "d^2"));
  auto g = ParamPoly::parse(ctx, "(d-3)*(d+3)*(d^2+T)");
  CHECK(divide_exact(g, ParamPoly::parse(ctx, "d-3")) == ParamPoly::parse(ctx, "(d+3)*(d^2+T)"));
  CHECK_THROWS(divide_exact(g, ParamPoly::parse(ctx, "d-5")));
  CHECK(binomial(ParamPoly::parse(ctx, "d-3"), 2) == ParamPoly::parse(ctx, "(d-3)*(d-4)/2"));
  CHECK(binomial(ParamPoly(5), 2) == ParamPoly(10));
}

TEST_CASE("parser errors") {
  auto ctx = make_context({"a"});
  CHECK_THROWS(ParamPoly::parse(ctx, "a +"));
  CHECK_THROWS(ParamPoly::parse(ctx, "z"));
  CHECK_THROWS(ParamPoly::parse(ctx, "1/a"));
  CHECK_THROWS(ParamPoly::parse(ctx, "(a"));
}

TEST_CASE("property: ring axioms on random triples") {
  auto ctx = make_context({"a", "b", "g"});
  for (int i = 0; i < 150; ++i) {
    auto f = testgen::random_poly(ctx), g = testgen::random_poly(ctx), h = testgen::random_poly(ctx);
    CHECK(f + g == g + f);
    CHECK(f * g == g * f);
    CHECK((f + g) + h == f + (g + h));
    CHECK((f * g) * h == f * (g * h));
    CHECK(f * (g + h) == f * g + f * h);
    CHECK((f - f).is_zero());
  }
}

TEST_CASE("property: evaluation is a ring homomorphism") {
  auto ctx = make_context({"a", "b", "g"});
  for (int i = 0; i < 150; ++i) {
    auto f = testgen::random_poly(ctx), g = testgen::random_poly(ctx);
    auto x = testgen::random_assignment(ctx);
    CHECK((f * g).eval(x) == f.eval(x) * g.eval(x));
    CHECK((f + g).eval(x) == f.eval(x) + g.eval(x));
  }
}

TEST_CASE("property: sampling lemma agrees with canonical zero test") {
  auto ctx = make_context({"a", "b"});
  for (int i = 0; i < 80; ++i) {
    ParamPoly f = testgen::random_poly(ctx, 3, 2);
    if (testgen::small_int(0, 1) == 0) f = f - f;
    unsigned da = f.degree_in("a"), db = f.degree_in("b");
    bool all_zero = true;
    for (long x = 0; x <= da; ++x)
      for (long y = 0; y <= db; ++y)
        if (!f.eval({{"a", x}, {"b", y}}).is_zero()) all_zero = false;
    CHECK(all_zero == f.is_zero());
  }
}
