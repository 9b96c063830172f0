#pragma once

// Hand-rolled random generators for property tests.

#include <random>
#include <string>
#include <vector>

#include "focal/chow.hpp"
#include "focal/param_poly.hpp"
#include "focal/sheaf.hpp"

namespace focal::testgen {

inline std::mt19937_64& rng() {
  static std::mt19937_64 g(20240611);
  return g;
}

inline long small_int(long lo, long hi) {
  std::uniform_int_distribution<long> d(lo, hi);
  return d(rng());
}

inline Rational small_rational() {
  long den = small_int(1, 6);
  return Rational(small_int(-9, 9), den);
}

inline ParamPoly random_poly(const ContextPtr& ctx, unsigned max_terms = 4, unsigned max_exp = 2) {
  ParamPoly::Terms t;
  unsigned n = static_cast<unsigned>(small_int(0, max_terms));
  for (unsigned i = 0; i < n; ++i) {
    ParamPoly::Exponents e(ctx->size(), 0);
    for (auto& x : e) x = static_cast<unsigned>(small_int(0, max_exp));
    t[e] += small_rational();
  }
  ParamPoly::Terms clean;
  for (auto& [e, c] : t)
    if (!c.is_zero()) clean.emplace(e, c);
  return ParamPoly::from_terms(ctx, clean);
}

inline Assignment random_assignment(const ContextPtr& ctx) {
  Assignment a;
  for (const auto& n : ctx->names()) a[n] = small_rational();
  return a;
}

// Random class built from products of generators with small polynomial coefficients.
inline GradedClass random_class(const Variety& v, unsigned max_terms = 4) {
  GradedClass c = v.zero();
  unsigned n = static_cast<unsigned>(small_int(1, max_terms));
  const auto& gens = v.generators();
  for (unsigned i = 0; i < n; ++i) {
    GradedClass term = v.one();
    unsigned factors = static_cast<unsigned>(small_int(0, v.dimension()));
    for (unsigned j = 0; j < factors; ++j)
      term *= v.gen(gens[static_cast<std::size_t>(small_int(0, static_cast<long>(gens.size()) - 1))].name);
    ParamPoly coef = v.context() ? random_poly(v.context(), 2, 1) + ParamPoly(small_rational())
                                 : ParamPoly(small_rational());
    c += term.scaled(coef);
  }
  return c;
}

// Rank two sheaf with c1 = u, c2 = w on a ring with no relations up to degree 8, so
// polynomials in its Chern classes can be compared coefficient by coefficient.
struct Generic {
  ContextPtr ctx;
  Variety v;
  Sheaf e;
};

inline Generic generic_rank2() {
  auto ctx = make_context({"d"});
  VarietySpec s;
  s.name = "B";
  s.context = ctx;
  s.generators = {{"u", 1}, {"w", 2}};
  s.dimension = 8;
  // Free up to degree 8: every top monomial u^i w^j with i + 2j = 8 gets its own value.
  s.add_integral("u^8", "1");
  s.add_integral("u^6*w", "2");
  s.add_integral("u^4*w^2", "3");
  s.add_integral("u^2*w^3", "5");
  s.add_integral("w^4", "7");
  s.point_class = s.raw("u^8");
  s.tangent_chern = s.raw("1");
  Variety v = build_variety(s);
  return {ctx, v, Sheaf(ParamPoly(2), v.parse("1 + u + w"))};
}

}  // namespace focal::testgen
