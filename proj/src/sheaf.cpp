#include "focal/sheaf.hpp"

#include <map>
#include <stdexcept>
#include <tuple>

namespace focal {

namespace {

Rational factorial(unsigned k) {
  Rational r(1);
  for (unsigned i = 2; i <= k; ++i) r *= Rational(static_cast<long>(i));
  return r;
}

Rational binom(unsigned n, unsigned k) {
  if (k > n) return Rational(0);
  return factorial(n) / (factorial(k) * factorial(n - k));
}

Rational int_pow(long base, unsigned e) { return pow(Rational(base), e); }

}  // namespace

// ---- Sheaf ----

Sheaf::Sheaf(ParamPoly rank, GradedClass total_chern)
    : Sheaf(std::move(rank), total_chern, total_chern.variety().dimension()) {}

Sheaf::Sheaf(ParamPoly rank, GradedClass total_chern, unsigned known_to)
    : rank_(std::move(rank)), chern_(std::move(total_chern)), known_to_(known_to) {
  if (!(chern_.degree_zero() == ParamPoly(1)))
    throw std::invalid_argument("total Chern class must start with 1");
  chern_ = chern_.truncated(known_to_);
}

Sheaf Sheaf::trivial(const Variety& host, long rank) { return Sheaf(ParamPoly(rank), host.one()); }

Sheaf Sheaf::line(const GradedClass& c1) { return Sheaf(ParamPoly(1), c1.variety().one() + c1); }

Sheaf Sheaf::from_components(ParamPoly rank, const std::vector<GradedClass>& comps) {
  return Sheaf(std::move(rank), total(comps));
}

Sheaf Sheaf::tangent(const Variety& v) {
  return Sheaf(ParamPoly(static_cast<long>(v.dimension())), v.tangent_chern());
}

std::optional<long> Sheaf::concrete_rank() const {
  auto v = rank_.constant_value();
  if (!v || !v->is_integer()) return std::nullopt;
  return v->to_long();
}

long Sheaf::require_concrete_rank(const char* what) const {
  auto r = concrete_rank();
  if (!r) throw std::invalid_argument(std::string(what) + " requires a concrete rank, got " + rank_.to_string());
  return *r;
}

GradedClass Sheaf::c(unsigned k) const {
  if (k > known_to_) throw std::invalid_argument("Chern class beyond the known degree requested");
  return chern_.component(k);
}

std::vector<GradedClass> Sheaf::chern_classes(unsigned up_to) const {
  std::vector<GradedClass> out;
  for (unsigned k = 0; k <= up_to; ++k) out.push_back(c(k));
  return out;
}

Sheaf Sheaf::pullback(const Variety& target) const {
  // Everything is known once the classes up to the host dimension are.
  bool complete = known_to_ >= host().dimension();
  if (auto r = concrete_rank(); r && known_to_ >= static_cast<unsigned long>(*r)) complete = true;
  unsigned k = complete ? target.dimension() : std::min(known_to_, target.dimension());
  return Sheaf(rank_, target.pullback(chern_), k);
}

Sheaf VirtualSheaf::flatten() const { return difference(plus, minus); }

// ---- basic operations ----

Sheaf dual(const Sheaf& e) {
  e.require_concrete_rank("dual");
  GradedClass out = e.host().zero();
  for (unsigned k = 0; k <= e.known_to(); ++k) out += (k % 2 == 1) ? -e.c(k) : e.c(k);
  return Sheaf(e.rank(), out, e.known_to());
}

Sheaf twist_by_line(const Sheaf& e, const GradedClass& t, unsigned up_to) {
  if (!(t.variety() == e.host())) throw std::invalid_argument("twist class lives on another variety");
  if (!(t == t.component(1))) throw std::invalid_argument("twist class must have degree 1");
  unsigned n = std::min(up_to, e.known_to());
  auto comps = twist_chern(e.chern_classes(n), e.rank(), t, n);
  return Sheaf(e.rank(), total(comps), n);
}

Sheaf twist_by_line(const Sheaf& e, const GradedClass& t) { return twist_by_line(e, t, e.known_to()); }

Sheaf direct_sum(const Sheaf& e, const Sheaf& f) {
  unsigned n = std::min(e.known_to(), f.known_to());
  return Sheaf(e.rank() + f.rank(), e.total_chern() * f.total_chern(), n);
}

Sheaf difference(const Sheaf& f, const Sheaf& e) {
  unsigned n = std::min(e.known_to(), f.known_to());
  return Sheaf(f.rank() - e.rank(), f.total_chern() * series_inverse(e.total_chern()), n);
}

Sheaf tensor(const Sheaf& e, const Sheaf& f) {
  long re = e.require_concrete_rank("tensor");
  long rf = f.require_concrete_rank("tensor");
  unsigned n = std::min(e.known_to(), f.known_to());
  GradedClass ch = (chern_character(e, n) * chern_character(f, n)).truncated(n);
  Sheaf out = chern_from_character(ch, re * rf);
  return Sheaf(out.rank(), out.total_chern(), n);
}

Sheaf combine(const Sheaf& e, const Sheaf& f, CombineOp op) {
  switch (op) {
    case CombineOp::sum:
      return direct_sum(e, f);
    case CombineOp::difference:
      return difference(e, f);
    case CombineOp::tensor:
      return tensor(e, f);
  }
  throw std::invalid_argument("unknown combine operation");
}

Sheaf determinant(const Sheaf& e) {
  e.require_concrete_rank("determinant");
  return Sheaf::line(e.c(1));
}

// ---- Newton identities, ch, td ----

std::vector<GradedClass> power_sums(const std::vector<GradedClass>& c, unsigned n) {
  Variety v = c.front().variety();
  auto ck = [&](unsigned k) { return k < c.size() ? c[k] : v.zero(); };
  std::vector<GradedClass> p{v.zero()};
  for (unsigned k = 1; k <= n; ++k) {
    GradedClass s = ck(k).scaled(ParamPoly(static_cast<long>(k)));
    if (k % 2 == 0) s = -s;
    for (unsigned i = 1; i < k; ++i) {
      GradedClass t = ck(i) * p[k - i];
      s += (i % 2 == 1) ? t : -t;
    }
    p.push_back(s.component(k));
  }
  return p;
}

std::vector<GradedClass> chern_from_power_sums(const std::vector<GradedClass>& p, unsigned n) {
  Variety v = p.front().variety();
  std::vector<GradedClass> c{v.one()};
  for (unsigned k = 1; k <= n; ++k) {
    GradedClass s = v.zero();
    for (unsigned i = 1; i <= k; ++i) {
      GradedClass t = c[k - i] * p[i];
      s += (i % 2 == 1) ? t : -t;
    }
    c.push_back(s.component(k).scaled(ParamPoly(Rational(1, static_cast<long>(k)))));
  }
  return c;
}

GradedClass chern_character(const Sheaf& e, unsigned up_to) {
  long r = e.require_concrete_rank("chern_character");
  if (up_to > e.known_to()) throw std::invalid_argument("Chern character beyond the known degree");
  auto p = power_sums(e.chern_classes(up_to), up_to);
  GradedClass ch = e.host().constant(ParamPoly(r));
  for (unsigned k = 1; k <= up_to; ++k) ch += p[k].scaled(ParamPoly(Rational(1) / factorial(k)));
  return ch;
}

GradedClass chern_character(const Sheaf& e) { return chern_character(e, e.known_to()); }

Sheaf chern_from_character(const GradedClass& ch, long rank) {
  Variety v = ch.variety();
  if (!(ch.degree_zero() == ParamPoly(rank)))
    throw std::invalid_argument("degree-zero part of the Chern character differs from the rank");
  unsigned n = v.dimension();
  std::vector<GradedClass> p{v.zero()};
  for (unsigned k = 1; k <= n; ++k) p.push_back(ch.component(k).scaled(ParamPoly(factorial(k))));
  return Sheaf(ParamPoly(rank), total(chern_from_power_sums(p, n)));
}

std::vector<Rational> log_todd_series(unsigned n) {
  // (1 - e^{-x}) / x = sum (-1)^k x^k / (k+1)!
  std::vector<Rational> den(n + 1);
  for (unsigned k = 0; k <= n; ++k) den[k] = Rational(k % 2 == 0 ? 1 : -1) / factorial(k + 1);
  // q = 1 / den
  std::vector<Rational> q(n + 1);
  q[0] = Rational(1);
  for (unsigned k = 1; k <= n; ++k) {
    Rational s(0);
    for (unsigned i = 1; i <= k; ++i) s -= den[i] * q[k - i];
    q[k] = s;
  }
  // l = log q, from k q_k = sum_{i=1}^{k} i l_i q_{k-i}
  std::vector<Rational> l(n + 1);
  for (unsigned k = 1; k <= n; ++k) {
    Rational s = q[k] * Rational(static_cast<long>(k));
    for (unsigned i = 1; i < k; ++i) s -= Rational(static_cast<long>(i)) * l[i] * q[k - i];
    l[k] = s / Rational(static_cast<long>(k));
  }
  return l;
}

GradedClass todd(const Sheaf& e, unsigned up_to) {
  if (up_to > e.known_to()) throw std::invalid_argument("Todd class beyond the known degree");
  Variety v = e.host();
  auto p = power_sums(e.chern_classes(up_to), up_to);
  auto l = log_todd_series(up_to);
  GradedClass x = v.zero();
  for (unsigned k = 1; k <= up_to; ++k) x += p[k].scaled(ParamPoly(l[k]));
  GradedClass td = v.one();
  GradedClass xp = v.one();
  for (unsigned j = 1; j <= up_to; ++j) {
    xp = (xp * x).truncated(up_to);
    td += xp.scaled(ParamPoly(Rational(1) / factorial(j)));
  }
  return td.truncated(up_to);
}

GradedClass todd(const Sheaf& e) { return todd(e, e.known_to()); }

// ---- symmetric powers ----

Sheaf sym_power_concrete(const Sheaf& e, unsigned n) {
  if (e.require_concrete_rank("sym_power_concrete") != 2)
    throw std::invalid_argument("sym_power_concrete requires rank 2");
  Variety v = e.host();
  unsigned dim = e.known_to();
  GradedClass e1 = e.c(1), e2 = dim >= 2 ? e.c(2) : v.zero();
  // Power sums of the two roots: P_0 = 2, P_1 = e1, P_m = e1 P_{m-1} - e2 P_{m-2}.
  std::vector<GradedClass> proot{v.constant(ParamPoly(2)), e1};
  for (unsigned m = 2; m <= dim; ++m) proot.push_back(e1 * proot[m - 1] - e2 * proot[m - 2]);
  std::vector<GradedClass> p{v.zero()};
  for (unsigned k = 1; k <= dim; ++k) {
    GradedClass s = v.zero();
    GradedClass e2j = v.one();
    for (unsigned j = 0; 2 * j <= k; ++j) {
      // S = sum_i i^j (n-i)^{k-j}
      Rational sj(0);
      for (unsigned i = 0; i <= n; ++i)
        sj += int_pow(static_cast<long>(i), j) * int_pow(static_cast<long>(n - i), k - j);
      Rational coef = binom(k, j) * sj;
      if (2 * j == k)
        s += e2j.scaled(ParamPoly(coef));
      else
        s += (e2j * proot[k - 2 * j]).scaled(ParamPoly(coef));
      e2j *= e2;
    }
    p.push_back(s);
  }
  auto c = chern_from_power_sums(p, dim);
  return Sheaf(ParamPoly(static_cast<long>(n + 1)), total(c), dim);
}

namespace {

struct ClosedForms {
  ContextPtr ctx = make_context({"n"});
  std::map<std::tuple<unsigned, unsigned, unsigned>, ParamPoly> table;

  ClosedForms() {
    auto add = [&](unsigned k, unsigned i, unsigned j, const char* s) {
      table[{k, i, j}] = ParamPoly::parse(ctx, s);
    };
    add(1, 1, 0, "1/2*n*(n+1)");
    add(2, 2, 0, "1/24*n*(n-1)*(n+1)*(3*n+2)");
    add(2, 0, 1, "1/6*n*(n+1)*(n+2)");
    add(3, 3, 0, "1/48*n^2*(n-1)*(n-2)*(n+1)^2");
    add(3, 1, 1, "1/12*n^2*(n-1)*(n+2)*(n+1)");
    add(4, 4, 0, "1/5760*n*(n-1)*(n-2)*(n-3)*(n+1)*(15*n^3+15*n^2-10*n-8)");
    add(4, 2, 1, "1/720*n*(n-1)*(n-2)*(n+2)*(n+1)*(15*n^2-5*n-12)");
    add(4, 0, 2, "1/360*n*(n-1)*(n-2)*(n+1)*(n+2)*(5*n+12)");
  }
};

const ClosedForms& closed_forms() {
  static const ClosedForms forms;
  return forms;
}

}  // namespace

ParamPoly sym_power_closed_form(unsigned k, unsigned i, unsigned j, const ParamPoly& n) {
  const auto& f = closed_forms();
  auto it = f.table.find({k, i, j});
  if (it == f.table.end()) return ParamPoly::constant(n.context(), 0);
  const ParamPoly& u = it->second;
  ParamPoly r = ParamPoly::constant(n.context(), 0);
  for (unsigned d = u.degree_in("n") + 1; d-- > 0;)
    r = r * n + ParamPoly(*u.coefficient("n", d).constant_value());
  return r;
}

Sheaf sym_power_rank2_symbolic(const Sheaf& e, const ParamPoly& n, unsigned up_to) {
  if (up_to > 4) throw std::invalid_argument("closed forms for Sym^n are available up to c_4");
  if (e.require_concrete_rank("sym_power_rank2_symbolic") != 2)
    throw std::invalid_argument("sym_power_rank2_symbolic requires rank 2");
  Variety v = e.host();
  unsigned top = std::min({up_to, v.dimension(), e.known_to()});
  GradedClass c1 = e.c(1), c2 = top >= 2 ? e.c(2) : v.zero();
  GradedClass out = v.one();
  for (unsigned k = 1; k <= top; ++k)
    for (unsigned j = 0; 2 * j <= k; ++j) {
      unsigned i = k - 2 * j;
      out += (pow(c1, i) * pow(c2, j)).scaled(sym_power_closed_form(k, i, j, n));
    }
  return Sheaf(n + ParamPoly(1), out, top);
}

// ---- Porteous ----

GradedClass determinant(const std::vector<std::vector<GradedClass>>& m) {
  std::size_t n = m.size();
  if (n == 0) throw std::invalid_argument("empty determinant");
  if (n == 1) return m[0][0];
  GradedClass s = m[0][0].variety().zero();
  for (std::size_t col = 0; col < n; ++col) {
    std::vector<std::vector<GradedClass>> minor;
    for (std::size_t r = 1; r < n; ++r) {
      std::vector<GradedClass> row;
      for (std::size_t c = 0; c < n; ++c)
        if (c != col) row.push_back(m[r][c]);
      minor.push_back(row);
    }
    GradedClass t = m[0][col] * determinant(minor);
    s += (col % 2 == 0) ? t : -t;
  }
  return s;
}

GradedClass porteous(const VirtualSheaf& v, unsigned e, unsigned f, unsigned r) {
  if (r >= std::min(e, f)) throw std::invalid_argument("Porteous target rank must be below both ranks");
  Sheaf d = v.flatten();
  Variety host = d.host();
  unsigned size = e - r;
  auto entry = [&](long k) -> GradedClass {
    if (k < 0) return host.zero();
    if (k == 0) return host.one();
    if (static_cast<unsigned>(k) > host.dimension()) return host.zero();
    return d.c(static_cast<unsigned>(k));
  };
  std::vector<std::vector<GradedClass>> m(size);
  for (unsigned i = 0; i < size; ++i)
    for (unsigned j = 0; j < size; ++j)
      m[i].push_back(entry(static_cast<long>(f) - static_cast<long>(r) + static_cast<long>(j) -
                           static_cast<long>(i)));
  return determinant(m);
}

// ---- projective bundles ----

Sheaf relative_tangent_of_bundle(const Variety& bundle) {
  const BundleData* bd = bundle.bundle();
  if (!bd) throw std::invalid_argument("relative tangent requires a projective bundle");
  std::vector<GradedClass> dual_classes;
  for (unsigned i = 0; i <= bd->rank; ++i) {
    GradedClass ci = bundle.pullback(bd->chern[i]);
    dual_classes.push_back(i % 2 == 1 ? -ci : ci);
  }
  GradedClass zeta = bundle.gen(bundle.generators()[bd->zeta].name);
  auto comps = twist_chern(dual_classes, ParamPoly(static_cast<long>(bd->rank)), zeta, bundle.dimension());
  return Sheaf(ParamPoly(static_cast<long>(bd->rank - 1)), total(comps));
}

}  // namespace focal
